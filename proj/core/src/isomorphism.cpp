#include "efglat/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace efglat {

namespace {

using Signature = std::array<std::size_t, 5>;

Signature signature(const Poset& p, std::size_t i) {
  return {p.lower_covers(i).size(), p.upper_covers(i).size(), p.rank(i), p.down_set(i).count(),
          p.up_set(i).count()};
}

class Matcher {
 public:
  Matcher(const Poset& p1, const Poset& p2)
      : p1_(p1), p2_(p2), order_(p1.linear_extension()), phi_(p1.size(), kUnset),
        used_(p2.size(), 0) {
    sig1_.reserve(p1.size());
    sig2_.reserve(p2.size());
    for (std::size_t i = 0; i < p1.size(); ++i) sig1_.push_back(signature(p1, i));
    for (std::size_t i = 0; i < p2.size(); ++i) sig2_.push_back(signature(p2, i));
  }

  bool signatures_agree() const {
    std::map<Signature, long> balance;
    for (const auto& s : sig1_) ++balance[s];
    for (const auto& s : sig2_) --balance[s];
    return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
  }

  std::optional<PosetMap> run() {
    if (!search(0)) return std::nullopt;
    return phi_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t depth, std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < depth; ++k) {
      std::size_t z = order_[k];
      std::size_t w = phi_[z];
      if (p1_.leq(z, x) != p2_.leq(w, y) || p1_.leq(x, z) != p2_.leq(y, w)) return false;
    }
    return true;
  }

  bool try_candidate(std::size_t depth, std::size_t x, std::size_t y) {
    if (used_[y] || sig2_[y] != sig1_[x] || !consistent(depth, x, y)) return false;
    phi_[x] = y;
    used_[y] = 1;
    if (search(depth + 1)) return true;
    used_[y] = 0;
    phi_[x] = kUnset;
    return false;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    std::size_t x = order_[depth];
    const auto& below = p1_.lower_covers(x);
    if (!below.empty()) {
      // The image must cover the image of any lower cover of x, which the
      // linear extension has already placed.
      for (auto y : p2_.upper_covers(phi_[below.front()]))
        if (try_candidate(depth, x, y)) return true;
      return false;
    }
    for (std::size_t y = 0; y < p2_.size(); ++y)
      if (try_candidate(depth, x, y)) return true;
    return false;
  }

  const Poset& p1_;
  const Poset& p2_;
  std::vector<std::size_t> order_;
  std::vector<Signature> sig1_, sig2_;
  PosetMap phi_;
  std::vector<char> used_;
};

}  // namespace

std::optional<PosetMap> poset_isomorphic(const Poset& p1, const Poset& p2) {
  if (p1.size() != p2.size() || p1.covers().size() != p2.covers().size()) return std::nullopt;
  Matcher m(p1, p2);
  if (!m.signatures_agree()) return std::nullopt;
  return m.run();
}

bool is_order_isomorphism(const Poset& p1, const Poset& p2, const PosetMap& phi) {
  const std::size_t n = p1.size();
  if (p2.size() != n || phi.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto y : phi) {
    if (y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p1.leq(i, j) != p2.leq(phi[i], phi[j])) return false;
  return true;
}

std::vector<std::pair<std::string, std::string>> label_map(const Poset& p1, const Poset& p2,
                                                           const PosetMap& phi) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out.emplace_back(p1.label(i), p2.label(phi[i]));
  return out;
}

}  // namespace efglat
