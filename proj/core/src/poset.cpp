#include "efglat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "efglat/error.hpp"
#include "labels.hpp"

namespace efglat {

namespace {

// Names two distinct elements on a cycle among the nodes Kahn's algorithm
// could not release. Each stuck node has a stuck predecessor, so walking
// predecessors must revisit a node.
std::pair<std::size_t, std::size_t> cycle_witness(const std::vector<std::vector<std::size_t>>& succ,
                                                  const std::vector<std::size_t>& remaining) {
  const std::size_t n = succ.size();
  std::vector<std::size_t> stuck_pred(n, n);
  for (std::size_t a = 0; a < n; ++a)
    if (remaining[a] != 0)
      for (auto b : succ[a])
        if (remaining[b] != 0 && stuck_pred[b] == n) stuck_pred[b] = a;
  std::size_t v = 0;
  while (remaining[v] == 0) ++v;
  std::vector<char> seen(n, 0);
  while (!seen[v]) {
    seen[v] = 1;
    v = stuck_pred[v];
  }
  std::size_t u = stuck_pred[v];
  return {std::min(u, v), std::max(u, v)};
}

}  // namespace

namespace detail {

void check_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& label = labels[i];
    if (label.empty()) throw Error(Errc::InvalidLabel, "empty label");
    for (char ch : label) {
      auto c = static_cast<unsigned char>(ch);
      if (c <= ' ' || c == 0x7f)
        throw Error(Errc::InvalidLabel, "label '" + label + "' contains whitespace or control bytes");
    }
    if (!seen.emplace(label, i).second)
      throw Error(Errc::DuplicateLabel, "label '" + label + "' appears twice");
  }
}

}  // namespace detail

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Poset::linear_extension() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
  return order;
}

Poset build_poset(std::vector<std::string> labels, const std::vector<CoverPair>& pairs) {
  const std::size_t n = labels.size();
  detail::check_labels(labels);

  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n)
      throw Error(Errc::IndexOutOfRange, "cover pair references index beyond " + std::to_string(n));
    if (a == b) throw Error(Errc::SelfCover, labels[a] + "<" + labels[a]);
    succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Kahn's algorithm; the smallest ready index goes first so the order is
  // stable across runs.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& s : succ)
    for (auto b : s) ++indegree[b];
  std::vector<std::size_t> topo;
  topo.reserve(n);
  {
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
      if (indegree[i] == 0) ready.push_back(i);
    std::vector<std::size_t> remaining = indegree;
    while (!ready.empty()) {
      std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
      std::size_t v = ready.back();
      ready.pop_back();
      topo.push_back(v);
      for (auto w : succ[v]) {
        if (--remaining[w] == 0) {
          ready.push_back(w);
          std::push_heap(ready.begin(), ready.end(), std::greater<>{});
        }
      }
    }
    if (topo.size() != n) {
      auto [a, b] = cycle_witness(succ, remaining);
      throw Error(Errc::CycleDetected,
                  labels[a] + " and " + labels[b] + " would be both below and above each other");
    }
  }

  Poset p;
  p.up_.assign(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    std::size_t v = *it;
    p.up_[v].set(v);
    for (auto w : succ[v]) p.up_[v] |= p.up_[w];
  }
  p.down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].for_each([&](std::size_t j) { p.down_[j].set(i); });

  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : succ[a]) {
      Bitset between = p.up_[a] & p.down_[b];
      between.reset(a);
      between.reset(b);
      if (between.none()) p.covers_.emplace_back(a, b);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());

  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (auto [a, b] : p.covers_) {
    p.upper_[a].push_back(b);
    p.lower_[b].push_back(a);
  }
  for (auto& l : p.lower_) std::sort(l.begin(), l.end());

  p.rank_.assign(n, 0);
  for (auto v : topo)
    for (auto w : p.upper_[v]) p.rank_[w] = std::max(p.rank_[w], p.rank_[v] + 1);

  p.labels_ = std::move(labels);
  return p;
}

Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<CoverPair> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    if (ia == index.end()) throw Error(Errc::UnknownLabel, "'" + a + "' is not an element");
    auto ib = index.find(b);
    if (ib == index.end()) throw Error(Errc::UnknownLabel, "'" + b + "' is not an element");
    indexed.emplace_back(ia->second, ib->second);
  }
  return build_poset(std::move(labels), indexed);
}

Bitset maximal_elements(const Poset& p) {
  Bitset out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.upper_covers(i).empty()) out.set(i);
  return out;
}

Bitset minimal_elements(const Poset& p) {
  Bitset out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.lower_covers(i).empty()) out.set(i);
  return out;
}

bool is_filter(const Poset& p, const Bitset& subset) {
  if (subset.size() != p.size())
    throw Error(Errc::IndexOutOfRange, "subset over " + std::to_string(subset.size()) +
                                           " indices given for a poset of " +
                                           std::to_string(p.size()) + " elements");
  bool closed = true;
  subset.for_each([&](std::size_t i) {
    if (closed && !p.up_set(i).is_subset_of(subset)) closed = false;
  });
  return closed;
}

std::vector<Bitset> enumerate_filters(const Poset& p, const FilterOptions& options) {
  const std::size_t n = p.size();
  if (n > options.max_elements)
    throw Error(Errc::TooLarge, std::to_string(n) + " elements exceed the filter enumeration cap of " +
                                    std::to_string(options.max_elements));

  // Decide elements from the top down. An element may join the filter only
  // when all of its upper covers already did, so every leaf is a filter and
  // no branch dies.
  std::vector<std::size_t> order = p.linear_extension();
  std::reverse(order.begin(), order.end());

  std::vector<Bitset> out;
  Bitset current(n);
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      out.push_back(current);
      return;
    }
    std::size_t x = order[depth];
    self(self, depth + 1);
    const auto& ups = p.upper_covers(x);
    if (std::all_of(ups.begin(), ups.end(), [&](std::size_t u) { return current.test(u); })) {
      current.set(x);
      self(self, depth + 1);
      current.reset(x);
    }
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return index_lex_less(a, b);
  });
  return out;
}

std::vector<Bitset> filter_covers(const Poset& p, const Bitset& f) {
  if (!is_filter(p, f)) throw Error(Errc::NotAFilter, format_subset(p, f) + " is not upward closed");
  std::vector<Bitset> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (f.test(x)) continue;
    // x is maximal in the complement iff everything strictly above it is in f.
    const auto& ups = p.upper_covers(x);
    if (std::all_of(ups.begin(), ups.end(), [&](std::size_t u) { return f.test(u); })) {
      Bitset g = f;
      g.set(x);
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::string format_subset(const Poset& p, const Bitset& subset) {
  std::string s = "{";
  bool first = true;
  subset.for_each([&](std::size_t i) {
    if (!first) s += ',';
    first = false;
    s += i < p.size() ? p.label(i) : std::to_string(i);
  });
  s += '}';
  return s;
}

Poset chain_poset(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  std::vector<CoverPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
    if (i > 0) pairs.emplace_back(i - 1, i);
  }
  return build_poset(std::move(labels), pairs);
}

Poset antichain_poset(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return build_poset(std::move(labels), std::vector<CoverPair>{});
}

}  // namespace efglat
