#include "efglat/lattice.hpp"

#include <unordered_map>

#include "efglat/error.hpp"

namespace efglat {

namespace {

// The greatest element of `bounds` whose own down set is all of `bounds`,
// i.e. the supremum of the set inside itself, if there is one. `cone`
// supplies down sets (for meets) or up sets (for joins).
template <typename Cone>
std::optional<std::size_t> extremum(const Bitset& bounds, Cone&& cone) {
  const std::size_t want = bounds.count();
  if (want == 0) return std::nullopt;
  std::size_t best = Bitset::npos, best_size = 0;
  bounds.for_each([&](std::size_t i) {
    std::size_t s = cone(i).count();
    if (s > best_size) {
      best_size = s;
      best = i;
    }
  });
  if (best_size != want) return std::nullopt;
  return best;
}

}  // namespace

Lattice check_lattice(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw Error(Errc::EmptyPoset, "a lattice needs at least one element");

  Lattice l;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  auto down = [&](std::size_t i) -> const Bitset& { return p.down_set(i); };
  auto up = [&](std::size_t i) -> const Bitset& { return p.up_set(i); };

  for (std::size_t a = 0; a < n; ++a) {
    l.meet_[a * n + a] = l.join_[a * n + a] = static_cast<std::uint32_t>(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      auto m = extremum(p.down_set(a) & p.down_set(b), down);
      if (!m)
        throw Error(Errc::NotALattice,
                    "(" + p.label(a) + "," + p.label(b) + ") have no greatest lower bound");
      auto j = extremum(p.up_set(a) & p.up_set(b), up);
      if (!j)
        throw Error(Errc::NotALattice,
                    "(" + p.label(a) + "," + p.label(b) + ") have no least upper bound");
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint32_t>(*m);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint32_t>(*j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (p.up_set(i).count() == n) l.bottom_ = i;
    if (p.down_set(i).count() == n) l.top_ = i;
  }
  l.base_ = p;
  l.verdict_ = is_distributive(l);
  return l;
}

bool law_holds(const Lattice& l, DistributiveLaw law, std::size_t a, std::size_t b, std::size_t c) {
  if (law == DistributiveLaw::JoinOverMeet)
    return l.meet(l.join(a, b), l.join(a, c)) == l.join(a, l.meet(b, c));
  return l.join(l.meet(a, b), l.meet(a, c)) == l.meet(a, l.join(b, c));
}

DistributivityVerdict distributive_by_triples(const Lattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (auto law : {DistributiveLaw::JoinOverMeet, DistributiveLaw::MeetOverJoin})
          if (!law_holds(l, law, a, b, c)) return {false, DistributivityWitness{a, b, c, law}};
  return {true, std::nullopt};
}

DistributivityVerdict is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  const Poset& p = l.base();
  Bitset irreducible(n);
  for (std::size_t i = 0; i < n; ++i)
    if (p.lower_covers(i).size() == 1) irreducible.set(i);

  std::vector<Bitset> below(n);
  for (std::size_t x = 0; x < n; ++x) below[x] = p.down_set(x) & irreducible;

  // x -> J n down(x) always preserves meets and is injective on a finite
  // lattice; the lattice is distributive iff it also preserves joins.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (below[l.join(x, y)] != (below[x] | below[y])) return distributive_by_triples(l);
    }
  }
  return {true, std::nullopt};
}

std::string describe(const Lattice& l, const DistributivityWitness& w) {
  const auto& p = l.base();
  const std::string a = p.label(w.a), b = p.label(w.b), c = p.label(w.c);
  std::string s = "(" + a + "," + b + "," + c + ") violates ";
  if (w.law == DistributiveLaw::JoinOverMeet) {
    s += "(a v b) ^ (a v c) = a v (b ^ c): left " +
         p.label(l.meet(l.join(w.a, w.b), l.join(w.a, w.c))) + ", right " +
         p.label(l.join(w.a, l.meet(w.b, w.c)));
  } else {
    s += "(a ^ b) v (a ^ c) = a ^ (b v c): left " +
         p.label(l.join(l.meet(w.a, w.b), l.meet(w.a, w.c))) + ", right " +
         p.label(l.meet(w.a, l.join(w.b, w.c)));
  }
  return s;
}

JoinIrreducibleSet join_irreducibles(const Lattice& l) {
  JoinIrreducibleSet out;
  const auto& p = l.base();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& lower = p.lower_covers(i);
    if (lower.size() == 1) {
      out.members.push_back(i);
      out.covered_by.push_back(lower.front());
    }
  }
  return out;
}

Poset induced_order(const Lattice& l) {
  const auto j = join_irreducibles(l);
  const auto& p = l.base();
  std::vector<std::string> labels;
  labels.reserve(j.members.size());
  for (auto m : j.members) labels.push_back(p.label(m));
  std::vector<CoverPair> pairs;
  for (std::size_t a = 0; a < j.members.size(); ++a)
    for (std::size_t b = 0; b < j.members.size(); ++b)
      if (a != b && p.leq(j.members[a], j.members[b])) pairs.emplace_back(a, b);
  return build_poset(std::move(labels), pairs);
}

Lattice filter_lattice(const Poset& p, const FilterOptions& options) {
  auto filters = enumerate_filters(p, options);
  const std::size_t n = filters.size();
  std::unordered_map<Bitset, std::size_t> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(filters[i], i);

  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<CoverPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(format_subset(p, filters[i]));
    // A larger filter is a smaller element.
    for (const auto& g : filter_covers(p, filters[i])) pairs.emplace_back(index.at(g), i);
  }

  Lattice l;
  l.base_ = build_poset(std::move(labels), pairs);
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto m = static_cast<std::uint32_t>(index.at(filters[a] | filters[b]));
      auto j = static_cast<std::uint32_t>(index.at(filters[a] & filters[b]));
      l.meet_[a * n + b] = l.meet_[b * n + a] = m;
      l.join_[a * n + b] = l.join_[b * n + a] = j;
    }
  }
  l.top_ = 0;       // the empty filter
  l.bottom_ = n - 1;  // the whole poset
  l.verdict_ = is_distributive(l);
  return l;
}

std::vector<Bitset> birkhoff_filters(const Lattice& l) {
  const auto j = join_irreducibles(l);
  std::vector<Bitset> out;
  out.reserve(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    Bitset f(j.members.size());
    for (std::size_t k = 0; k < j.members.size(); ++k)
      if (!l.base().leq(j.members[k], x)) f.set(k);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace efglat
