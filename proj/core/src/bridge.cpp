#include "efglat/bridge.hpp"

#include <algorithm>
#include <limits>

#include "efglat/error.hpp"

namespace efglat {

namespace {

std::string config_name(std::size_t c) { return "c" + std::to_string(c); }

std::string pick_sink_label(const Poset& j, const std::string& base) {
  if (!j.index_of(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!j.index_of(candidate)) return candidate;
  }
}

}  // namespace

EfgInstance lattice_to_efg(const Lattice& l, const BridgeOptions& options) {
  if (!l.distributive())
    throw Error(Errc::NotDistributive, describe(l, *l.verdict().witness));

  const Poset j = induced_order(l);
  EfgInstance e;
  FiringGraph& g = e.graph;
  g.vertices = j.labels();
  g.sink = g.vertices.size();
  g.vertices.push_back(pick_sink_label(j, options.sink_label));

  // Every edge is listed tail first, so the initial orientation is all zeros.
  for (auto [lo, hi] : j.covers()) g.edges.push_back(Edge{lo, hi});
  maximal_elements(j).for_each([&](std::size_t top) { g.edges.push_back(Edge{g.sink, top}); });
  e.initial = Orientation(g.edges.size());
  return e;
}

IsoCertificate verify_isomorphism(const Lattice& l, const ConfigSpace& s) {
  IsoCertificate cert;
  cert.irreducibles = induced_order(l);
  const Poset& jp = cert.irreducibles;
  const FiringGraph& g = s.graph;
  const std::size_t nj = jp.size();

  // Game vertices correspond to J by label.
  std::vector<std::size_t> vertex_to_j(g.vertices.size(), nj);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (v == g.sink) continue;
    auto k = jp.index_of(g.vertices[v]);
    if (!k)
      throw Error(Errc::NotBijective, "vertex " + g.vertices[v] + " is not a join-irreducible");
    vertex_to_j[v] = *k;
  }
  if (g.vertices.size() != nj + 1)
    throw Error(Errc::NotBijective, std::to_string(g.vertices.size() - 1) +
                                        " non-sink vertices for " + std::to_string(nj) +
                                        " join-irreducibles");

  cert.config_to_filter.reserve(s.size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    Bitset f(nj);
    const ShotVector& shots = s.shots[c];
    for (std::size_t v = 0; v < shots.size(); ++v) {
      if (shots[v] == 0) continue;
      if (shots[v] > 1 || v == g.sink)
        throw Error(Errc::NotAFilter, config_name(c) + ": shots " + format_shots(g, shots) +
                                          " are not a set of join-irreducibles");
      f.set(vertex_to_j[v]);
    }
    if (!is_filter(jp, f))
      throw Error(Errc::NotAFilter,
                  config_name(c) + ": shot set " + format_subset(jp, f) + " is not upward closed");
    cert.config_to_filter.push_back(std::move(f));
  }

  auto element_filters = birkhoff_filters(l);
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!cert.filter_to_element.emplace(element_filters[x], x).second)
      throw Error(Errc::NotBijective, "lattice elements " +
                                          l.base().label(cert.filter_to_element.at(element_filters[x])) +
                                          " and " + l.base().label(x) + " share a filter");
  }

  if (s.size() != l.size())
    throw Error(Errc::NotBijective, std::to_string(s.size()) + " configurations for " +
                                        std::to_string(l.size()) + " lattice elements");
  std::vector<char> hit(l.size(), 0);
  cert.composed.reserve(s.size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    auto it = cert.filter_to_element.find(cert.config_to_filter[c]);
    if (it == cert.filter_to_element.end())
      throw Error(Errc::NotBijective, config_name(c) + ": no lattice element for shot set " +
                                          format_subset(jp, cert.config_to_filter[c]));
    if (hit[it->second])
      throw Error(Errc::NotBijective, config_name(c) + " maps to " + l.base().label(it->second) +
                                          " which is already taken");
    hit[it->second] = 1;
    cert.composed.push_back(it->second);
  }

  const Poset order = space_order(s);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (order.leq(a, b) != l.base().leq(cert.composed[a], cert.composed[b]))
        throw Error(Errc::OrderMismatch, "(" + config_name(a) + "," + config_name(b) + ")");

  if (s.successors.size() != l.base().covers().size())
    throw Error(Errc::OrderMismatch, std::to_string(s.successors.size()) + " firings for " +
                                         std::to_string(l.base().covers().size()) + " lattice covers");
  for (const Firing& f : s.successors) {
    const auto& lower = l.base().lower_covers(cert.composed[f.from]);
    if (!std::binary_search(lower.begin(), lower.end(), cert.composed[f.to]))
      throw Error(Errc::OrderMismatch,
                  "(" + config_name(f.from) + "," + config_name(f.to) + ") is not a lattice cover");
  }

  for (std::size_t c = 0; c < s.size(); ++c) {
    const Bitset& shot = cert.config_to_filter[c];
    Bitset expected(nj);
    for (std::size_t x = 0; x < nj; ++x) {
      if (shot.test(x)) continue;
      const auto& ups = jp.upper_covers(x);
      if (std::all_of(ups.begin(), ups.end(), [&](std::size_t u) { return shot.test(u); }))
        expected.set(x);
    }
    Bitset actual(nj);
    fireable(g, s.configs[c]).for_each([&](std::size_t v) { actual.set(vertex_to_j[v]); });
    if (actual != expected)
      throw Error(Errc::FireableMismatch, config_name(c) + ": fireable " + format_subset(jp, actual) +
                                              ", maximal outside shot set " +
                                              format_subset(jp, expected));
  }
  return cert;
}

Simplification simplify_efg(const EfgInstance& e, const ExploreOptions& options,
                            const BridgeOptions& bridge) {
  ConfigSpace original = explore(e, options);
  auto propp = verify_propp(original);
  if (!propp.holds) throw Error(Errc::PropViolation, propp.witness);

  Lattice l = check_lattice(space_order(original));
  if (!l.distributive()) throw Error(Errc::PropViolation, describe(l, *l.verdict().witness));

  EfgInstance game = lattice_to_efg(l, bridge);
  // The rebuilt space has exactly as many configs as the original one, so
  // the edge cap has already done its job.
  ConfigSpace space = explore(game, ExploreOptions{std::numeric_limits<std::size_t>::max()});
  if (!space.simple) throw Error(Errc::PropViolation, "rebuilt game is not simple");
  IsoCertificate cert = verify_isomorphism(l, space);
  return Simplification{std::move(l), std::move(game), std::move(space), std::move(cert)};
}

}  // namespace efglat
