#include "efglat/efg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "efglat/error.hpp"
#include "efglat/lattice.hpp"
#include "labels.hpp"

namespace efglat {

namespace {

std::vector<std::vector<std::size_t>> incidence(const FiringGraph& g) {
  std::vector<std::vector<std::size_t>> inc(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    inc[g.edges[e].first].push_back(e);
    inc[g.edges[e].second].push_back(e);
  }
  return inc;
}

bool can_fire(const FiringGraph& g, const Orientation& c, const std::vector<std::size_t>& edges_at,
              std::size_t v) {
  if (v == g.sink || edges_at.empty()) return false;
  return std::all_of(edges_at.begin(), edges_at.end(),
                     [&](std::size_t e) { return head(g, c, e) == v; });
}

}  // namespace

std::optional<std::size_t> FiringGraph::index_of(std::string_view label) const {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t tail(const FiringGraph& g, const Orientation& c, std::size_t edge) {
  const Edge& e = g.edges[edge];
  return c.reversed.test(edge) ? e.second : e.first;
}

std::size_t head(const FiringGraph& g, const Orientation& c, std::size_t edge) {
  const Edge& e = g.edges[edge];
  return c.reversed.test(edge) ? e.first : e.second;
}

const EfgInstance& validate_efg(const EfgInstance& e) {
  const FiringGraph& g = e.graph;
  const std::size_t n = g.vertices.size();
  detail::check_labels(g.vertices);
  if (g.sink >= n)
    throw Error(Errc::BadSink, "sink index " + std::to_string(g.sink) + " but only " +
                                   std::to_string(n) + " vertices");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& edge : g.edges) {
    if (edge.first >= n || edge.second >= n)
      throw Error(Errc::IndexOutOfRange, "edge endpoint beyond vertex count " + std::to_string(n));
    if (edge.first == edge.second)
      throw Error(Errc::SelfLoop, g.vertices[edge.first] + "-" + g.vertices[edge.first]);
    if (!seen.emplace(std::minmax(edge.first, edge.second)).second)
      throw Error(Errc::DuplicateEdge,
                  g.vertices[edge.first] + "-" + g.vertices[edge.second] + " listed twice");
  }
  if (e.initial.size() != g.edges.size())
    throw Error(Errc::ArityMismatch, "orientation has " + std::to_string(e.initial.size()) +
                                         " directions for " + std::to_string(g.edges.size()) +
                                         " edges");

  const auto inc = incidence(g);
  std::vector<char> reached(n, 0);
  std::deque<std::size_t> queue{g.sink};
  reached[g.sink] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (auto ei : inc[v]) {
      const Edge& edge = g.edges[ei];
      std::size_t w = edge.first == v ? edge.second : edge.first;
      if (!reached[w]) {
        reached[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!reached[v])
      throw Error(Errc::Disconnected,
                  g.vertices[v] + " is not connected to the sink " + g.vertices[g.sink]);
  return e;
}

Bitset fireable(const FiringGraph& g, const Orientation& c) {
  const auto inc = incidence(g);
  Bitset out(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (can_fire(g, c, inc[v], v)) out.set(v);
  return out;
}

Orientation fire(const FiringGraph& g, const Orientation& c, std::size_t v) {
  if (v >= g.vertices.size())
    throw Error(Errc::NotFireable, "vertex index " + std::to_string(v) + " does not exist");
  std::vector<std::size_t> edges_at;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (g.edges[e].first == v || g.edges[e].second == v) edges_at.push_back(e);
  if (!can_fire(g, c, edges_at, v)) {
    std::string why = v == g.sink        ? "it is the sink"
                      : edges_at.empty() ? "it has no edges"
                                         : "it has an outgoing edge";
    throw Error(Errc::NotFireable, g.vertices[v] + ": " + why);
  }
  Orientation next = c;
  for (auto e : edges_at) next.reversed.flip(e);
  return next;
}

ConfigSpace explore(const EfgInstance& e, const ExploreOptions& options) {
  validate_efg(e);
  const FiringGraph& g = e.graph;
  if (g.edges.size() > options.max_edges)
    throw Error(Errc::TooLarge, std::to_string(g.edges.size()) + " edges exceed the exploration cap of " +
                                    std::to_string(options.max_edges));

  const std::size_t n = g.vertices.size();
  const auto inc = incidence(g);

  ConfigSpace s;
  s.graph = g;
  std::unordered_map<Bitset, std::size_t> index;
  auto add = [&](Orientation c, ShotVector shots) {
    index.emplace(c.reversed, s.configs.size());
    s.configs.push_back(std::move(c));
    s.shots.push_back(std::move(shots));
    s.outgoing.emplace_back();
    s.incoming.emplace_back();
  };
  add(e.initial, ShotVector(n, 0));

  for (std::size_t cur = 0; cur < s.configs.size(); ++cur) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!can_fire(g, s.configs[cur], inc[v], v)) continue;
      Orientation next = s.configs[cur];
      for (auto ei : inc[v]) next.reversed.flip(ei);
      ShotVector shots = s.shots[cur];
      ++shots[v];

      std::size_t target;
      auto it = index.find(next.reversed);
      if (it == index.end()) {
        target = s.configs.size();
        add(std::move(next), std::move(shots));
      } else {
        target = it->second;
        if (s.shots[target] != shots)
          throw Error(Errc::ShotSetConflict,
                      "c" + std::to_string(target) + " reached with shots " + format_shots(g, shots) +
                          " after " + format_shots(g, s.shots[target]));
      }
      s.outgoing[cur].push_back(s.successors.size());
      s.incoming[target].push_back(s.successors.size());
      s.successors.push_back(Firing{cur, target, v});
    }
  }

  s.simple = std::all_of(s.shots.begin(), s.shots.end(), [](const ShotVector& sv) {
    return std::all_of(sv.begin(), sv.end(), [](std::uint32_t k) { return k <= 1; });
  });
  return s;
}

const ShotVector& shot_set(const ConfigSpace& s, std::size_t config) { return s.shots.at(config); }

bool is_simple(const ConfigSpace& s) { return s.simple; }

std::string format_shots(const FiringGraph& g, const ShotVector& shots) {
  std::string out = "{";
  bool first = true;
  for (std::size_t v = 0; v < shots.size(); ++v) {
    if (shots[v] == 0) continue;
    if (!first) out += ',';
    first = false;
    out += g.vertices[v];
    if (shots[v] > 1) out += "*" + std::to_string(shots[v]);
  }
  return out + "}";
}

Poset space_order(const ConfigSpace& s) {
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) labels.push_back("c" + std::to_string(i));
  std::vector<CoverPair> pairs;
  pairs.reserve(s.successors.size());
  for (const auto& f : s.successors) pairs.emplace_back(f.to, f.from);
  return build_poset(std::move(labels), pairs);
}

ProppVerdict verify_propp(const ConfigSpace& s) {
  Poset order;
  try {
    order = space_order(s);
  } catch (const Error& err) {
    return {false, std::string("successor relation is not acyclic: ") + err.what()};
  }
  if (order.down_set(0).count() != order.size())
    return {false, "initial configuration is not the maximum"};
  try {
    Lattice l = check_lattice(order);
    if (!l.distributive()) return {false, describe(l, *l.verdict().witness)};
  } catch (const Error& err) {
    return {false, err.what()};
  }
  return {};
}

std::vector<std::size_t> sample_firing_path(const ConfigSpace& s, std::size_t config,
                                            std::mt19937_64& rng) {
  std::vector<std::size_t> path;
  while (config != 0) {
    const auto& in = s.incoming.at(config);
    if (in.empty())
      throw Error(Errc::IndexOutOfRange, "c" + std::to_string(config) + " has no predecessor");
    std::uniform_int_distribution<std::size_t> pick(0, in.size() - 1);
    const Firing& f = s.successors[in[pick(rng)]];
    path.push_back(f.vertex);
    config = f.from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ShotVector replay_shots(const ConfigSpace& s, const std::vector<std::size_t>& path,
                        Orientation* final_config) {
  Orientation c = s.configs.at(0);
  ShotVector shots(s.graph.vertices.size(), 0);
  for (auto v : path) {
    c = fire(s.graph, c, v);
    ++shots[v];
  }
  if (final_config) *final_config = std::move(c);
  return shots;
}

std::optional<std::size_t> check_path_independence(const ConfigSpace& s, std::size_t samples,
                                                   std::mt19937_64& rng) {
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (s.incoming[c].size() < 2) continue;
    for (std::size_t k = 0; k < samples; ++k) {
      Orientation reached;
      ShotVector shots = replay_shots(s, sample_firing_path(s, c, rng), &reached);
      if (shots != s.shots[c] || reached != s.configs[c]) return c;
    }
  }
  return std::nullopt;
}

}  // namespace efglat
