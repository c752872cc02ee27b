#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "efglat/bitset.hpp"
#include "efglat/poset.hpp"

namespace efglat {

struct Edge {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected connected graph with a sink. Edge order is significant: it fixes
// the bit layout of every orientation.
struct FiringGraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::size_t sink = 0;

  std::optional<std::size_t> index_of(std::string_view label) const;
  friend bool operator==(const FiringGraph&, const FiringGraph&) = default;
};

// Bit e set means edge e points from `second` to `first`; clear means from
// `first` to `second`.
struct Orientation {
  Bitset reversed;

  Orientation() = default;
  explicit Orientation(std::size_t edge_count) : reversed(edge_count) {}
  explicit Orientation(Bitset bits) : reversed(std::move(bits)) {}

  std::size_t size() const noexcept { return reversed.size(); }
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

std::size_t tail(const FiringGraph& g, const Orientation& c, std::size_t edge);
std::size_t head(const FiringGraph& g, const Orientation& c, std::size_t edge);

struct EfgInstance {
  FiringGraph graph;
  Orientation initial;
  friend bool operator==(const EfgInstance&, const EfgInstance&) = default;
};

// Returns e unchanged when it is well formed. Throws BadSink, SelfLoop,
// DuplicateEdge, ArityMismatch, Disconnected, IndexOutOfRange,
// DuplicateLabel or InvalidLabel.
const EfgInstance& validate_efg(const EfgInstance& e);

// Non-sink vertices of positive degree whose incident edges all point at
// them, as a set over vertex indices.
Bitset fireable(const FiringGraph& g, const Orientation& c);

// Reverses every edge at v. Throws NotFireable.
Orientation fire(const FiringGraph& g, const Orientation& c, std::size_t v);

// Per-vertex fire counts.
using ShotVector = std::vector<std::uint32_t>;

struct Firing {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t vertex = 0;
};

// Reachable orientations of one game. Config 0 is the initial orientation;
// the rest are numbered in breadth-first discovery order, firing vertices in
// ascending index order at each config.
struct ConfigSpace {
  FiringGraph graph;
  std::vector<Orientation> configs;
  std::vector<Firing> successors;                    // discovery order
  std::vector<ShotVector> shots;                     // path-independent fire counts
  std::vector<std::vector<std::size_t>> outgoing;    // indices into successors
  std::vector<std::vector<std::size_t>> incoming;    // indices into successors
  bool simple = true;

  std::size_t size() const noexcept { return configs.size(); }
};

struct ExploreOptions {
  std::size_t max_edges = 24;
};

// Breadth-first closure of the firing rule from the initial orientation.
// Every re-visit cross-checks the shot vector of the new path against the
// recorded one and throws ShotSetConflict on disagreement. Throws TooLarge
// above the edge cap.
ConfigSpace explore(const EfgInstance& e, const ExploreOptions& options = {});

const ShotVector& shot_set(const ConfigSpace& s, std::size_t config);
bool is_simple(const ConfigSpace& s);

// "{a,b}" for plain sets, "{a*2,b}" when a vertex fired twice.
std::string format_shots(const FiringGraph& g, const ShotVector& shots);

// Config c <= c' iff c is reachable from c'; labelled "c0", "c1", ...
Poset space_order(const ConfigSpace& s);

struct ProppVerdict {
  bool holds = true;
  std::string witness;
};

// Checks that space_order(s) is a distributive lattice whose maximum is the
// initial config.
ProppVerdict verify_propp(const ConfigSpace& s);

// Vertices fired along a uniformly random backward walk from `config` to
// the initial config, in forward order.
std::vector<std::size_t> sample_firing_path(const ConfigSpace& s, std::size_t config,
                                            std::mt19937_64& rng);

// Replays a firing sequence from the initial config and returns the fire counts;
// throws NotFireable if the sequence is illegal.
ShotVector replay_shots(const ConfigSpace& s, const std::vector<std::size_t>& path,
                        Orientation* final_config = nullptr);

// Samples `samples` random paths to every config with two or more
// predecessors and returns the first config whose replayed shots differ from
// the recorded ones.
std::optional<std::size_t> check_path_independence(const ConfigSpace& s, std::size_t samples,
                                                   std::mt19937_64& rng);

}  // namespace efglat
