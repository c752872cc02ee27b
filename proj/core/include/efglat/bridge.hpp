#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "efglat/bitset.hpp"
#include "efglat/efg.hpp"
#include "efglat/lattice.hpp"
#include "efglat/poset.hpp"

namespace efglat {

inline constexpr const char* kDefaultSink = "\xE2\x8A\xA5";  // U+22A5 "⊥"
inline constexpr const char* kAsciiSink = "_bot";

struct BridgeOptions {
  std::string sink_label = kDefaultSink;
};

// Evidence that a configuration space and a distributive lattice are
// isomorphic through shot sets and the filters of the join-irreducibles.
struct IsoCertificate {
  Poset irreducibles;                                   // induced order on J
  std::vector<Bitset> config_to_filter;                 // shot set of each config, over J
  std::unordered_map<Bitset, std::size_t> filter_to_element;  // {j : j not <= x} -> x
  std::vector<std::size_t> composed;                    // config -> lattice element
};

// Game on J plus a sink: J's cover edges oriented upwards, and an edge from
// the sink to every maximal element of J. The sink takes the first free
// label among sink_label, sink_label+"1", sink_label+"2", ...
// Throws NotDistributive.
EfgInstance lattice_to_efg(const Lattice& l, const BridgeOptions& options = {});

// Checks that shot sets are filters of J, that the composed map is an order
// bijection matching successors to covers, and that the fireable vertices
// of every config are the maximal elements of J outside its shot set.
// Throws NotAFilter, NotBijective, OrderMismatch or FireableMismatch, each
// naming the offending config.
IsoCertificate verify_isomorphism(const Lattice& l, const ConfigSpace& s);

struct Simplification {
  Lattice lattice;          // space_order of the original game
  EfgInstance game;         // simple game built from it
  ConfigSpace space;        // explored space of the new game
  IsoCertificate certificate;  // composed: new config -> original config
};

// Rebuilds any game as a simple one with an isomorphic configuration space.
// Throws whatever explore throws, and PropViolation if the original space is
// not a distributive lattice or the rebuilt game is not simple.
Simplification simplify_efg(const EfgInstance& e, const ExploreOptions& options = {},
                            const BridgeOptions& bridge = {});

}  // namespace efglat
