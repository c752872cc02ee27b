#pragma once

#include <string>

#include "efglat/efg.hpp"
#include "efglat/poset.hpp"

namespace efglat {

// Graphviz renderings. Output depends only on the input value.

// Hasse diagram, greatest elements drawn on top.
std::string poset_to_dot(const Poset& p);

// Successor edges labelled with the fired vertex; the initial config on top.
std::string space_to_dot(const ConfigSpace& s);

// One orientation of a game; the sink is a filled square.
std::string orientation_to_dot(const FiringGraph& g, const Orientation& c);

}  // namespace efglat
