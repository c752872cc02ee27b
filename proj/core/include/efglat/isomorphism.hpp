#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efglat/poset.hpp"

namespace efglat {

// phi[i] is the element of the second poset that element i maps to.
using PosetMap = std::vector<std::size_t>;

// Order isomorphism search: candidates are pruned by per-element invariants
// (cover in/out degree, rank, up/down set sizes), then assigned by
// backtracking along a linear extension of p1. Deterministic.
std::optional<PosetMap> poset_isomorphic(const Poset& p1, const Poset& p2);

// True iff phi is a bijection with leq1(i,j) <=> leq2(phi[i],phi[j]).
bool is_order_isomorphism(const Poset& p1, const Poset& p2, const PosetMap& phi);

std::vector<std::pair<std::string, std::string>> label_map(const Poset& p1, const Poset& p2,
                                                           const PosetMap& phi);

}  // namespace efglat
