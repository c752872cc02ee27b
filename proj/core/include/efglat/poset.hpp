#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "efglat/bitset.hpp"

namespace efglat {

using CoverPair = std::pair<std::size_t, std::size_t>;  // (i, j): j covers i

// A finite partial order over labelled elements. Element order is the input
// order and never changes; every index-based encoding (filters, tables) is
// relative to it. Instances are built only through build_poset and are
// immutable afterwards.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  // {j : i <= j} and {j : j <= i}, reflexive.
  const Bitset& up_set(std::size_t i) const { return up_.at(i); }
  const Bitset& down_set(std::size_t i) const { return down_.at(i); }

  // Transitive reduction of the strict order, sorted.
  const std::vector<CoverPair>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }

  // Length of the longest chain ending at i (minimal elements have rank 0).
  std::size_t rank(std::size_t i) const { return rank_.at(i); }

  // Element indices sorted so that every element follows all elements below it.
  std::vector<std::size_t> linear_extension() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  friend Poset build_poset(std::vector<std::string> labels, const std::vector<CoverPair>& pairs);

  std::vector<std::string> labels_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::size_t> rank_;
};

// Builds the reflexive-transitive closure of the given relation pairs
// (a, b) meaning a < b. Redundant pairs are dropped from covers().
// Throws DuplicateLabel, InvalidLabel, IndexOutOfRange, SelfCover or
// CycleDetected.
Poset build_poset(std::vector<std::string> labels, const std::vector<CoverPair>& pairs);

// Label-based form; throws UnknownLabel for pairs naming absent labels.
Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& pairs);

Bitset maximal_elements(const Poset& p);
Bitset minimal_elements(const Poset& p);

// True iff the subset is upward closed. Throws IndexOutOfRange when the set
// width does not match the poset.
bool is_filter(const Poset& p, const Bitset& subset);

struct FilterOptions {
  std::size_t max_elements = 20;
};

// All filters, ascending by cardinality, ties by lexicographic order of the
// member index lists. Throws TooLarge when the poset exceeds the cap.
std::vector<Bitset> enumerate_filters(const Poset& p, const FilterOptions& options = {});

// The filters covered by f under reverse inclusion: f plus one maximal
// element of the complement, in ascending element order. Throws NotAFilter.
std::vector<Bitset> filter_covers(const Poset& p, const Bitset& f);

// "{a,c}" with members in element order.
std::string format_subset(const Poset& p, const Bitset& subset);

// Common shapes, labelled by the given prefix followed by the index.
Poset chain_poset(std::size_t n, std::string_view prefix = "x");
Poset antichain_poset(std::size_t n, std::string_view prefix = "x");

}  // namespace efglat
