#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efglat/poset.hpp"

namespace efglat {

enum class DistributiveLaw {
  JoinOverMeet,  // (a v b) ^ (a v c) = a v (b ^ c)
  MeetOverJoin,  // (a ^ b) v (a ^ c) = a ^ (b v c)
};

struct DistributivityWitness {
  std::size_t a = 0, b = 0, c = 0;
  DistributiveLaw law = DistributiveLaw::JoinOverMeet;
};

struct DistributivityVerdict {
  bool distributive = true;
  std::optional<DistributivityWitness> witness;
};

// A poset with total meet and join tables. Built by check_lattice or
// filter_lattice; immutable.
class Lattice {
 public:
  const Poset& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }

  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  bool distributive() const noexcept { return verdict_.distributive; }
  const DistributivityVerdict& verdict() const noexcept { return verdict_; }

 private:
  friend Lattice check_lattice(const Poset& p);
  friend Lattice filter_lattice(const Poset& p, const FilterOptions& options);

  Poset base_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  DistributivityVerdict verdict_;
};

// Fills the meet and join tables. Throws EmptyPoset, or NotALattice naming
// the first pair (in index order) lacking a meet or a join.
Lattice check_lattice(const Poset& p);

// Exact test. Uses the join-prime characterisation (every join-irreducible
// j with j <= x v y satisfies j <= x or j <= y) and falls back to a scan of
// all triples to report the first violating one.
DistributivityVerdict is_distributive(const Lattice& l);

// Plain O(n^3) evaluation of both laws over all ordered triples.
DistributivityVerdict distributive_by_triples(const Lattice& l);

// Evaluates one law on one triple; true when both sides agree.
bool law_holds(const Lattice& l, DistributiveLaw law, std::size_t a, std::size_t b, std::size_t c);

std::string describe(const Lattice& l, const DistributivityWitness& w);

struct JoinIrreducibleSet {
  std::vector<std::size_t> members;     // ascending lattice indices
  std::vector<std::size_t> covered_by;  // covered_by[k]: the unique lower cover of members[k]
};

JoinIrreducibleSet join_irreducibles(const Lattice& l);

// The order induced on the join-irreducibles, labelled as in the lattice.
// Element k of the result is join_irreducibles(l).members[k].
Poset induced_order(const Lattice& l);

// Filters of p ordered by reverse inclusion; meet is union, join is
// intersection. Elements follow enumerate_filters order and are labelled
// with format_subset. Throws TooLarge.
Lattice filter_lattice(const Poset& p, const FilterOptions& options = {});

// For each lattice element x, the set {j in J : j not <= x} over indices of
// induced_order(l). It is a filter of J; distinct elements of a distributive
// lattice get distinct sets.
std::vector<Bitset> birkhoff_filters(const Lattice& l);

}  // namespace efglat
