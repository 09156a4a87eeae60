#pragma once

#include <vector>

#include "radx/congruence.hpp"
#include "radx/hemiring.hpp"

namespace radx {

enum class Sidedness { left, right, two_sided };

// Subset of a hemiring carrier closed as an ideal of the stated sidedness.
struct SubsetIdeal {
  Bitset subset;
  Sidedness sidedness = Sidedness::two_sided;
  bool subtractive = false;

  std::size_t count() const { return subset.count(); }
};

bool is_ideal(const Hemiring& R, const Bitset& subset, Sidedness s);
bool is_subtractive(const Hemiring& R, const Bitset& subset);

// Smallest ideal containing seed: worklist fixpoint under + and the
// requested multiplications.
SubsetIdeal ideal_closure(const Hemiring& R, const Bitset& seed, Sidedness s);
SubsetIdeal ideal_closure(const Hemiring& R, const std::vector<elem>& seed, Sidedness s);

// Full ideal lattice: principal ideals closed under pairwise sum-then-closure.
// Sorted ascending by (popcount, subset order). Throws ResourceLimit.
std::vector<SubsetIdeal> enumerate_ideals(const Hemiring& R, Sidedness s,
                                          bool subtractive_only = false,
                                          const Limits& limits = default_limits());

// Subtractive closure of an ideal: { r | r + x in I for some x in I }.
SubsetIdeal subtractive_closure(const Hemiring& R, const SubsetIdeal& I);

// Bourne relation of a two-sided ideal: r == r' iff r + x = r' + x' for some
// x, x' in I.
Partition bourne_partition(const Hemiring& R, const Bitset& ideal);

// Factor hemiring R/I by the Bourne relation, with the natural projection.
HemiringQuotient bourne_quotient(const HemiringPtr& R, const SubsetIdeal& I);

// I^k: ideal closure of all k-fold products; I^1 = I.
SubsetIdeal ideal_power(const Hemiring& R, const SubsetIdeal& I, unsigned k);

}  // namespace radx
