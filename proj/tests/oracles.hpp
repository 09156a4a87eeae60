#pragma once

// Test-only brute-force oracles. These deliberately avoid the production
// closure/enumeration kernels: partitions and subsets are generated
// exhaustively and filtered by the definitional predicates.

#include <vector>

#include "radx/congruence.hpp"
#include "radx/hemiring.hpp"
#include "radx/ideal.hpp"
#include "radx/semimodule.hpp"

namespace radx::testing {

// Every partition of {0..n-1}, via restricted growth strings.
std::vector<Partition> all_partitions(std::size_t n);

// Congruence lattices by filtering all partitions.
std::vector<Partition> brute_congruences(const Hemiring& R);
std::vector<Partition> brute_congruences(const Semimodule& M);

// Ideal lattices by filtering all subsets (|R| <= 20 or so).
std::vector<Bitset> brute_ideals(const Hemiring& R, Sidedness s);

// All semimodule structures over R on carriers of size <= max_size (up to
// nothing; raw tables), validated; the caller filters and groups.
std::vector<Semimodule> brute_semimodules(const HemiringPtr& R, std::size_t max_size);

// Definition 4.1 searched directly with at most max_pairs base pairs.
bool brute_w_finitely_generated(const Semimodule& M, unsigned max_pairs);

// Zero-fixing permutation isomorphism check by full scan (no pruning).
bool brute_isomorphic(const Hemiring& A, const Hemiring& B);

// The ring of differences built literally on pair classes, for comparison
// with the production construction.
Hemiring pair_differences(const Hemiring& R);

}  // namespace radx::testing
