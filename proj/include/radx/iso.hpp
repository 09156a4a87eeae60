#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radx/hemiring.hpp"

namespace radx {

// Zero-fixing bijection preserving both tables, found by backtracking with
// invariant-refinement pruning.
bool are_isomorphic(const Hemiring& A, const Hemiring& B,
                    const Limits& limits = default_limits());

// Lexicographically minimal table encoding over zero-fixing permutations that
// respect the invariant coloring. Equal canonical forms characterize
// isomorphism. The encoding lists, for positions k = 1..n-1, the add- then
// mul-cells whose arguments both lie in {0..k}.
std::vector<elem> canonical_form(const Hemiring& A, const Limits& limits = default_limits());

std::string encode_tables(const Hemiring& A);  // row-major add then mul, for display

}  // namespace radx
