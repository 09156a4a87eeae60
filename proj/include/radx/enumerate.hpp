#pragma once

#include <functional>
#include <string>
#include <vector>

#include "radx/hemiring.hpp"

namespace radx {

// Classification filters selectable by name (is_semiring, commutative, ...).
using PredicateList = std::vector<std::string>;
bool known_predicate(const std::string& name);

// Isomorph-free exhaustive generation of hemirings of the given order:
// commutative-monoid addition tables with zero pinned at index 0, compatible
// multiplication tables filtered by the axioms and predicates, deduplicated
// by canonical form. Output is sorted by canonical encoding. `jobs` > 1
// partitions the addition-table space across threads with a deterministic
// merge.
std::vector<Hemiring> enumerate_hemirings(unsigned order, const PredicateList& predicates = {},
                                          const Limits& limits = default_limits(),
                                          unsigned jobs = 1);

std::size_t count_hemirings(unsigned order, const PredicateList& predicates = {},
                            const Limits& limits = default_limits(), unsigned jobs = 1);

}  // namespace radx
