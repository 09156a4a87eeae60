#pragma once

#include <string>
#include <vector>

#include "radx/hemiring.hpp"
#include "radx/monoid.hpp"

namespace radx {

// Built-in structures: every example in the test and verification suites is
// reachable by name.
//   Hemirings: ZERO, B, Z2, Z4, T3, CHAIN4, BXZ2, M2B, END_N5
//   Monoids (semilattices): C2, N5, M3
std::vector<std::string> catalog_hemiring_names();
std::vector<std::string> catalog_monoid_names();

bool is_catalog_hemiring(const std::string& name);
bool is_catalog_monoid(const std::string& name);

// Throws RadxError for unknown names.
HemiringPtr catalog_hemiring(const std::string& name);
CommMonoidPtr catalog_monoid(const std::string& name);

}  // namespace radx
