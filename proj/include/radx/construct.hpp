#pragma once

#include <vector>

#include "radx/congruence.hpp"
#include "radx/hemiring.hpp"
#include "radx/monoid.hpp"
#include "radx/semimodule.hpp"

namespace radx {

// n x n matrices over R with entrywise + and matrix *. Elements are encoded
// as base-|R| integers in row-major entry order; the encoding is part of the
// label. Has an identity iff R does.
Hemiring matrix_hemiring(const Hemiring& R, unsigned n, const Limits& limits = default_limits());

// Entry decoding for matrix elements: row-major list of R-indices.
std::vector<elem> matrix_entries(std::size_t base_size, unsigned n, elem a);
elem matrix_encode(std::size_t base_size, unsigned n, const std::vector<elem>& entries);

// The matrix unit E_ij (requires R to have an identity).
elem matrix_unit(const Hemiring& R, unsigned n, unsigned i, unsigned j);

// Subset of M_n(R) whose entries all lie in a subset of R.
Bitset matrix_subset(const Hemiring& R, unsigned n, const Bitset& entries_in);

// Componentwise product with the projections.
struct ProductResult {
  HemiringPtr product;
  std::vector<HemiringMap> projections;
};
ProductResult direct_product(const std::vector<HemiringPtr>& factors,
                             const Limits& limits = default_limits());

// Quotient by m == m' iff m + x = m' + x for some x; the result is always
// additively cancellative (and, being finite, an additive group).
HemiringQuotient star_quotient(const HemiringPtr& R);
SemimoduleQuotient star_quotient(const SemimodulePtr& M);

// Ring of differences D(R) = (R x R)/W presented on the star quotient: a
// finite cancellative monoid is a group, so classes of pairs biject with
// classes of single elements. The canonical map is xi(r) = class of (r, 0).
struct DifferencesResult {
  HemiringPtr ring;       // D(R); additive group, multiplication from R
  HemiringMap xi;         // R -> D(R)
};
DifferencesResult differences(const HemiringPtr& R);

struct ModuleDifferencesResult {
  SemimodulePtr module;  // D(M) over the same hemiring R
  SemimoduleMap xi;      // M -> D(M)
};
ModuleDifferencesResult differences(const SemimodulePtr& M);

// Additive endomorphism of a commutative monoid: value table fixing 0.
struct Endomorphism {
  std::vector<elem> values;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) = default;
  friend bool operator<(const Endomorphism& a, const Endomorphism& b) {
    return a.values < b.values;
  }
};

bool is_endomorphism(const CommMonoid& M, const std::vector<elem>& values);

// End(M): all additive endomorphisms with pointwise + and composition
// (f * g)(x) = f(g(x)). The zero map is index 0; element labels spell out the
// value tables.
struct EndHemiring {
  HemiringPtr ring;
  CommMonoidPtr monoid;
  std::vector<Endomorphism> maps;  // maps[i] decodes ring element i

  elem index_of(const Endomorphism& f) const;
  elem identity_map() const;
};
EndHemiring endomorphism_hemiring(const CommMonoidPtr& M,
                                  const Limits& limits = default_limits());

// e_{a,b}: x -> 0 if x <= a, else b, on a join-semilattice with zero.
Endomorphism step_endomorphism(const CommMonoid& M, elem a, elem b);

// F_M (the additive submonoid generated by all step endomorphisms) and the
// density test: a sub-hemiring is dense iff it contains F_M.
struct DensityReport {
  Bitset step_monoid;  // F_M as a subset of End(M)
  bool dense = false;
};
DensityReport density_check(const EndHemiring& E, const Bitset& sub);

// Corner hemiring eRe for an idempotent e, with the fullness flag
// (ReR = R). Throws NotIdempotent.
struct CornerResult {
  HemiringPtr corner;
  std::vector<elem> carrier;   // corner element i is R-element carrier[i]
  std::vector<elem> to_corner; // R-element r maps to index of ere
  bool is_full = false;
};
CornerResult corner(const HemiringPtr& R, elem e);

}  // namespace radx
