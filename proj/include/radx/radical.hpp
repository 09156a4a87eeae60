#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radx/construct.hpp"
#include "radx/ideal.hpp"
#include "radx/semimodule.hpp"

namespace radx {

enum class RadicalKind { J, Js, BM, BMCs };
enum class JacobsonMethod { star_differences, semiregular, annihilators };

// Which quotients count as "simple semirings" in the C_s intersection.
// both_simple (the default) demands congruence-simple and ideal-simple with
// identity; congruence_simple_only drops the ideal-simplicity requirement.
enum class CsVariant { both_simple, congruence_simple_only };

std::string to_string(RadicalKind k);
std::string to_string(JacobsonMethod m);

// Computed radical: always a two-sided subtractive ideal, together with the
// evidence the chosen method produced.
struct RadicalResult {
  RadicalKind kind = RadicalKind::J;
  Bitset subset;
  std::string method;

  // Method-specific witnesses.
  std::vector<Semimodule> witness_semimodules;   // simple / irreducible modules
  std::vector<Bitset> witness_annihilators;      // their annihilators
  std::vector<Partition> witness_congruences;    // C_s members
  std::vector<Bitset> witness_ideals;            // semiregular right ideals
  std::string notes;
};

RadicalResult radical(const HemiringPtr& R, RadicalKind kind,
                      const Limits& limits = default_limits(),
                      CsVariant cs_variant = CsVariant::both_simple);

// The three Jacobson routes; they agree on every input (verified by the
// method-agreement suites).
RadicalResult jacobson_oracle(const HemiringPtr& R, JacobsonMethod method,
                              const Limits& limits = default_limits());

// Jacobson radical of a finite ring (possibly without identity):
// { x | the two-sided ideal generated by x is nilpotent }. Throws NotARing.
Bitset ring_jacobson(const Hemiring& D);

// Is the right ideal I right semiregular: for all i1,i2 in I there are j1,j2
// in I with i1+j1+i1j1+i2j2 = i2+j2+i1j2+i2j1.
bool is_right_semiregular(const Hemiring& R, const Bitset& I);

enum class RegularityKind { G, F1 };

// (r,0) lies in the congruence generated by G(r) resp. F_1(r).
bool regularity(const Hemiring& R, elem r, RegularityKind kind);
bool is_regular_hemiring(const Hemiring& R, RegularityKind kind);

struct PrimitivityReport {
  bool primitive = false;
  std::optional<Semimodule> witness;  // a faithful irreducible semimodule
};
PrimitivityReport is_primitive(const HemiringPtr& R, const Limits& limits = default_limits());

// Membership test of the Brown-McCoy radical class: no congruence yields a
// nonzero ideal-simple semiring quotient.
bool is_bm_radical(const HemiringPtr& H, const Limits& limits = default_limits());

// Subdirect decomposition certificate for a semisimple hemiring.
struct SubdirectFactor {
  HemiringPtr factor;
  HemiringMap projection;
  Bitset kernel;                 // kernel of the projection in R
  bool surjective = false;
  bool dense = false;            // Js factors over additively idempotent R
  bool density_checked = false;
};

struct SubdirectReport {
  RadicalKind kind = RadicalKind::J;
  std::vector<SubdirectFactor> factors;
  Bitset combined_kernel;
  bool all_surjective = false;
  bool semiisomorphic = false;  // combined kernel is {0}
  bool densities_pass = true;
};

// none when the radical is nonzero.
std::optional<SubdirectReport> subdirect_by_annihilators(
    const HemiringPtr& R, RadicalKind kind, const Limits& limits = default_limits());

}  // namespace radx
