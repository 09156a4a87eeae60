#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radx/hemiring.hpp"
#include "radx/monoid.hpp"
#include "radx/radical.hpp"

namespace radx {

enum class VerifyStatus { pass, fail, inapplicable };
std::string to_string(VerifyStatus s);

// One executable theorem check. A fail carries a re-checkable witness; an
// inapplicable states which hypothesis is unmet.
struct VerifyReport {
  std::string theorem_id;
  VerifyStatus status = VerifyStatus::inapplicable;
  std::vector<std::string> details;       // computed objects, both sides, exponents
  std::string counterexample;             // empty unless status == fail
};

// Inputs a theorem check may need. `hemiring` is the structure under test;
// EX_3_13 takes the semilattice instead.
struct VerifyBundle {
  HemiringPtr hemiring;
  CommMonoidPtr monoid;
  unsigned matrix_n = 2;
  std::optional<std::string> idempotent_label;
  unsigned lemma_5_7_max_n = 2;
  Limits limits = default_limits();
};

// All suite identifiers, in canonical execution order.
const std::vector<std::string>& verify_ids();

// Throws UnknownTheoremId.
VerifyReport verify(const std::string& theorem_id, const VerifyBundle& bundle);

// Convenience: run every id against the bundle.
std::vector<VerifyReport> verify_all(const VerifyBundle& bundle);

enum class SearchProblem { P1_JS_VS_J, P3_BM_VS_CS };

struct SearchFinding {
  unsigned order = 0;
  std::string structure;   // table encoding of the offending hemiring
  std::string description;
};

struct SearchReport {
  SearchProblem problem = SearchProblem::P1_JS_VS_J;
  unsigned max_order = 0;
  std::vector<std::string> per_class;     // one line per isomorphism class
  std::vector<SearchFinding> findings;
  bool exhausted = false;
};

// Streams every hemiring up to max_order and compares the radicals the
// problem asks about. P1 reports J_s not contained in J (and, separately,
// J_s != J); P3 reports R_BM != R_Cs under both readings of "simple".
SearchReport search_counterexample(SearchProblem problem, unsigned max_order,
                                   const Limits& limits = default_limits());

}  // namespace radx
