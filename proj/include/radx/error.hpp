#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace radx {

// Base of every error the library raises on purpose. The CLI maps the
// concrete types to exit codes.
struct RadxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation-table document failed a structural check (non-square table,
// out-of-range entry, duplicate label, ...).
struct MalformedTables : RadxError {
  using RadxError::RadxError;
};

// An axiom of the structure fails; carries the axiom name and a witness
// tuple of element indices so the failure can be re-evaluated.
struct AxiomViolation : RadxError {
  AxiomViolation(std::string axiom_name, std::vector<uint16_t> witness_elems,
                 const std::string& what)
      : RadxError(what), axiom(std::move(axiom_name)), witness(std::move(witness_elems)) {}
  std::string axiom;
  std::vector<uint16_t> witness;
};

struct NotAnIdeal : RadxError {
  using RadxError::RadxError;
};

struct IncompatiblePartition : RadxError {
  using RadxError::RadxError;
};

struct NotASemilattice : RadxError {
  using RadxError::RadxError;
};

struct NotIdempotent : RadxError {
  using RadxError::RadxError;
};

struct NotARing : RadxError {
  using RadxError::RadxError;
};

struct UnknownTheoremId : RadxError {
  using RadxError::RadxError;
};

// A configured enumeration bound was exceeded; deterministic failure instead
// of unbounded time or memory.
struct ResourceLimit : RadxError {
  using RadxError::RadxError;
};

// Enumeration bounds. Defaults follow the library-wide policy: lattices cap
// at 2^20 members, table-materialized carriers at 4096 elements, and
// endomorphism scans at |M| <= 8.
struct Limits {
  std::size_t max_congruences = std::size_t(1) << 20;
  std::size_t max_ideals = std::size_t(1) << 20;
  std::size_t max_carrier = 4096;
  std::size_t max_end_monoid = 8;
  std::size_t max_subset_scan_log2 = 20;  // semiregular oracle: 2^|R| <= 2^20
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace radx
