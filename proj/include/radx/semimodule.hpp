#pragma once

#include <memory>
#include <string>
#include <vector>

#include "radx/congruence.hpp"
#include "radx/hemiring.hpp"

namespace radx {

// Scalar action table, |R| rows by |M| columns: act(r, m).
class ActionTable {
 public:
  ActionTable() = default;
  ActionTable(std::size_t rows, std::size_t cols, std::vector<elem> cells)
      : cols_(cols), t_(std::move(cells)) {
    (void)rows;
  }
  elem operator()(elem r, elem m) const { return t_[std::size_t(r) * cols_ + m]; }
  const std::vector<elem>& cells() const { return t_; }

 private:
  std::size_t cols_ = 0;
  std::vector<elem> t_;
};

// Finite left semimodule over a finite hemiring: commutative-monoid carrier
// plus a scalar action. Zero is index 0; immutable after validation.
class Semimodule {
 public:
  std::string name;

  const Hemiring& ring() const { return *ring_; }
  const HemiringPtr& ring_ptr() const { return ring_; }

  std::size_t size() const { return labels_.size(); }
  elem add(elem a, elem b) const { return add_(a, b); }
  elem act(elem r, elem m) const { return act_(r, m); }
  const std::string& label(elem m) const { return labels_[m]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const OpTable& add_table() const { return add_; }
  const ActionTable& action_table() const { return act_; }

  std::optional<elem> index_of(const std::string& label) const;

  // Validates the monoid axioms and all four action axiom families
  // exhaustively; normalizes zero to index 0.
  static Semimodule validate(std::string name, HemiringPtr ring, std::vector<std::string> labels,
                             elem zero, const std::vector<std::vector<elem>>& add,
                             const std::vector<std::vector<elem>>& action);

  // The regular left semimodule over R (carrier R, action = multiplication).
  static Semimodule regular(const HemiringPtr& R);

  friend bool operator==(const Semimodule& a, const Semimodule& b) {
    return a.labels_ == b.labels_ && a.add_.cells() == b.add_.cells() &&
           a.act_.cells() == b.act_.cells() && *a.ring_ == *b.ring_;
  }

 private:
  Semimodule() = default;

  HemiringPtr ring_;
  std::vector<std::string> labels_;
  OpTable add_;
  ActionTable act_;
};

using SemimodulePtr = std::shared_ptr<const Semimodule>;

struct SemimoduleMap {
  SemimodulePtr source;
  SemimodulePtr target;
  std::vector<elem> image;
};

struct SemimoduleQuotient {
  SemimodulePtr semimodule;
  SemimoduleMap projection;
  Partition partition;
};

SemimoduleQuotient quotient(const SemimodulePtr& M, const Partition& p);

// Exhaustively computed structural report.
struct SemimoduleReport {
  Bitset annihilator;  // (0:M) in R
  bool faithful = false;
  bool cancellative = false;
  bool simple = false;
  bool irreducible = false;
  bool semi_irreducible = false;
  bool w_finitely_generated = false;
  Bitset zeroid;  // Z(M) in M
};

SemimoduleReport semimodule_report(const Semimodule& M);

// Individual probes (also used by the enumerators, cheapest first).
Bitset annihilator(const Semimodule& M);
Bitset zeroid(const Semimodule& M);
bool action_is_nonzero(const Semimodule& M);  // RM != 0
bool is_cancellative(const Semimodule& M);
bool has_only_trivial_subsemimodules(const Semimodule& M);
bool is_simple(const Semimodule& M);
bool is_irreducible(const Semimodule& M);
bool is_semi_irreducible(const Semimodule& M);
bool is_w_finitely_generated(const Semimodule& M);

// Subsemimodule generated by a subset (closure under + and every scalar).
Bitset subsemimodule_closure(const Semimodule& M, const Bitset& seed);

// Isomorphism of semimodules over the same hemiring: zero-fixing bijection
// preserving + and every scalar translation (backtracking with invariant
// pruning).
bool are_isomorphic(const Semimodule& A, const Semimodule& B);

// All simple left R-semimodules up to isomorphism, obtained as quotients of
// the regular semimodule by its congruences and filtered by the simplicity
// test.
std::vector<Semimodule> enumerate_simple_semimodules(const HemiringPtr& R,
                                                     const Limits& limits = default_limits());

// All irreducible left R-semimodules up to isomorphism: simple modules with
// nonzero action over the ring of differences D(R*), pulled back along
// r -> class of r*.
std::vector<Semimodule> enumerate_irreducible_semimodules(
    const HemiringPtr& R, const Limits& limits = default_limits());

}  // namespace radx
