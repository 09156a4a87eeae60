#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radx/bitset.hpp"
#include "radx/error.hpp"

namespace radx {

using elem = std::uint16_t;

// Square operation table over element indices, row = left operand.
class OpTable {
 public:
  OpTable() = default;
  OpTable(std::size_t n, std::vector<elem> cells) : n_(n), t_(std::move(cells)) {}

  elem operator()(elem a, elem b) const { return t_[std::size_t(a) * n_ + b]; }
  std::size_t size() const { return n_; }
  const std::vector<elem>& cells() const { return t_; }

 private:
  std::size_t n_ = 0;
  std::vector<elem> t_;
};

// A finite hemiring given by its addition and multiplication tables.
// Immutable once validated; the additive identity is always index 0.
class Hemiring {
 public:
  std::string name;

  elem add(elem a, elem b) const { return add_(a, b); }
  elem mul(elem a, elem b) const { return mul_(a, b); }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const OpTable& add_table() const { return add_; }
  const OpTable& mul_table() const { return mul_; }

  // Multiplicative identity, when one exists (then the hemiring is a semiring).
  std::optional<elem> one() const { return one_; }

  // True when the additive monoid is a group, i.e. the hemiring is a ring
  // (possibly without identity).
  bool is_ring() const { return !neg_.empty(); }
  elem neg(elem a) const { return neg_[a]; }

  std::optional<elem> index_of(const std::string& label) const;

  // Validates every hemiring axiom by exhaustive checks and normalizes the
  // additive identity to index 0. Throws MalformedTables / AxiomViolation.
  static Hemiring validate(std::string name, std::vector<std::string> labels, elem zero,
                           const std::vector<std::vector<elem>>& add,
                           const std::vector<std::vector<elem>>& mul);

  friend bool operator==(const Hemiring& a, const Hemiring& b) {
    return a.labels_ == b.labels_ && a.add_.cells() == b.add_.cells() &&
           a.mul_.cells() == b.mul_.cells();
  }

 private:
  Hemiring() = default;
  void finish_construction();

  std::vector<std::string> labels_;
  OpTable add_, mul_;
  std::optional<elem> one_;
  std::vector<elem> neg_;  // additive inverses; empty when not a ring
};

using HemiringPtr = std::shared_ptr<const Hemiring>;

// Structural flags computed by exhaustive checks over the tables.
struct Classification {
  std::optional<elem> identity;  // present iff the hemiring is a semiring
  bool is_semiring = false;
  bool commutative = false;
  bool additively_idempotent = false;
  bool additively_cancellative = false;
  bool additively_regular = false;
  bool zeroic = false;
  bool lattice_ordered = false;
  bool subtractive_hemiring = false;
  bool strongly_subtractive = false;
  bool congruence_simple = false;
  bool ideal_simple = false;
  bool simple = false;
  Bitset zeroid;
};

Classification classify(const Hemiring& R, const Limits& limits = default_limits());

// Zeroid Z(R) = { r | r + x = x for some x }.
Bitset zeroid(const Hemiring& R);

// The sub-hemiring on a subset closed under + and * (e.g. an ideal).
// Element order is ascending index; labels are inherited.
Hemiring subhemiring(const Hemiring& R, const Bitset& carrier, std::string name);

// Cheap single-purpose probes used across modules.
bool is_additively_idempotent(const Hemiring& R);
bool is_commutative(const Hemiring& R);
bool is_additively_cancellative(const Hemiring& R);
bool is_additively_regular(const Hemiring& R);
bool is_lattice_ordered(const Hemiring& R);
bool is_congruence_simple(const Hemiring& R);
bool is_ideal_simple(const Hemiring& R);

}  // namespace radx
