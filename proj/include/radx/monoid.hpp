#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radx/bitset.hpp"
#include "radx/error.hpp"
#include "radx/hemiring.hpp"

namespace radx {

// Finite commutative monoid (the carrier of a semimodule or the host of an
// endomorphism hemiring). Zero is index 0 after validation.
class CommMonoid {
 public:
  std::string name;

  std::size_t size() const { return labels_.size(); }
  elem add(elem a, elem b) const { return add_(a, b); }
  const std::string& label(elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const OpTable& add_table() const { return add_; }

  std::optional<elem> index_of(const std::string& label) const;

  bool idempotent() const;  // a + a = a for all a, i.e. a join-semilattice

  // Order induced by addition when idempotent: x <= y iff x + y = y.
  bool leq(elem x, elem y) const { return add_(x, y) == y; }

  static CommMonoid validate(std::string name, std::vector<std::string> labels, elem zero,
                             const std::vector<std::vector<elem>>& add);

  friend bool operator==(const CommMonoid& a, const CommMonoid& b) {
    return a.labels_ == b.labels_ && a.add_.cells() == b.add_.cells();
  }

 private:
  CommMonoid() = default;
  std::vector<std::string> labels_;
  OpTable add_;
};

using CommMonoidPtr = std::shared_ptr<const CommMonoid>;

}  // namespace radx
