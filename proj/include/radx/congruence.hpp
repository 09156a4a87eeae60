#pragma once

#include <utility>
#include <vector>

#include "radx/hemiring.hpp"

namespace radx {

class Semimodule;

// Partition of a carrier into blocks, canonically labeled: block(i) is the
// least index in i's class. Used both for congruences and for raw partitions.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::size_t n) : rep_(n) {
    for (std::size_t i = 0; i < n; ++i) rep_[i] = elem(i);
  }
  explicit Partition(std::vector<elem> reps) : rep_(std::move(reps)) {}

  std::size_t universe() const { return rep_.size(); }
  elem block(elem i) const { return rep_[i]; }
  bool same(elem a, elem b) const { return rep_[a] == rep_[b]; }

  std::size_t num_blocks() const;
  std::vector<elem> block_reps() const;  // ascending representative list

  // Class of index 0 as a subset of the carrier.
  Bitset kernel_block() const;
  Bitset block_members(elem representative) const;

  bool is_identity() const;
  bool is_full() const { return num_blocks() == 1; }

  // True when every block of this partition lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend bool operator<(const Partition& a, const Partition& b) { return a.rep_ < b.rep_; }

 private:
  std::vector<elem> rep_;
};

using IndexPair = std::pair<elem, elem>;

// Smallest congruence of the hemiring containing the given pairs:
// union-find plus a worklist propagating additive and multiplicative
// translations of every merged pair to fixpoint.
Partition congruence_closure(const Hemiring& R, const std::vector<IndexPair>& pairs);
Partition congruence_closure(const Semimodule& M, const std::vector<IndexPair>& pairs);

// Join in the congruence lattice, computed by re-closing the merged blocks.
Partition congruence_join(const Hemiring& R, const Partition& a, const Partition& b);
Partition congruence_join(const Semimodule& M, const Partition& a, const Partition& b);

bool is_congruence(const Hemiring& R, const Partition& p);
bool is_congruence(const Semimodule& M, const Partition& p);

// The full congruence lattice. Principal congruences are joined to closure;
// when the additive monoid is a group the lattice is instead read off the
// kernel-ideal correspondence. Throws ResourceLimit past limits.max_congruences.
std::vector<Partition> enumerate_congruences(const Hemiring& R,
                                             const Limits& limits = default_limits());
std::vector<Partition> enumerate_congruences(const Semimodule& M,
                                             const Limits& limits = default_limits());

// Hemiring homomorphism candidate: image index per source element.
struct HemiringMap {
  HemiringPtr source;
  HemiringPtr target;
  std::vector<elem> image;

  elem operator()(elem a) const { return image[a]; }
};

struct HomReport {
  bool is_hom = false;
  Bitset kernel;  // preimage of 0 (meaningful when is_hom)
  bool surjective = false;
  bool injective = false;
  bool is_semiisomorphism = false;  // surjective with zero kernel
};

HomReport hom_check(const HemiringMap& f);

// Factor hemiring modulo a compatible partition, with the natural projection.
// Block labels are the representatives' labels. Throws IncompatiblePartition.
struct HemiringQuotient {
  HemiringPtr hemiring;
  HemiringMap projection;
  Partition partition;
};

HemiringQuotient quotient(const HemiringPtr& R, const Partition& p);

namespace detail {
// Union-find with deterministic normalization to least-member representatives.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = elem(i);
  }
  elem find(elem a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  // Returns false when already joined.
  bool unite(elem a, elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;  // keep the smaller index as root
    return true;
  }
  Partition to_partition();

 private:
  std::vector<elem> parent_;
};
}  // namespace detail

}  // namespace radx
