#include "radx/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "radx/ideal.hpp"
#include "radx/semimodule.hpp"

namespace radx {

namespace detail {

Partition UnionFind::to_partition() {
  const std::size_t n = parent_.size();
  std::vector<elem> rep(n);
  // Roots keep the least index of their class by the union rule, so find()
  // already yields the canonical representative.
  for (std::size_t i = 0; i < n; ++i) rep[i] = find(elem(i));
  return Partition(std::move(rep));
}

}  // namespace detail

std::size_t Partition::num_blocks() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < rep_.size(); ++i)
    if (rep_[i] == i) ++c;
  return c;
}

std::vector<elem> Partition::block_reps() const {
  std::vector<elem> out;
  for (std::size_t i = 0; i < rep_.size(); ++i)
    if (rep_[i] == i) out.push_back(elem(i));
  return out;
}

Bitset Partition::kernel_block() const { return block_members(rep_.empty() ? 0 : rep_[0]); }

Bitset Partition::block_members(elem representative) const {
  Bitset b(rep_.size());
  for (std::size_t i = 0; i < rep_.size(); ++i)
    if (rep_[i] == representative) b.set(i);
  return b;
}

bool Partition::is_identity() const {
  for (std::size_t i = 0; i < rep_.size(); ++i)
    if (rep_[i] != i) return false;
  return true;
}

bool Partition::refines(const Partition& coarser) const {
  for (std::size_t i = 0; i < rep_.size(); ++i)
    if (coarser.rep_[rep_[i]] != coarser.rep_[i]) return false;
  return true;
}

namespace {

// Generic closure driver: merge generating pairs, then propagate unary
// translations of every performed merge until fixpoint.
template <typename DeriveFn>
Partition close_pairs(std::size_t n, const std::vector<IndexPair>& pairs, DeriveFn derive) {
  detail::UnionFind uf(n);
  std::deque<IndexPair> pending(pairs.begin(), pairs.end());
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    if (!uf.unite(a, b)) continue;
    derive(a, b, [&](elem x, elem y) {
      if (uf.find(x) != uf.find(y)) pending.emplace_back(x, y);
    });
  }
  return uf.to_partition();
}

template <typename Structure>
Partition join_generic(const Structure& A, const Partition& p, const Partition& q) {
  std::vector<IndexPair> pairs;
  pairs.reserve(2 * p.universe());
  for (std::size_t i = 0; i < p.universe(); ++i) {
    pairs.emplace_back(elem(i), p.block(elem(i)));
    pairs.emplace_back(elem(i), q.block(elem(i)));
  }
  return congruence_closure(A, pairs);
}

// Join-closure of all principal congruences; the generic path of the
// congruence lattice enumeration.
template <typename Structure>
std::vector<Partition> enumerate_by_principals(const Structure& A, const Limits& limits) {
  const std::size_t n = A.size();
  std::set<Partition> found;
  found.insert(Partition(n));
  std::vector<Partition> queue;
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a + 1); b < n; ++b) {
      Partition p = congruence_closure(A, {{a, b}});
      if (found.insert(p).second) queue.push_back(p);
    }
  std::vector<Partition> fresh = queue;
  while (!fresh.empty()) {
    std::vector<Partition> next;
    for (const auto& p : fresh)
      for (const auto& q : found) {
        if (found.size() + next.size() > limits.max_congruences)
          throw ResourceLimit("congruence lattice exceeds the configured bound");
        Partition j = join_generic(A, p, q);
        if (!found.count(j)) {
          auto ins = std::find(next.begin(), next.end(), j);
          if (ins == next.end()) next.push_back(j);
        }
      }
    for (auto& p : next) found.insert(p);
    fresh = std::move(next);
  }
  return {found.begin(), found.end()};
}

// Kernel-subobject fast path: when the additive monoid is a group, every
// congruence is the coset partition of its kernel class.
Partition coset_partition(const Hemiring& R, const Bitset& kernel) {
  const std::size_t n = R.size();
  std::vector<elem> rep(n);
  for (elem m = 0; m < n; ++m) {
    elem least = m;
    kernel.for_each([&](std::size_t k) {
      elem v = R.add(m, elem(k));
      if (v < least) least = v;
    });
    rep[m] = least;
  }
  return Partition(std::move(rep));
}

Partition coset_partition(const Semimodule& M, const Bitset& kernel) {
  const std::size_t n = M.size();
  std::vector<elem> rep(n);
  for (elem m = 0; m < n; ++m) {
    elem least = m;
    kernel.for_each([&](std::size_t k) {
      elem v = M.add(m, elem(k));
      if (v < least) least = v;
    });
    rep[m] = least;
  }
  return Partition(std::move(rep));
}

// Subsemimodule lattice of a semimodule whose carrier is a group: principal
// closures joined to fixpoint.
std::vector<Bitset> subobject_lattice(const Semimodule& M, const Limits& limits) {
  const std::size_t n = M.size();
  std::set<Bitset> found;
  found.insert(Bitset::singleton(n, 0));
  std::vector<Bitset> fresh;
  for (elem a = 1; a < n; ++a) {
    Bitset s = subsemimodule_closure(M, Bitset::singleton(n, a));
    if (found.insert(s).second) fresh.push_back(s);
  }
  while (!fresh.empty()) {
    std::vector<Bitset> next;
    for (const auto& p : fresh)
      for (const auto& q : found) {
        if (found.size() + next.size() > limits.max_congruences)
          throw ResourceLimit("congruence lattice exceeds the configured bound");
        Bitset j = subsemimodule_closure(M, p | q);
        if (!found.count(j) && std::find(next.begin(), next.end(), j) == next.end())
          next.push_back(j);
      }
    for (auto& p : next) found.insert(p);
    fresh = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace

Partition congruence_closure(const Hemiring& R, const std::vector<IndexPair>& pairs) {
  const std::size_t n = R.size();
  return close_pairs(n, pairs, [&](elem a, elem b, auto push) {
    for (elem c = 0; c < n; ++c) {
      push(R.add(a, c), R.add(b, c));
      push(R.mul(c, a), R.mul(c, b));
      push(R.mul(a, c), R.mul(b, c));
    }
  });
}

Partition congruence_closure(const Semimodule& M, const std::vector<IndexPair>& pairs) {
  const std::size_t n = M.size();
  const std::size_t nr = M.ring().size();
  return close_pairs(n, pairs, [&](elem a, elem b, auto push) {
    for (elem c = 0; c < n; ++c) push(M.add(a, c), M.add(b, c));
    for (elem r = 0; r < nr; ++r) push(M.act(r, a), M.act(r, b));
  });
}

Partition congruence_join(const Hemiring& R, const Partition& a, const Partition& b) {
  return join_generic(R, a, b);
}
Partition congruence_join(const Semimodule& M, const Partition& a, const Partition& b) {
  return join_generic(M, a, b);
}

bool is_congruence(const Hemiring& R, const Partition& p) {
  const std::size_t n = R.size();
  if (p.universe() != n) return false;
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a + 1); b < n; ++b) {
      if (!p.same(a, b)) continue;
      for (elem c = 0; c < n; ++c) {
        if (!p.same(R.add(a, c), R.add(b, c))) return false;
        if (!p.same(R.mul(a, c), R.mul(b, c))) return false;
        if (!p.same(R.mul(c, a), R.mul(c, b))) return false;
      }
    }
  return true;
}

bool is_congruence(const Semimodule& M, const Partition& p) {
  const std::size_t n = M.size();
  if (p.universe() != n) return false;
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a + 1); b < n; ++b) {
      if (!p.same(a, b)) continue;
      for (elem c = 0; c < n; ++c)
        if (!p.same(M.add(a, c), M.add(b, c))) return false;
      for (elem r = 0; r < M.ring().size(); ++r)
        if (!p.same(M.act(r, a), M.act(r, b))) return false;
    }
  return true;
}

std::vector<Partition> enumerate_congruences(const Hemiring& R, const Limits& limits) {
  if (R.is_ring()) {
    // Congruences of a finite ring are coset partitions of its two-sided
    // ideals.
    Limits capped = limits;
    capped.max_ideals = std::min(capped.max_ideals, capped.max_congruences);
    std::vector<Partition> out;
    for (const auto& I : enumerate_ideals(R, Sidedness::two_sided, false, capped))
      out.push_back(coset_partition(R, I.subset));
    if (out.size() > limits.max_congruences)
      throw ResourceLimit("congruence lattice exceeds the configured bound");
    std::sort(out.begin(), out.end());
    return out;
  }
  return enumerate_by_principals(R, limits);
}

std::vector<Partition> enumerate_congruences(const Semimodule& M, const Limits& limits) {
  bool group = true;
  for (elem a = 0; a < M.size() && group; ++a) {
    group = false;
    for (elem b = 0; b < M.size(); ++b)
      if (M.add(a, b) == 0) {
        group = true;
        break;
      }
  }
  if (group) {
    std::vector<Partition> out;
    for (const auto& s : subobject_lattice(M, limits)) out.push_back(coset_partition(M, s));
    std::sort(out.begin(), out.end());
    return out;
  }
  return enumerate_by_principals(M, limits);
}

HomReport hom_check(const HemiringMap& f) {
  const Hemiring& S = *f.source;
  const Hemiring& T = *f.target;
  HomReport rep;
  rep.kernel = Bitset(S.size());
  bool hom = f.image.size() == S.size() && f(0) == 0;
  for (elem a = 0; a < S.size() && hom; ++a)
    for (elem b = 0; b < S.size() && hom; ++b) {
      if (f(S.add(a, b)) != T.add(f(a), f(b))) hom = false;
      if (f(S.mul(a, b)) != T.mul(f(a), f(b))) hom = false;
    }
  rep.is_hom = hom;
  if (!hom) return rep;
  for (elem a = 0; a < S.size(); ++a)
    if (f(a) == 0) rep.kernel.set(a);
  Bitset hit(T.size());
  for (elem a = 0; a < S.size(); ++a) hit.set(f(a));
  rep.surjective = hit.count() == T.size();
  rep.injective = true;
  std::vector<char> seen(T.size(), 0);
  for (elem a = 0; a < S.size(); ++a) {
    if (seen[f(a)]) {
      rep.injective = false;
      break;
    }
    seen[f(a)] = 1;
  }
  rep.is_semiisomorphism = rep.surjective && rep.kernel.count() == 1;
  return rep;
}

HemiringQuotient quotient(const HemiringPtr& R, const Partition& p) {
  if (!is_congruence(*R, p)) throw IncompatiblePartition("partition is not a congruence");
  auto reps = p.block_reps();
  const std::size_t m = reps.size();
  std::vector<elem> to_block(R->size());
  for (std::size_t i = 0; i < m; ++i)
    p.block_members(reps[i]).for_each([&](std::size_t x) { to_block[x] = elem(i); });

  std::vector<std::string> labels(m);
  std::vector<std::vector<elem>> add(m, std::vector<elem>(m)), mul(m, std::vector<elem>(m));
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = R->label(reps[i]);
    for (std::size_t j = 0; j < m; ++j) {
      add[i][j] = to_block[R->add(reps[i], reps[j])];
      mul[i][j] = to_block[R->mul(reps[i], reps[j])];
    }
  }
  HemiringQuotient q;
  q.partition = p;
  // The block of 0 is represented by 0 itself, so zero stays at index 0.
  q.hemiring = std::make_shared<Hemiring>(
      Hemiring::validate(R->name + "/~", std::move(labels), to_block[0], add, mul));
  std::vector<elem> image(R->size());
  for (elem a = 0; a < R->size(); ++a) image[a] = to_block[a];
  q.projection = HemiringMap{R, q.hemiring, std::move(image)};
  return q;
}

}  // namespace radx
