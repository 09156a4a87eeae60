#include "radx/ideal.hpp"

#include <algorithm>
#include <set>

namespace radx {

bool is_ideal(const Hemiring& R, const Bitset& subset, Sidedness s) {
  const std::size_t n = R.size();
  if (subset.universe() != n || !subset.test(0)) return false;
  auto members = subset.members();
  for (elem a : members)
    for (elem b : members)
      if (!subset.test(R.add(a, b))) return false;
  for (elem a : members)
    for (elem r = 0; r < n; ++r) {
      if (s != Sidedness::right && !subset.test(R.mul(r, a))) return false;
      if (s != Sidedness::left && !subset.test(R.mul(a, r))) return false;
    }
  return true;
}

bool is_subtractive(const Hemiring& R, const Bitset& subset) {
  const std::size_t n = R.size();
  for (elem x = 0; x < n; ++x) {
    if (subset.test(x)) continue;
    for (elem a = 0; a < n; ++a)
      if (subset.test(a) && subset.test(R.add(x, a))) return false;
  }
  return true;
}

SubsetIdeal ideal_closure(const Hemiring& R, const Bitset& seed, Sidedness s) {
  const std::size_t n = R.size();
  Bitset I(n);
  I.set(0);
  std::vector<elem> work;
  seed.for_each([&](std::size_t a) {
    if (!I.test(a)) {
      I.set(a);
      work.push_back(elem(a));
    }
  });
  auto push = [&](elem v) {
    if (!I.test(v)) {
      I.set(v);
      work.push_back(v);
    }
  };
  while (!work.empty()) {
    elem a = work.back();
    work.pop_back();
    // additive closure against everything already in I
    I.for_each([&](std::size_t b) { push(R.add(a, elem(b))); });
    for (elem r = 0; r < n; ++r) {
      if (s != Sidedness::right) push(R.mul(r, a));
      if (s != Sidedness::left) push(R.mul(a, r));
    }
  }
  SubsetIdeal out;
  out.subset = I;
  out.sidedness = s;
  out.subtractive = is_subtractive(R, I);
  return out;
}

SubsetIdeal ideal_closure(const Hemiring& R, const std::vector<elem>& seed, Sidedness s) {
  Bitset b(R.size());
  for (elem a : seed) b.set(a);
  return ideal_closure(R, b, s);
}

std::vector<SubsetIdeal> enumerate_ideals(const Hemiring& R, Sidedness s, bool subtractive_only,
                                          const Limits& limits) {
  const std::size_t n = R.size();
  std::set<Bitset> found;
  found.insert(Bitset::singleton(n, 0));
  std::vector<Bitset> fresh;
  for (elem a = 1; a < n; ++a) {
    Bitset p = ideal_closure(R, Bitset::singleton(n, a), s).subset;
    if (found.insert(p).second) fresh.push_back(p);
  }
  // Pairwise sum-then-closure to the full lattice.
  while (!fresh.empty()) {
    std::vector<Bitset> next;
    for (const auto& p : fresh)
      for (const auto& q : found) {
        if (found.size() + next.size() > limits.max_ideals)
          throw ResourceLimit("ideal lattice exceeds the configured bound");
        Bitset j = ideal_closure(R, p | q, s).subset;
        if (!found.count(j) && std::find(next.begin(), next.end(), j) == next.end())
          next.push_back(j);
      }
    for (auto& p : next) found.insert(p);
    fresh = std::move(next);
  }
  std::vector<SubsetIdeal> out;
  for (const auto& b : found) {
    SubsetIdeal I{b, s, is_subtractive(R, b)};
    if (!subtractive_only || I.subtractive) out.push_back(I);
  }
  std::sort(out.begin(), out.end(), [](const SubsetIdeal& a, const SubsetIdeal& b) {
    if (a.subset.count() != b.subset.count()) return a.subset.count() < b.subset.count();
    return a.subset < b.subset;
  });
  return out;
}

SubsetIdeal subtractive_closure(const Hemiring& R, const SubsetIdeal& I) {
  if (!is_ideal(R, I.subset, I.sidedness)) throw NotAnIdeal("subset is not an ideal");
  const std::size_t n = R.size();
  Bitset out(n);
  auto members = I.subset.members();
  for (elem r = 0; r < n; ++r)
    for (elem x : members)
      if (I.subset.test(R.add(r, x))) {
        out.set(r);
        break;
      }
  return SubsetIdeal{out, I.sidedness, true};
}

Partition bourne_partition(const Hemiring& R, const Bitset& ideal) {
  const std::size_t n = R.size();
  // r == r' iff (r + I) and (r' + I) meet; the relation is transitive, so
  // union-find over the pair tests yields the classes.
  std::vector<Bitset> shifted(n, Bitset(n));
  auto members = ideal.members();
  for (elem r = 0; r < n; ++r)
    for (elem x : members) shifted[r].set(R.add(r, x));
  detail::UnionFind uf(n);
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a + 1); b < n; ++b)
      if (shifted[a].intersects(shifted[b])) uf.unite(a, b);
  return uf.to_partition();
}

HemiringQuotient bourne_quotient(const HemiringPtr& R, const SubsetIdeal& I) {
  if (I.sidedness != Sidedness::two_sided || !is_ideal(*R, I.subset, Sidedness::two_sided))
    throw NotAnIdeal("Bourne quotient needs a two-sided ideal");
  return quotient(R, bourne_partition(*R, I.subset));
}

SubsetIdeal ideal_power(const Hemiring& R, const SubsetIdeal& I, unsigned k) {
  if (k == 0) throw RadxError("ideal power wants k >= 1");
  SubsetIdeal acc = I;
  for (unsigned step = 1; step < k; ++step) {
    Bitset products(R.size());
    acc.subset.for_each([&](std::size_t a) {
      I.subset.for_each([&](std::size_t b) { products.set(R.mul(elem(a), elem(b))); });
    });
    acc = ideal_closure(R, products, I.sidedness);
  }
  return acc;
}

}  // namespace radx
