#include "radx/semimodule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "radx/construct.hpp"

namespace radx {

namespace {

[[noreturn]] void fail_axiom(const std::string& axiom, std::vector<elem> witness,
                             const std::string& text) {
  throw AxiomViolation(axiom, std::move(witness), "axiom '" + axiom + "' fails: " + text);
}

}  // namespace

std::optional<elem> Semimodule::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return elem(i);
  return std::nullopt;
}

Semimodule Semimodule::validate(std::string name, HemiringPtr ring,
                                std::vector<std::string> labels, elem zero,
                                const std::vector<std::vector<elem>>& add,
                                const std::vector<std::vector<elem>>& action) {
  const std::size_t n = labels.size();
  const std::size_t nr = ring->size();
  if (n == 0) throw MalformedTables("empty carrier");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw MalformedTables("element labels not distinct");
  }
  if (zero >= n) throw MalformedTables("zero index out of range");
  if (add.size() != n) throw MalformedTables("add table is not |M| rows");
  for (const auto& row : add) {
    if (row.size() != n) throw MalformedTables("add table is not square");
    for (elem v : row)
      if (v >= n) throw MalformedTables("add table entry out of range");
  }
  if (action.size() != nr) throw MalformedTables("action table is not |R| rows");
  for (const auto& row : action) {
    if (row.size() != n) throw MalformedTables("action table is not |R| x |M|");
    for (elem v : row)
      if (v >= n) throw MalformedTables("action table entry out of range");
  }

  std::vector<elem> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = elem(i);
  std::swap(perm[0], perm[zero]);

  Semimodule M;
  M.name = std::move(name);
  M.ring_ = std::move(ring);
  M.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) M.labels_[perm[i]] = labels[i];
  std::vector<elem> ac(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ac[std::size_t(perm[a]) * n + perm[b]] = perm[add[a][b]];
  std::vector<elem> tc(nr * n);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t m = 0; m < n; ++m) tc[r * n + perm[m]] = perm[action[r][m]];
  M.add_ = OpTable(n, std::move(ac));
  M.act_ = ActionTable(nr, n, std::move(tc));

  const Hemiring& R = *M.ring_;
  for (elem a = 0; a < n; ++a) {
    if (M.add(0, a) != a || M.add(a, 0) != a) fail_axiom("additive identity", {a}, M.labels_[a]);
  }
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a); b < n; ++b)
      if (M.add(a, b) != M.add(b, a))
        fail_axiom("additive commutativity", {a, b}, M.labels_[a] + "," + M.labels_[b]);
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (M.add(M.add(a, b), c) != M.add(a, M.add(b, c)))
          fail_axiom("additive associativity", {a, b, c},
                     M.labels_[a] + "," + M.labels_[b] + "," + M.labels_[c]);
  // (r r') m = r (r' m)
  for (elem r = 0; r < nr; ++r)
    for (elem s = 0; s < nr; ++s)
      for (elem m = 0; m < n; ++m)
        if (M.act(R.mul(r, s), m) != M.act(r, M.act(s, m)))
          fail_axiom("(rr')m = r(r'm)", {r, s, m},
                     "r=" + R.label(r) + ", r'=" + R.label(s) + ", m=" + M.labels_[m]);
  // r (m + m') = rm + rm'
  for (elem r = 0; r < nr; ++r)
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        if (M.act(r, M.add(a, b)) != M.add(M.act(r, a), M.act(r, b)))
          fail_axiom("r(m+m') = rm+rm'", {r, a, b},
                     "r=" + R.label(r) + ", m=" + M.labels_[a] + ", m'=" + M.labels_[b]);
  // (r + r') m = rm + r'm
  for (elem r = 0; r < nr; ++r)
    for (elem s = 0; s < nr; ++s)
      for (elem m = 0; m < n; ++m)
        if (M.act(R.add(r, s), m) != M.add(M.act(r, m), M.act(s, m)))
          fail_axiom("(r+r')m = rm+r'm", {r, s, m},
                     "r=" + R.label(r) + ", r'=" + R.label(s) + ", m=" + M.labels_[m]);
  // r 0 = 0 = 0 m
  for (elem r = 0; r < nr; ++r)
    if (M.act(r, 0) != 0) fail_axiom("r0 = 0", {r}, R.label(r));
  for (elem m = 0; m < n; ++m)
    if (M.act(0, m) != 0) fail_axiom("0m = 0", {m}, M.labels_[m]);

  return M;
}

Semimodule Semimodule::regular(const HemiringPtr& R) {
  const std::size_t n = R->size();
  std::vector<std::vector<elem>> add(n, std::vector<elem>(n)), act(n, std::vector<elem>(n));
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      add[a][b] = R->add(a, b);
      act[a][b] = R->mul(a, b);
    }
  return validate("_" + R->name, R, R->labels(), 0, add, act);
}

SemimoduleQuotient quotient(const SemimodulePtr& M, const Partition& p) {
  if (!is_congruence(*M, p)) throw IncompatiblePartition("partition is not a congruence");
  auto reps = p.block_reps();
  const std::size_t m = reps.size();
  const std::size_t nr = M->ring().size();
  std::vector<elem> to_block(M->size());
  for (std::size_t i = 0; i < m; ++i)
    p.block_members(reps[i]).for_each([&](std::size_t x) { to_block[x] = elem(i); });

  std::vector<std::string> labels(m);
  std::vector<std::vector<elem>> add(m, std::vector<elem>(m));
  std::vector<std::vector<elem>> act(nr, std::vector<elem>(m));
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = M->label(reps[i]);
    for (std::size_t j = 0; j < m; ++j) add[i][j] = to_block[M->add(reps[i], reps[j])];
  }
  for (elem r = 0; r < nr; ++r)
    for (std::size_t i = 0; i < m; ++i) act[r][i] = to_block[M->act(r, reps[i])];

  SemimoduleQuotient q;
  q.partition = p;
  q.semimodule = std::make_shared<Semimodule>(Semimodule::validate(
      M->name + "/~", M->ring_ptr(), std::move(labels), to_block[0], add, act));
  std::vector<elem> image(M->size());
  for (elem a = 0; a < M->size(); ++a) image[a] = to_block[a];
  q.projection = SemimoduleMap{M, q.semimodule, std::move(image)};
  return q;
}

Bitset annihilator(const Semimodule& M) {
  const std::size_t nr = M.ring().size();
  Bitset ann(nr);
  for (elem r = 0; r < nr; ++r) {
    bool kills = true;
    for (elem m = 0; m < M.size() && kills; ++m) kills = M.act(r, m) == 0;
    if (kills) ann.set(r);
  }
  return ann;
}

Bitset zeroid(const Semimodule& M) {
  const std::size_t n = M.size();
  Bitset z(n);
  for (elem m = 0; m < n; ++m)
    for (elem x = 0; x < n; ++x)
      if (M.add(m, x) == x) {
        z.set(m);
        break;
      }
  return z;
}

bool action_is_nonzero(const Semimodule& M) {
  for (elem r = 0; r < M.ring().size(); ++r)
    for (elem m = 0; m < M.size(); ++m)
      if (M.act(r, m) != 0) return true;
  return false;
}

bool is_cancellative(const Semimodule& M) {
  const std::size_t n = M.size();
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a + 1); b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (M.add(a, c) == M.add(b, c)) return false;
  return true;
}

Bitset subsemimodule_closure(const Semimodule& M, const Bitset& seed) {
  const std::size_t n = M.size();
  const std::size_t nr = M.ring().size();
  Bitset S(n);
  S.set(0);
  std::vector<elem> work;
  seed.for_each([&](std::size_t a) {
    if (!S.test(a)) {
      S.set(a);
      work.push_back(elem(a));
    }
  });
  auto push = [&](elem v) {
    if (!S.test(v)) {
      S.set(v);
      work.push_back(v);
    }
  };
  while (!work.empty()) {
    elem a = work.back();
    work.pop_back();
    S.for_each([&](std::size_t b) { push(M.add(a, elem(b))); });
    for (elem r = 0; r < nr; ++r) push(M.act(r, a));
  }
  return S;
}

bool has_only_trivial_subsemimodules(const Semimodule& M) {
  const std::size_t n = M.size();
  if (n < 2) return false;
  for (elem m = 1; m < n; ++m)
    if (subsemimodule_closure(M, Bitset::singleton(n, m)).count() != n) return false;
  return true;
}

namespace {

bool has_only_trivial_congruences(const Semimodule& M) {
  const std::size_t n = M.size();
  if (n < 2) return false;
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a + 1); b < n; ++b)
      if (!congruence_closure(M, {{a, b}}).is_full()) return false;
  return true;
}

// Smallest subtractive subsemimodule containing the seed.
Bitset subtractive_subsemimodule_closure(const Semimodule& M, const Bitset& seed) {
  const std::size_t n = M.size();
  Bitset S = subsemimodule_closure(M, seed);
  for (;;) {
    Bitset grown = S;
    for (elem x = 0; x < n; ++x) {
      if (grown.test(x)) continue;
      bool in = false;
      S.for_each([&](std::size_t a) {
        if (!in && S.test(M.add(x, elem(a)))) in = true;
      });
      if (in) grown.set(x);
    }
    if (grown == S) return S;
    S = subsemimodule_closure(M, grown);
  }
}

}  // namespace

bool is_simple(const Semimodule& M) {
  return action_is_nonzero(M) && has_only_trivial_subsemimodules(M) &&
         has_only_trivial_congruences(M);
}

bool is_irreducible(const Semimodule& M) {
  const std::size_t n = M.size();
  const std::size_t nr = M.ring().size();
  if (n < 2) return false;
  if (!is_cancellative(M)) return false;
  // For every m1 != m2 and every m there must be r1, r2 with
  // m + r1 m1 + r2 m2 = r1 m2 + r2 m1.
  for (elem m1 = 0; m1 < n; ++m1)
    for (elem m2 = 0; m2 < n; ++m2) {
      if (m1 == m2) continue;
      for (elem m = 0; m < n; ++m) {
        bool found = false;
        for (elem r1 = 0; r1 < nr && !found; ++r1)
          for (elem r2 = 0; r2 < nr && !found; ++r2) {
            elem lhs = M.add(m, M.add(M.act(r1, m1), M.act(r2, m2)));
            elem rhs = M.add(M.act(r1, m2), M.act(r2, m1));
            found = lhs == rhs;
          }
        if (!found) return false;
      }
    }
  return true;
}

bool is_semi_irreducible(const Semimodule& M) {
  const std::size_t n = M.size();
  if (n < 2) return false;
  if (!is_cancellative(M) || !action_is_nonzero(M)) return false;
  for (elem m = 1; m < n; ++m)
    if (subtractive_subsemimodule_closure(M, Bitset::singleton(n, m)).count() != n) return false;
  return true;
}

bool is_w_finitely_generated(const Semimodule& M) {
  const std::size_t n = M.size();
  const std::size_t nr = M.ring().size();
  // Pair-closure criterion: close {(rm'+sm, rm+sm') | r,s in R, (m,m') in M^2}
  // under pairwise addition in M^2 and ask that every m admits (A,B) in the
  // closure with m + A = B.
  std::set<IndexPair> base;
  base.insert({0, 0});
  for (elem r = 0; r < nr; ++r)
    for (elem s = 0; s < nr; ++s)
      for (elem m = 0; m < n; ++m)
        for (elem mp = 0; mp < n; ++mp) {
          elem left = M.add(M.act(r, mp), M.act(s, m));
          elem right = M.add(M.act(r, m), M.act(s, mp));
          base.insert({left, right});
        }
  std::vector<char> in(n * n, 0);
  std::vector<IndexPair> all, work;
  auto push = [&](elem a, elem b) {
    if (!in[std::size_t(a) * n + b]) {
      in[std::size_t(a) * n + b] = 1;
      all.emplace_back(a, b);
      work.emplace_back(a, b);
    }
  };
  for (auto [a, b] : base) push(a, b);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto [c, d] = all[i];
      push(M.add(a, c), M.add(b, d));
    }
  }
  for (elem m = 0; m < n; ++m) {
    bool ok = false;
    for (std::size_t i = 0; i < all.size() && !ok; ++i)
      ok = M.add(m, all[i].first) == all[i].second;
    if (!ok) return false;
  }
  return true;
}

SemimoduleReport semimodule_report(const Semimodule& M) {
  SemimoduleReport rep;
  rep.annihilator = annihilator(M);
  rep.faithful = rep.annihilator.count() == 1;
  rep.cancellative = is_cancellative(M);
  rep.simple = is_simple(M);
  rep.irreducible = is_irreducible(M);
  rep.semi_irreducible = is_semi_irreducible(M);
  rep.w_finitely_generated = is_w_finitely_generated(M);
  rep.zeroid = zeroid(M);
  return rep;
}

namespace {

// Invariant coloring for the isomorphism search: refine by addition and by
// every scalar translation (the ring is shared, so scalar indices are rigid).
std::vector<int> semimodule_colors(const Semimodule& M) {
  const std::size_t n = M.size();
  const std::size_t nr = M.ring().size();
  std::vector<int> color(n, 0);
  color[0] = -1;  // zero is pinned
  for (;;) {
    std::map<std::vector<int>, std::vector<elem>> buckets;
    for (elem a = 0; a < n; ++a) {
      std::vector<int> sig;
      sig.push_back(color[a]);
      std::vector<int> row;
      for (elem b = 0; b < n; ++b) row.push_back(color[M.add(a, b)]);
      std::sort(row.begin(), row.end());
      sig.insert(sig.end(), row.begin(), row.end());
      for (elem r = 0; r < nr; ++r) sig.push_back(color[M.act(r, a)]);
      buckets[std::move(sig)].push_back(a);
    }
    std::vector<int> next(n);
    int id = 0;
    for (const auto& [sig, members] : buckets) {
      for (elem a : members) next[a] = id;
      ++id;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct IsoSearch {
  const Semimodule& A;
  const Semimodule& B;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<elem> map;
  std::vector<char> used;

  bool extend(elem pos) {
    const std::size_t n = A.size();
    if (pos == n) return verify();
    for (elem img = 0; img < n; ++img) {
      if (used[img] || ca[pos] != cb[img]) continue;
      if (!consistent(pos, img)) continue;
      map[pos] = img;
      used[img] = 1;
      if (extend(elem(pos + 1))) return true;
      used[img] = 0;
    }
    return false;
  }

  // Constraints whose arguments and value are all decided already.
  bool consistent(elem pos, elem img) const {
    for (elem b = 0; b <= pos; ++b) {
      elem bi = b == pos ? img : map[b];
      elem s = A.add(pos, b);
      if (s < pos && map[s] != B.add(img, bi)) return false;
      if (s == pos && B.add(img, bi) != img) return false;
    }
    for (elem r = 0; r < A.ring().size(); ++r) {
      elem v = A.act(r, pos);
      if (v < pos && map[v] != B.act(r, img)) return false;
      if (v == pos && B.act(r, img) != img) return false;
    }
    return true;
  }

  bool verify() const {
    const std::size_t n = A.size();
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        if (map[A.add(a, b)] != B.add(map[a], map[b])) return false;
    for (elem r = 0; r < A.ring().size(); ++r)
      for (elem m = 0; m < n; ++m)
        if (map[A.act(r, m)] != B.act(r, map[m])) return false;
    return true;
  }
};

}  // namespace

bool are_isomorphic(const Semimodule& A, const Semimodule& B) {
  if (A.size() != B.size()) return false;
  if (!(A.ring() == B.ring())) return false;
  auto ca = semimodule_colors(A);
  auto cb = semimodule_colors(B);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const std::size_t n = A.size();
  if (n == 1) return true;
  IsoSearch search{A, B, ca, cb, std::vector<elem>(n, 0), std::vector<char>(n, 0)};
  search.used[0] = 1;
  return search.extend(1);
}

std::vector<Semimodule> enumerate_simple_semimodules(const HemiringPtr& R, const Limits& limits) {
  auto reg = std::make_shared<Semimodule>(Semimodule::regular(R));
  std::vector<Semimodule> out;
  std::size_t counter = 0;
  for (const auto& p : enumerate_congruences(*reg, limits)) {
    auto q = quotient(reg, p);
    const Semimodule& M = *q.semimodule;
    if (M.size() < 2) continue;
    if (!action_is_nonzero(M)) continue;
    if (!has_only_trivial_subsemimodules(M)) continue;
    if (!is_simple(M)) continue;
    bool known = false;
    for (const auto& seen : out)
      if (are_isomorphic(seen, M)) {
        known = true;
        break;
      }
    if (!known) {
      Semimodule copy = M;
      copy.name = "simple" + std::to_string(counter++) + "(" + R->name + ")";
      out.push_back(std::move(copy));
    }
  }
  return out;
}

std::vector<Semimodule> enumerate_irreducible_semimodules(const HemiringPtr& R,
                                                          const Limits& limits) {
  // Irreducible semimodules are the simple D(R*)-modules with nonzero action,
  // pulled back along r -> class of r*.
  auto star = star_quotient(R);
  auto diff = differences(star.hemiring);
  const HemiringPtr& D = diff.ring;
  std::vector<elem> r_to_d(R->size());
  for (elem r = 0; r < R->size(); ++r) r_to_d[r] = diff.xi.image[star.projection.image[r]];

  std::vector<Semimodule> out;
  if (D->size() < 2) return out;
  auto regD = std::make_shared<Semimodule>(Semimodule::regular(D));
  std::size_t counter = 0;
  for (const auto& p : enumerate_congruences(*regD, limits)) {
    auto q = quotient(regD, p);
    const Semimodule& M = *q.semimodule;
    if (M.size() < 2) continue;
    if (!action_is_nonzero(M)) continue;
    if (!has_only_trivial_subsemimodules(M)) continue;
    if (!is_simple(M)) continue;
    // Pull the action back to R.
    const std::size_t n = M.size();
    std::vector<std::vector<elem>> add(n, std::vector<elem>(n));
    std::vector<std::vector<elem>> act(R->size(), std::vector<elem>(n));
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b) add[a][b] = M.add(a, b);
    for (elem r = 0; r < R->size(); ++r)
      for (elem m = 0; m < n; ++m) act[r][m] = M.act(r_to_d[r], m);
    Semimodule pulled = Semimodule::validate(
        "irreducible" + std::to_string(counter) + "(" + R->name + ")", R, M.labels(), 0, add,
        act);
    bool known = false;
    for (const auto& seen : out)
      if (are_isomorphic(seen, pulled)) {
        known = true;
        break;
      }
    if (!known) {
      ++counter;
      out.push_back(std::move(pulled));
    }
  }
  return out;
}

}  // namespace radx
