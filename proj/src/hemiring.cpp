#include "radx/hemiring.hpp"

#include <algorithm>
#include <set>

#include "radx/ideal.hpp"

namespace radx {

namespace {

std::string witness_text(const Hemiring* R, const std::vector<std::string>& labels,
                         const std::vector<elem>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += R ? R->label(w[i]) : labels[w[i]];
  }
  return s + ")";
}

[[noreturn]] void fail_axiom(const std::vector<std::string>& labels, const std::string& axiom,
                             std::vector<elem> witness) {
  throw AxiomViolation(axiom, witness,
                       "axiom '" + axiom + "' fails at witness " +
                           witness_text(nullptr, labels, witness));
}

}  // namespace

std::optional<elem> Hemiring::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return elem(i);
  return std::nullopt;
}

Hemiring Hemiring::validate(std::string name, std::vector<std::string> labels, elem zero,
                            const std::vector<std::vector<elem>>& add,
                            const std::vector<std::vector<elem>>& mul) {
  const std::size_t n = labels.size();
  if (n == 0) throw MalformedTables("empty carrier");
  if (n > 0xFFFF) throw MalformedTables("carrier too large for element indices");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw MalformedTables("element labels not distinct");
  }
  if (zero >= n) throw MalformedTables("zero index out of range");
  auto check_square = [&](const std::vector<std::vector<elem>>& t, const char* which) {
    if (t.size() != n) throw MalformedTables(std::string(which) + " table is not " +
                                             std::to_string(n) + " rows");
    for (const auto& row : t) {
      if (row.size() != n) throw MalformedTables(std::string(which) + " table is not square");
      for (elem v : row)
        if (v >= n) throw MalformedTables(std::string(which) + " table entry out of range");
    }
  };
  check_square(add, "add");
  check_square(mul, "mul");

  // Normalize the additive identity to index 0 by swapping 0 <-> zero.
  std::vector<elem> perm(n);  // perm[old] = new
  for (std::size_t i = 0; i < n; ++i) perm[i] = elem(i);
  std::swap(perm[0], perm[zero]);

  Hemiring R;
  R.name = std::move(name);
  R.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) R.labels_[perm[i]] = labels[i];
  std::vector<elem> ac(n * n), mc(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ac[std::size_t(perm[a]) * n + perm[b]] = perm[add[a][b]];
      mc[std::size_t(perm[a]) * n + perm[b]] = perm[mul[a][b]];
    }
  R.add_ = OpTable(n, std::move(ac));
  R.mul_ = OpTable(n, std::move(mc));

  // Exhaustive axiom checks, witnesses in normalized indices.
  const auto& L = R.labels_;
  for (elem a = 0; a < n; ++a) {
    if (R.add(0, a) != a || R.add(a, 0) != a)
      fail_axiom(L, "additive identity", {a});
    if (R.mul(0, a) != 0 || R.mul(a, 0) != 0)
      fail_axiom(L, "zero absorption", {a});
  }
  for (elem a = 0; a < n; ++a)
    for (elem b = a; b < n; ++b)
      if (R.add(a, b) != R.add(b, a)) fail_axiom(L, "additive commutativity", {a, b});
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c) {
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
          fail_axiom(L, "additive associativity", {a, b, c});
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
          fail_axiom(L, "multiplicative associativity", {a, b, c});
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
          fail_axiom(L, "left distributivity", {a, b, c});
        if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
          fail_axiom(L, "right distributivity", {a, b, c});
      }

  R.finish_construction();
  return R;
}

void Hemiring::finish_construction() {
  const std::size_t n = size();
  // Multiplicative identity, if any.
  for (elem e = 0; e < n; ++e) {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      one_ = e;
      break;
    }
  }
  // Additive inverses, if the monoid is a group.
  std::vector<elem> neg(n, 0);
  bool ring = true;
  for (elem a = 0; a < n && ring; ++a) {
    ring = false;
    for (elem b = 0; b < n; ++b)
      if (add(a, b) == 0) {
        neg[a] = b;
        ring = true;
        break;
      }
  }
  if (ring) neg_ = std::move(neg);
}

Bitset zeroid(const Hemiring& R) {
  const std::size_t n = R.size();
  Bitset z(n);
  for (elem r = 0; r < n; ++r)
    for (elem x = 0; x < n; ++x)
      if (R.add(r, x) == x) {
        z.set(r);
        break;
      }
  return z;
}

Hemiring subhemiring(const Hemiring& R, const Bitset& carrier, std::string name) {
  if (!carrier.test(0)) throw MalformedTables("sub-hemiring carrier must contain 0");
  auto members = carrier.members();
  const std::size_t m = members.size();
  std::vector<elem> back(R.size(), 0);
  for (std::size_t i = 0; i < m; ++i) back[members[i]] = elem(i);
  std::vector<std::vector<elem>> add(m, std::vector<elem>(m)), mul(m, std::vector<elem>(m));
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = R.label(members[i]);
    for (std::size_t j = 0; j < m; ++j) {
      elem s = R.add(members[i], members[j]);
      elem p = R.mul(members[i], members[j]);
      if (!carrier.test(s) || !carrier.test(p))
        throw MalformedTables("subset is not closed under the operations");
      add[i][j] = back[s];
      mul[i][j] = back[p];
    }
  }
  return Hemiring::validate(std::move(name), std::move(labels), 0, add, mul);
}

bool is_additively_idempotent(const Hemiring& R) {
  for (elem a = 0; a < R.size(); ++a)
    if (R.add(a, a) != a) return false;
  return true;
}

bool is_commutative(const Hemiring& R) {
  for (elem a = 0; a < R.size(); ++a)
    for (elem b = a + 1; b < R.size(); ++b)
      if (R.mul(a, b) != R.mul(b, a)) return false;
  return true;
}

bool is_additively_cancellative(const Hemiring& R) {
  for (elem a = 0; a < R.size(); ++a)
    for (elem b = elem(a + 1); b < R.size(); ++b)
      for (elem c = 0; c < R.size(); ++c)
        if (R.add(a, c) == R.add(b, c)) return false;
  return true;
}

bool is_additively_regular(const Hemiring& R) {
  for (elem a = 0; a < R.size(); ++a) {
    bool found = false;
    for (elem x = 0; x < R.size() && !found; ++x) found = R.add(R.add(a, x), a) == a;
    if (!found) return false;
  }
  return true;
}

bool is_lattice_ordered(const Hemiring& R) {
  const std::size_t n = R.size();
  if (!is_additively_idempotent(R)) return false;
  // Order x <= y iff x + y = y; a + b is already the join. Demand all binary
  // meets and ab <= a ^ b.
  auto leq = [&](elem x, elem y) { return R.add(x, y) == y; };
  std::vector<std::vector<elem>> meet(n, std::vector<elem>(n));
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      bool found = false;
      for (elem m = 0; m < n; ++m) {
        if (!leq(m, a) || !leq(m, b)) continue;
        bool greatest = true;
        for (elem c = 0; c < n && greatest; ++c)
          if (leq(c, a) && leq(c, b) && !leq(c, m)) greatest = false;
        if (greatest) {
          meet[a][b] = m;
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      if (!leq(R.mul(a, b), meet[a][b])) return false;
  return true;
}

bool is_ideal_simple(const Hemiring& R) {
  const std::size_t n = R.size();
  if (n < 2) return false;
  for (elem a = 1; a < n; ++a)
    if (ideal_closure(R, Bitset::singleton(n, a), Sidedness::two_sided).subset.count() != n)
      return false;
  return true;
}

bool is_congruence_simple(const Hemiring& R) {
  const std::size_t n = R.size();
  if (n < 2) return false;
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a + 1); b < n; ++b)
      if (!congruence_closure(R, {{a, b}}).is_full()) return false;
  return true;
}

Classification classify(const Hemiring& R, const Limits& limits) {
  Classification c;
  c.identity = R.one();
  c.is_semiring = c.identity.has_value();
  c.commutative = is_commutative(R);
  c.additively_idempotent = is_additively_idempotent(R);
  c.additively_cancellative = is_additively_cancellative(R);
  c.additively_regular = is_additively_regular(R);
  c.zeroid = zeroid(R);
  c.zeroic = c.identity ? c.zeroid.test(*c.identity) : c.zeroid.count() == R.size();
  c.lattice_ordered = is_lattice_ordered(R);

  auto ideals = enumerate_ideals(R, Sidedness::two_sided, false, limits);
  c.subtractive_hemiring = true;
  for (const auto& I : ideals)
    if (!I.subtractive) {
      c.subtractive_hemiring = false;
      break;
    }
  c.strongly_subtractive = true;
  for (const auto& I : ideals) {
    if (I.subset.count() < 2) continue;  // the zero ideal is trivially subtractive
    Hemiring sub = subhemiring(R, I.subset, R.name + "|ideal");
    for (const auto& K : enumerate_ideals(sub, Sidedness::two_sided, false, limits))
      if (!K.subtractive) {
        c.strongly_subtractive = false;
        break;
      }
    if (!c.strongly_subtractive) break;
  }

  c.ideal_simple = R.size() >= 2 && ideals.size() == 2;
  c.congruence_simple = is_congruence_simple(R);
  c.simple = c.congruence_simple && c.ideal_simple && c.is_semiring;
  return c;
}

}  // namespace radx
