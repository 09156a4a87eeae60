#include "radx/construct.hpp"

#include <algorithm>

#include "radx/ideal.hpp"

namespace radx {

namespace {

// r + x = r' + x for some x, as a partition (always a congruence).
template <typename AddFn>
Partition star_partition(std::size_t n, AddFn add) {
  detail::UnionFind uf(n);
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a + 1); b < n; ++b) {
      if (uf.find(a) == uf.find(b)) continue;
      for (elem x = 0; x < n; ++x)
        if (add(a, x) == add(b, x)) {
          uf.unite(a, b);
          break;
        }
    }
  return uf.to_partition();
}

}  // namespace

elem matrix_encode(std::size_t base_size, unsigned n, const std::vector<elem>& entries) {
  std::size_t code = 0;
  for (unsigned k = 0; k < n * n; ++k) code = code * base_size + entries[n * n - 1 - k];
  return elem(code);
}

std::vector<elem> matrix_entries(std::size_t base_size, unsigned n, elem a) {
  std::vector<elem> entries(std::size_t(n) * n);
  std::size_t code = a;
  for (unsigned k = 0; k < n * n; ++k) {
    entries[k] = elem(code % base_size);
    code /= base_size;
  }
  return entries;
}

Hemiring matrix_hemiring(const Hemiring& R, unsigned n, const Limits& limits) {
  if (n == 0) throw RadxError("matrix dimension must be positive");
  const std::size_t base = R.size();
  std::size_t carrier = 1;
  for (unsigned k = 0; k < n * n; ++k) {
    carrier *= base;
    if (carrier > limits.max_carrier)
      throw ResourceLimit("matrix hemiring carrier exceeds the configured bound");
  }

  // Entry k of the row-major matrix is digit k of the base-|R| code.
  std::vector<std::vector<elem>> decode(carrier);
  std::vector<std::string> labels(carrier);
  for (std::size_t a = 0; a < carrier; ++a) {
    decode[a] = matrix_entries(base, n, elem(a));
    std::string lab = "[";
    for (unsigned i = 0; i < n; ++i) {
      lab += i ? ",[" : "[";
      for (unsigned j = 0; j < n; ++j) {
        if (j) lab += ",";
        lab += R.label(decode[a][i * n + j]);
      }
      lab += "]";
    }
    lab += "]";
    labels[a] = lab;
  }

  std::vector<std::vector<elem>> add(carrier, std::vector<elem>(carrier));
  std::vector<std::vector<elem>> mul(carrier, std::vector<elem>(carrier));
  std::vector<elem> cell(std::size_t(n) * n);
  for (std::size_t a = 0; a < carrier; ++a)
    for (std::size_t b = 0; b < carrier; ++b) {
      const auto& A = decode[a];
      const auto& B = decode[b];
      for (unsigned k = 0; k < n * n; ++k) cell[k] = R.add(A[k], B[k]);
      add[a][b] = matrix_encode(base, n, cell);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
          elem acc = 0;
          for (unsigned k = 0; k < n; ++k)
            acc = R.add(acc, R.mul(A[i * n + k], B[k * n + j]));
          cell[i * n + j] = acc;
        }
      mul[a][b] = matrix_encode(base, n, cell);
    }
  return Hemiring::validate("M" + std::to_string(n) + "(" + R.name + ")", std::move(labels), 0,
                            add, mul);
}

elem matrix_unit(const Hemiring& R, unsigned n, unsigned i, unsigned j) {
  auto one = R.one();
  if (!one) throw RadxError("matrix units need a base semiring with identity");
  std::vector<elem> entries(std::size_t(n) * n, 0);
  entries[i * n + j] = *one;
  return matrix_encode(R.size(), n, entries);
}

Bitset matrix_subset(const Hemiring& R, unsigned n, const Bitset& entries_in) {
  std::size_t carrier = 1;
  for (unsigned k = 0; k < n * n; ++k) carrier *= R.size();
  Bitset out(carrier);
  for (std::size_t a = 0; a < carrier; ++a) {
    auto entries = matrix_entries(R.size(), n, elem(a));
    bool in = true;
    for (elem e : entries)
      if (!entries_in.test(e)) {
        in = false;
        break;
      }
    if (in) out.set(a);
  }
  return out;
}

ProductResult direct_product(const std::vector<HemiringPtr>& factors, const Limits& limits) {
  if (factors.empty()) throw RadxError("direct product of an empty family");
  std::size_t carrier = 1;
  for (const auto& F : factors) {
    carrier *= F->size();
    if (carrier > limits.max_carrier)
      throw ResourceLimit("product carrier exceeds the configured bound");
  }
  const std::size_t k = factors.size();
  std::vector<std::vector<elem>> decode(carrier, std::vector<elem>(k));
  std::vector<std::string> labels(carrier);
  for (std::size_t a = 0; a < carrier; ++a) {
    std::size_t code = a;
    // first factor varies slowest
    for (std::size_t i = k; i-- > 0;) {
      decode[a][i] = elem(code % factors[i]->size());
      code /= factors[i]->size();
    }
    std::string lab = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) lab += ",";
      lab += factors[i]->label(decode[a][i]);
    }
    labels[a] = lab + ")";
  }
  auto encode = [&](const std::vector<elem>& comps) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < k; ++i) code = code * factors[i]->size() + comps[i];
    return elem(code);
  };
  std::vector<std::vector<elem>> add(carrier, std::vector<elem>(carrier));
  std::vector<std::vector<elem>> mul(carrier, std::vector<elem>(carrier));
  std::vector<elem> cell(k);
  for (std::size_t a = 0; a < carrier; ++a)
    for (std::size_t b = 0; b < carrier; ++b) {
      for (std::size_t i = 0; i < k; ++i) cell[i] = factors[i]->add(decode[a][i], decode[b][i]);
      add[a][b] = encode(cell);
      for (std::size_t i = 0; i < k; ++i) cell[i] = factors[i]->mul(decode[a][i], decode[b][i]);
      mul[a][b] = encode(cell);
    }
  std::string name;
  for (std::size_t i = 0; i < k; ++i) name += (i ? "x" : "") + factors[i]->name;

  ProductResult out;
  out.product =
      std::make_shared<Hemiring>(Hemiring::validate(name, std::move(labels), 0, add, mul));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<elem> image(carrier);
    for (std::size_t a = 0; a < carrier; ++a) image[a] = decode[a][i];
    out.projections.push_back(HemiringMap{out.product, factors[i], std::move(image)});
  }
  return out;
}

HemiringQuotient star_quotient(const HemiringPtr& R) {
  Partition p = star_partition(R->size(), [&](elem a, elem x) { return R->add(a, x); });
  auto q = quotient(R, p);
  q.hemiring = std::make_shared<Hemiring>([&] {
    Hemiring h = *q.hemiring;
    h.name = R->name + "*";
    return h;
  }());
  q.projection.target = q.hemiring;
  return q;
}

SemimoduleQuotient star_quotient(const SemimodulePtr& M) {
  Partition p = star_partition(M->size(), [&](elem a, elem x) { return M->add(a, x); });
  auto q = quotient(M, p);
  auto renamed = std::make_shared<Semimodule>(*q.semimodule);
  renamed->name = M->name + "*";
  q.semimodule = renamed;
  q.projection.target = renamed;
  return q;
}

DifferencesResult differences(const HemiringPtr& R) {
  // The star quotient of a finite hemiring is cancellative, hence an additive
  // group, and the pair classes (a,b) of D(R) biject with classes of a - b.
  auto star = star_quotient(R);
  const Hemiring& S = *star.hemiring;
  if (!S.is_ring())
    throw RadxError("internal: star quotient of a finite hemiring must be a group");

  DifferencesResult out;
  out.ring = std::make_shared<Hemiring>([&] {
    Hemiring h = S;
    h.name = "D(" + R->name + ")";
    return h;
  }());
  std::vector<elem> image(R->size());
  for (elem r = 0; r < R->size(); ++r) image[r] = star.projection.image[r];
  out.xi = HemiringMap{R, out.ring, std::move(image)};
  return out;
}

ModuleDifferencesResult differences(const SemimodulePtr& M) {
  auto star = star_quotient(M);
  ModuleDifferencesResult out;
  auto renamed = std::make_shared<Semimodule>(*star.semimodule);
  renamed->name = "D(" + M->name + ")";
  out.module = renamed;
  out.xi = SemimoduleMap{M, out.module, star.projection.image};
  return out;
}

bool is_endomorphism(const CommMonoid& M, const std::vector<elem>& values) {
  const std::size_t n = M.size();
  if (values.size() != n || values[0] != 0) return false;
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a); b < n; ++b)
      if (values[M.add(a, b)] != M.add(values[a], values[b])) return false;
  return true;
}

elem EndHemiring::index_of(const Endomorphism& f) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), f);
  if (it == maps.end() || !(*it == f)) throw RadxError("map is not an endomorphism of the host");
  return elem(it - maps.begin());
}

elem EndHemiring::identity_map() const {
  Endomorphism id;
  id.values.resize(monoid->size());
  for (std::size_t i = 0; i < monoid->size(); ++i) id.values[i] = elem(i);
  return index_of(id);
}

EndHemiring endomorphism_hemiring(const CommMonoidPtr& M, const Limits& limits) {
  const std::size_t n = M->size();
  if (n > limits.max_end_monoid)
    throw ResourceLimit("endomorphism scan exceeds the configured carrier bound");

  // Filter all |M|^|M| candidate maps. The zero map sorts first, so it gets
  // index 0 as the additive identity of End(M).
  std::vector<Endomorphism> maps;
  std::vector<elem> values(n, 0);
  for (;;) {
    if (is_endomorphism(*M, values)) maps.push_back(Endomorphism{values});
    std::size_t k = n;
    while (k-- > 1) {  // values[0] stays 0
      if (++values[k] < n) break;
      values[k] = 0;
    }
    if (k == 0) break;
  }
  std::sort(maps.begin(), maps.end());

  const std::size_t cnt = maps.size();
  std::vector<std::string> labels(cnt);
  for (std::size_t i = 0; i < cnt; ++i) {
    std::string lab = "(";
    for (std::size_t x = 0; x < n; ++x) {
      if (x) lab += ",";
      lab += M->label(maps[i].values[x]);
    }
    labels[i] = lab + ")";
  }
  auto find = [&](const Endomorphism& f) {
    return elem(std::lower_bound(maps.begin(), maps.end(), f) - maps.begin());
  };
  std::vector<std::vector<elem>> add(cnt, std::vector<elem>(cnt)), mul(cnt,
                                                                       std::vector<elem>(cnt));
  Endomorphism tmp;
  tmp.values.resize(n);
  for (std::size_t i = 0; i < cnt; ++i)
    for (std::size_t j = 0; j < cnt; ++j) {
      for (std::size_t x = 0; x < n; ++x)
        tmp.values[x] = M->add(maps[i].values[x], maps[j].values[x]);
      add[i][j] = find(tmp);
      for (std::size_t x = 0; x < n; ++x) tmp.values[x] = maps[i].values[maps[j].values[x]];
      mul[i][j] = find(tmp);
    }

  EndHemiring out;
  out.monoid = M;
  out.maps = std::move(maps);
  out.ring = std::make_shared<Hemiring>(
      Hemiring::validate("End(" + M->name + ")", std::move(labels), 0, add, mul));
  return out;
}

Endomorphism step_endomorphism(const CommMonoid& M, elem a, elem b) {
  if (!M.idempotent()) throw NotASemilattice("step endomorphisms need a join-semilattice");
  Endomorphism f;
  f.values.resize(M.size());
  for (elem x = 0; x < M.size(); ++x) f.values[x] = M.leq(x, a) ? 0 : b;
  return f;
}

DensityReport density_check(const EndHemiring& E, const Bitset& sub) {
  const CommMonoid& M = *E.monoid;
  const std::size_t cnt = E.ring->size();
  // F_M: additive submonoid generated by all step endomorphisms.
  Bitset F(cnt);
  F.set(0);
  std::vector<elem> work;
  for (elem a = 0; a < M.size(); ++a)
    for (elem b = 0; b < M.size(); ++b) {
      elem idx = E.index_of(step_endomorphism(M, a, b));
      if (!F.test(idx)) {
        F.set(idx);
        work.push_back(idx);
      }
    }
  while (!work.empty()) {
    elem f = work.back();
    work.pop_back();
    F.for_each([&](std::size_t g) {
      elem s = E.ring->add(f, elem(g));
      if (!F.test(s)) {
        F.set(s);
        work.push_back(s);
      }
    });
  }
  DensityReport rep;
  rep.step_monoid = F;
  rep.dense = F.is_subset_of(sub);
  return rep;
}

CornerResult corner(const HemiringPtr& R, elem e) {
  if (R->mul(e, e) != e) throw NotIdempotent("corner wants an idempotent element");
  const std::size_t n = R->size();
  CornerResult out;
  out.to_corner.resize(n);
  Bitset carrier(n);
  for (elem r = 0; r < n; ++r) carrier.set(R->mul(R->mul(e, r), e));
  out.carrier = carrier.members();
  std::vector<elem> back(n, 0);
  for (std::size_t i = 0; i < out.carrier.size(); ++i) back[out.carrier[i]] = elem(i);
  for (elem r = 0; r < n; ++r) out.to_corner[r] = back[R->mul(R->mul(e, r), e)];
  out.corner = std::make_shared<Hemiring>(
      subhemiring(*R, carrier, "corner(" + R->name + "," + R->label(e) + ")"));
  out.is_full =
      ideal_closure(*R, Bitset::singleton(n, e), Sidedness::two_sided).subset.count() == n;
  return out;
}

}  // namespace radx
