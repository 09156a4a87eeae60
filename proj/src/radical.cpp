#include "radx/radical.hpp"

#include <algorithm>

namespace radx {

std::string to_string(RadicalKind k) {
  switch (k) {
    case RadicalKind::J: return "J";
    case RadicalKind::Js: return "Js";
    case RadicalKind::BM: return "BM";
    case RadicalKind::BMCs: return "BMCs";
  }
  return "?";
}

std::string to_string(JacobsonMethod m) {
  switch (m) {
    case JacobsonMethod::star_differences: return "star_differences";
    case JacobsonMethod::semiregular: return "semiregular";
    case JacobsonMethod::annihilators: return "annihilators";
  }
  return "?";
}

Bitset ring_jacobson(const Hemiring& D) {
  if (!D.is_ring()) throw NotARing("additive monoid is not a group");
  const std::size_t n = D.size();
  Bitset rad(n);
  rad.set(0);
  // Finite, hence artinian: the radical is the largest nilpotent two-sided
  // ideal, so x belongs iff the ideal it generates is nilpotent.
  for (elem x = 1; x < n; ++x) {
    SubsetIdeal I = ideal_closure(D, Bitset::singleton(n, x), Sidedness::two_sided);
    SubsetIdeal power = I;
    bool nilpotent = false;
    for (;;) {
      if (power.subset.count() == 1) {
        nilpotent = true;
        break;
      }
      // Square the current power; the chain I, I^2, I^4, ... hits {0} iff I
      // is nilpotent, and a nonzero fixpoint ends the search.
      Bitset products(n);
      power.subset.for_each([&](std::size_t a) {
        power.subset.for_each([&](std::size_t b) { products.set(D.mul(elem(a), elem(b))); });
      });
      SubsetIdeal next = ideal_closure(D, products, Sidedness::two_sided);
      if (next.subset == power.subset) break;
      power = next;
    }
    if (nilpotent) rad.set(x);
  }
  return rad;
}

namespace {

bool semiregular_pair_ok(const Hemiring& R, const std::vector<elem>& members, elem i1, elem i2) {
  for (elem j1 : members)
    for (elem j2 : members) {
      elem lhs = R.add(R.add(R.add(i1, j1), R.mul(i1, j1)), R.mul(i2, j2));
      elem rhs = R.add(R.add(R.add(i2, j2), R.mul(i1, j2)), R.mul(i2, j1));
      if (lhs == rhs) return true;
    }
  return false;
}

}  // namespace

bool is_right_semiregular(const Hemiring& R, const Bitset& I) {
  auto members = I.members();
  for (elem i1 : members)
    for (elem i2 : members)
      if (!semiregular_pair_ok(R, members, i1, i2)) return false;
  return true;
}

namespace {

RadicalResult jacobson_star(const HemiringPtr& R) {
  RadicalResult out;
  out.kind = RadicalKind::J;
  out.method = "star_differences";
  auto star = star_quotient(R);
  auto diff = differences(star.hemiring);
  Bitset dj = ring_jacobson(*diff.ring);
  Bitset subset(R->size());
  for (elem r = 0; r < R->size(); ++r)
    if (dj.test(diff.xi.image[star.projection.image[r]])) subset.set(r);
  out.subset = subset;
  out.notes = "star classes: " + std::to_string(star.hemiring->size()) +
              ", ring of differences: " + std::to_string(diff.ring->size()) +
              ", ring radical size: " + std::to_string(dj.count());
  return out;
}

RadicalResult jacobson_semiregular(const HemiringPtr& R, const Limits& limits) {
  const std::size_t n = R->size();
  if (n > limits.max_subset_scan_log2)
    throw ResourceLimit("semiregular subset scan exceeds 2^" +
                        std::to_string(limits.max_subset_scan_log2));
  RadicalResult out;
  out.kind = RadicalKind::J;
  out.method = "semiregular";
  Bitset uni(n);
  uni.set(0);
  // Scan every subset; keep the right ideals satisfying the pairwise
  // semiregularity condition, then close their union as a right ideal.
  std::vector<Bitset> semiregular;
  const std::size_t total = std::size_t(1) << n;
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (!(mask & 1)) continue;  // must contain 0 (index 0 = bit 0)
    Bitset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) s.set(i);
    if (!is_ideal(*R, s, Sidedness::right)) continue;
    if (is_right_semiregular(*R, s)) semiregular.push_back(s);
  }
  Bitset uni2(n);
  for (const auto& s : semiregular) uni2 |= s;
  out.subset = ideal_closure(*R, uni2, Sidedness::right).subset;
  out.witness_ideals = std::move(semiregular);
  return out;
}

RadicalResult jacobson_annihilators(const HemiringPtr& R, const Limits& limits) {
  RadicalResult out;
  out.kind = RadicalKind::J;
  out.method = "annihilators";
  auto irreducibles = enumerate_irreducible_semimodules(R, limits);
  Bitset acc = Bitset::full(R->size());
  for (const auto& M : irreducibles) {
    Bitset ann = annihilator(M);
    out.witness_annihilators.push_back(ann);
    acc &= ann;
  }
  out.subset = acc;  // empty family: intersection over nothing is R
  out.witness_semimodules = std::move(irreducibles);
  return out;
}

RadicalResult js_radical(const HemiringPtr& R, const Limits& limits) {
  RadicalResult out;
  out.kind = RadicalKind::Js;
  out.method = "simple_annihilators";
  auto simples = enumerate_simple_semimodules(R, limits);
  Bitset acc = Bitset::full(R->size());
  for (const auto& M : simples) {
    Bitset ann = annihilator(M);
    out.witness_annihilators.push_back(ann);
    acc &= ann;
  }
  out.subset = acc;
  out.witness_semimodules = std::move(simples);
  return out;
}

// Is the quotient a nonzero ideal-simple semiring.
bool quotient_is_ideal_simple_semiring(const Hemiring& Q) {
  if (Q.size() < 2) return false;
  if (!Q.one()) return false;
  return is_ideal_simple(Q);
}

RadicalResult bm_radical(const HemiringPtr& R, const Limits& limits) {
  RadicalResult out;
  out.kind = RadicalKind::BM;
  out.method = "largest_radical_ideal";
  auto ideals = enumerate_ideals(*R, Sidedness::two_sided, false, limits);
  // Theorem guarantees a unique maximal radical ideal, so test the largest
  // first and descend.
  std::sort(ideals.begin(), ideals.end(), [](const SubsetIdeal& a, const SubsetIdeal& b) {
    if (a.subset.count() != b.subset.count()) return a.subset.count() > b.subset.count();
    return a.subset < b.subset;
  });
  for (const auto& I : ideals) {
    HemiringPtr H;
    if (I.subset.count() == R->size())
      H = R;
    else
      H = std::make_shared<Hemiring>(subhemiring(*R, I.subset, R->name + "|I"));
    if (is_bm_radical(H, limits)) {
      out.subset = I.subset;
      return out;
    }
  }
  out.subset = Bitset::singleton(R->size(), 0);
  return out;
}

bool quotient_is_simple_semiring(const Hemiring& Q, CsVariant variant) {
  if (Q.size() < 2) return false;
  if (!Q.one()) return false;
  if (!is_congruence_simple(Q)) return false;
  if (variant == CsVariant::both_simple && !is_ideal_simple(Q)) return false;
  return true;
}

RadicalResult bmcs_radical(const HemiringPtr& R, const Limits& limits, CsVariant variant) {
  RadicalResult out;
  out.kind = RadicalKind::BMCs;
  out.method = variant == CsVariant::both_simple ? "Cs_kernels" : "Cs_kernels_congruence_only";
  Bitset acc = Bitset::full(R->size());
  for (const auto& rho : enumerate_congruences(*R, limits)) {
    auto q = quotient(R, rho);
    if (!quotient_is_simple_semiring(*q.hemiring, variant)) continue;
    out.witness_congruences.push_back(rho);
    acc &= rho.kernel_block();
  }
  out.subset = acc;  // no such congruence: result is R
  return out;
}

}  // namespace

RadicalResult radical(const HemiringPtr& R, RadicalKind kind, const Limits& limits,
                      CsVariant cs_variant) {
  switch (kind) {
    case RadicalKind::J: return jacobson_star(R);
    case RadicalKind::Js: return js_radical(R, limits);
    case RadicalKind::BM: return bm_radical(R, limits);
    case RadicalKind::BMCs: return bmcs_radical(R, limits, cs_variant);
  }
  throw RadxError("unknown radical kind");
}

RadicalResult jacobson_oracle(const HemiringPtr& R, JacobsonMethod method, const Limits& limits) {
  switch (method) {
    case JacobsonMethod::star_differences: return jacobson_star(R);
    case JacobsonMethod::semiregular: return jacobson_semiregular(R, limits);
    case JacobsonMethod::annihilators: return jacobson_annihilators(R, limits);
  }
  throw RadxError("unknown jacobson method");
}

bool regularity(const Hemiring& R, elem r, RegularityKind kind) {
  const std::size_t n = R.size();
  std::vector<IndexPair> pairs;
  if (kind == RegularityKind::F1) {
    // F_1(r) = {(rx + yr, x + y)}
    for (elem x = 0; x < n; ++x)
      for (elem y = 0; y < n; ++y)
        pairs.emplace_back(R.add(R.mul(r, x), R.mul(y, r)), R.add(x, y));
  } else {
    // G(r) = {(rx + u, x + v)} over the additive closure S_r of
    // {(yrz, yz)}, including the empty sum.
    std::vector<char> in(n * n, 0);
    std::vector<IndexPair> closure, work;
    auto push = [&](elem a, elem b) {
      if (!in[std::size_t(a) * n + b]) {
        in[std::size_t(a) * n + b] = 1;
        closure.emplace_back(a, b);
        work.emplace_back(a, b);
      }
    };
    push(0, 0);
    for (elem y = 0; y < n; ++y)
      for (elem z = 0; z < n; ++z) push(R.mul(R.mul(y, r), z), R.mul(y, z));
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < closure.size(); ++i) {
        auto [c, d] = closure[i];
        push(R.add(a, c), R.add(b, d));
      }
    }
    for (elem x = 0; x < n; ++x)
      for (const auto& [u, v] : closure)
        pairs.emplace_back(R.add(R.mul(r, x), u), R.add(x, v));
  }
  return congruence_closure(R, pairs).same(r, 0);
}

bool is_regular_hemiring(const Hemiring& R, RegularityKind kind) {
  for (elem r = 0; r < R.size(); ++r)
    if (!regularity(R, r, kind)) return false;
  return true;
}

PrimitivityReport is_primitive(const HemiringPtr& R, const Limits& limits) {
  PrimitivityReport rep;
  for (auto& M : enumerate_irreducible_semimodules(R, limits)) {
    if (annihilator(M).count() == 1) {
      rep.primitive = true;
      rep.witness = std::move(M);
      break;
    }
  }
  return rep;
}

bool is_bm_radical(const HemiringPtr& H, const Limits& limits) {
  for (const auto& rho : enumerate_congruences(*H, limits)) {
    auto q = quotient(H, rho);
    if (quotient_is_ideal_simple_semiring(*q.hemiring)) return false;
  }
  return true;
}

std::optional<SubdirectReport> subdirect_by_annihilators(const HemiringPtr& R, RadicalKind kind,
                                                         const Limits& limits) {
  RadicalResult rad = radical(R, kind, limits);
  if (rad.subset.count() != 1) return std::nullopt;

  SubdirectReport rep;
  rep.kind = kind;
  rep.combined_kernel = Bitset::full(R->size());
  rep.all_surjective = true;
  bool add_idem = is_additively_idempotent(*R);

  auto add_factor = [&](SubdirectFactor f) {
    rep.combined_kernel &= f.kernel;
    rep.all_surjective = rep.all_surjective && f.surjective;
    if (f.density_checked && !f.dense) rep.densities_pass = false;
    rep.factors.push_back(std::move(f));
  };

  if (kind == RadicalKind::J) {
    // Factors R/(0:M) over irreducible M: primitive hemirings.
    for (const auto& M : enumerate_irreducible_semimodules(R, limits)) {
      Bitset ann = annihilator(M);
      auto q = bourne_quotient(R, SubsetIdeal{ann, Sidedness::two_sided, true});
      SubdirectFactor f;
      f.factor = q.hemiring;
      f.projection = q.projection;
      f.kernel = hom_check(q.projection).kernel;
      f.surjective = hom_check(q.projection).surjective;
      add_factor(std::move(f));
    }
  } else if (kind == RadicalKind::Js) {
    // Factors: images of R in End(M,+) over simple M.
    for (const auto& M : enumerate_simple_semimodules(R, limits)) {
      std::vector<std::vector<elem>> add(M.size(), std::vector<elem>(M.size()));
      for (elem a = 0; a < M.size(); ++a)
        for (elem b = 0; b < M.size(); ++b) add[a][b] = M.add(a, b);
      auto monoid = std::make_shared<CommMonoid>(
          CommMonoid::validate("add(" + M.name + ")", M.labels(), 0, add));
      EndHemiring E = endomorphism_hemiring(monoid, limits);
      // phi(r)(m) = r m
      std::vector<elem> phi(R->size());
      Bitset image(E.ring->size());
      for (elem r = 0; r < R->size(); ++r) {
        Endomorphism f;
        f.values.resize(M.size());
        for (elem m = 0; m < M.size(); ++m) f.values[m] = M.act(r, m);
        phi[r] = E.index_of(f);
        image.set(phi[r]);
      }
      auto S = std::make_shared<Hemiring>(
          subhemiring(*E.ring, image, "im(" + R->name + "->End(" + M.name + "))"));
      // reindex phi into S
      auto members = image.members();
      std::vector<elem> back(E.ring->size(), 0);
      for (std::size_t i = 0; i < members.size(); ++i) back[members[i]] = elem(i);
      std::vector<elem> proj(R->size());
      for (elem r = 0; r < R->size(); ++r) proj[r] = back[phi[r]];

      SubdirectFactor f;
      f.factor = S;
      f.projection = HemiringMap{R, S, std::move(proj)};
      auto rep2 = hom_check(f.projection);
      f.kernel = rep2.kernel;
      f.surjective = rep2.surjective;
      if (add_idem) {
        // Theorem-backed density of the image inside End(M).
        auto density = density_check(E, image);
        f.density_checked = true;
        f.dense = density.dense;
      }
      add_factor(std::move(f));
    }
  } else {
    // BM: the simple semiring quotients R/rho.
    for (const auto& rho : enumerate_congruences(*R, limits)) {
      auto q = quotient(R, rho);
      if (!quotient_is_simple_semiring(*q.hemiring, CsVariant::both_simple)) continue;
      SubdirectFactor f;
      f.factor = q.hemiring;
      f.projection = q.projection;
      auto rep2 = hom_check(q.projection);
      f.kernel = rep2.kernel;
      f.surjective = rep2.surjective;
      add_factor(std::move(f));
    }
  }
  rep.semiisomorphic = rep.combined_kernel.count() == 1 && rep.all_surjective;
  return rep;
}

}  // namespace radx
