#include "radx/verify.hpp"

#include <algorithm>
#include <sstream>

#include "radx/catalog.hpp"
#include "radx/construct.hpp"
#include "radx/enumerate.hpp"
#include "radx/iso.hpp"

namespace radx {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::inapplicable: return "inapplicable";
  }
  return "?";
}

namespace {

std::string subset_labels(const Hemiring& R, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += R.label(elem(i));
    first = false;
  });
  return out + "}";
}

VerifyReport report(const std::string& id) {
  VerifyReport r;
  r.theorem_id = id;
  return r;
}

VerifyReport inapplicable(const std::string& id, const std::string& why) {
  VerifyReport r = report(id);
  r.status = VerifyStatus::inapplicable;
  r.details.push_back("hypothesis unmet: " + why);
  return r;
}

bool is_field(const Hemiring& Q) {
  if (!Q.is_ring() || !Q.one() || Q.size() < 2) return false;
  elem one = *Q.one();
  for (elem a = 1; a < Q.size(); ++a) {
    bool invertible = false;
    for (elem b = 1; b < Q.size() && !invertible; ++b)
      invertible = Q.mul(a, b) == one && Q.mul(b, a) == one;
    if (!invertible) return false;
  }
  return is_commutative(Q);
}

elem resolve_idempotent(const Hemiring& R, const VerifyBundle& bundle, VerifyReport& rep,
                        bool& ok) {
  ok = true;
  if (bundle.idempotent_label) {
    auto idx = R.index_of(*bundle.idempotent_label);
    if (!idx) {
      ok = false;
      rep = inapplicable(rep.theorem_id, "unknown idempotent label " + *bundle.idempotent_label);
      return 0;
    }
    if (R.mul(*idx, *idx) != *idx) {
      ok = false;
      rep = inapplicable(rep.theorem_id, *bundle.idempotent_label + " is not idempotent");
      return 0;
    }
    return *idx;
  }
  if (R.one()) return *R.one();
  ok = false;
  rep = inapplicable(rep.theorem_id, "no idempotent given and no identity present");
  return 0;
}

// radical of a matrix hemiring entrywise: M_n(S) for a subset S of R.
bool check_matrix_identity(const HemiringPtr& R, unsigned n, RadicalKind kind,
                           const Limits& limits, VerifyReport& rep) {
  auto M = std::make_shared<Hemiring>(matrix_hemiring(*R, n, limits));
  RadicalResult lhs = radical(M, kind, limits);
  RadicalResult base = radical(R, kind, limits);
  Bitset rhs = matrix_subset(*R, n, base.subset);
  rep.details.push_back("radical(M_" + std::to_string(n) + "(" + R->name +
                        ")) has " + std::to_string(lhs.subset.count()) + " elements");
  rep.details.push_back("M_" + std::to_string(n) + "(radical(" + R->name + ")) has " +
                        std::to_string(rhs.count()) + " elements; radical(" + R->name +
                        ") = " + subset_labels(*R, base.subset));
  if (lhs.subset == rhs) {
    // Cross-check against the independent semiregular scan when feasible.
    if (kind == RadicalKind::J && M->size() <= limits.max_subset_scan_log2) {
      auto oracle = jacobson_oracle(M, JacobsonMethod::semiregular, limits);
      rep.details.push_back("semiregular subset-scan oracle agrees: " +
                            std::string(oracle.subset == lhs.subset ? "yes" : "NO"));
      if (!(oracle.subset == lhs.subset)) {
        rep.counterexample = "star/differences and semiregular oracle disagree on M_n(R)";
        return false;
      }
    }
    return true;
  }
  rep.counterexample = "radical(M_n(R)) != M_n(radical(R)) for R=" + R->name +
                       ", n=" + std::to_string(n) + ", kind=" + to_string(kind);
  return false;
}

VerifyReport verify_cor_5_11(const std::string& id, RadicalKind kind,
                             const VerifyBundle& bundle) {
  VerifyReport rep = report(id);
  if (!bundle.hemiring) return inapplicable(id, "needs a hemiring input");
  bool ok = check_matrix_identity(bundle.hemiring, bundle.matrix_n, kind, bundle.limits, rep);
  rep.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
  return rep;
}

VerifyReport verify_cor_4_4(const VerifyBundle& bundle) {
  VerifyReport rep = report("COR_4_4");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  if (!R->one()) return inapplicable(rep.theorem_id, "not a semiring (no identity)");
  RadicalResult J = radical(R, RadicalKind::J, bundle.limits);
  Bitset Z = zeroid(*R);
  SubsetIdeal JI{J.subset, Sidedness::two_sided, true};
  for (unsigned n = 1; n <= R->size(); ++n) {
    Bitset power = ideal_power(*R, JI, n).subset;
    if (power == Z) {
      rep.status = VerifyStatus::pass;
      rep.details.push_back("J(R)^" + std::to_string(n) + " = Z(R) = " + subset_labels(*R, Z));
      return rep;
    }
  }
  rep.status = VerifyStatus::fail;
  rep.counterexample = "no n <= |R| with J(R)^n = Z(R); J = " + subset_labels(*R, J.subset) +
                       ", Z = " + subset_labels(*R, Z);
  return rep;
}

VerifyReport verify_thm_4_3(const VerifyBundle& bundle) {
  VerifyReport rep = report("THM_4_3");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  if (!R->one()) return inapplicable(rep.theorem_id, "not a semiring (no identity)");
  if (zeroid(*R).test(*R->one())) return inapplicable(rep.theorem_id, "1 lies in the zeroid");
  RadicalResult J = radical(R, RadicalKind::J, bundle.limits);

  // Check (i) => (ii) over cyclic semimodules (quotients of the regular
  // semimodule); cyclic => finitely generated => w-finitely generated, so
  // every instance is genuine. This is a documented under-approximation of
  // the full w-finitely-generated class.
  auto reg = std::make_shared<Semimodule>(Semimodule::regular(R));
  std::vector<SemimodulePtr> cyclic;
  for (const auto& p : enumerate_congruences(*reg, bundle.limits))
    cyclic.push_back(quotient(reg, p).semimodule);

  std::size_t instances = 0;
  for (const auto& I : enumerate_ideals(*R, Sidedness::left, false, bundle.limits)) {
    if (!I.subset.is_subset_of(J.subset)) continue;
    for (const auto& M : cyclic) {
      // IM: additive closure of {i m}.
      Bitset gens(M->size());
      I.subset.for_each([&](std::size_t i) {
        for (elem m = 0; m < M->size(); ++m) gens.set(M->act(elem(i), m));
      });
      Bitset IM = subsemimodule_closure(*M, gens);
      // subsemimodule_closure also closes under scalars, which IM already
      // absorbs (r(im) = (ri)m with ri in I), so this is the additive span.
      if (IM.count() != M->size()) continue;
      ++instances;
      Bitset ZM = zeroid(*M);
      if (ZM.count() != M->size()) {
        rep.status = VerifyStatus::fail;
        rep.counterexample = "left ideal I = " + subset_labels(*R, I.subset) +
                             " inside J(R) has IM = M but M != Z(M) on cyclic module " + M->name;
        return rep;
      }
    }
  }
  rep.status = VerifyStatus::pass;
  rep.details.push_back("checked over cyclic semimodules only (quotients of the regular one)");
  rep.details.push_back(std::to_string(instances) + " (I, M) instances with IM = M, all gave M = Z(M)");
  return rep;
}

VerifyReport verify_prop_4_8(const VerifyBundle& bundle) {
  VerifyReport rep = report("PROP_4_8");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  bool comm = is_commutative(*R);
  bool reg = is_additively_regular(*R);
  if (!comm && !reg)
    return inapplicable(rep.theorem_id, "neither commutative nor additively regular");
  Bitset Js = radical(R, RadicalKind::Js, bundle.limits).subset;
  Bitset J = radical(R, RadicalKind::J, bundle.limits).subset;
  rep.details.push_back("applicable via " + std::string(comm ? "commutativity" : "additive regularity"));
  rep.details.push_back("J_s = " + subset_labels(*R, Js) + ", J = " + subset_labels(*R, J));
  if (Js.is_subset_of(J)) {
    rep.status = VerifyStatus::pass;
  } else {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "J_s not contained in J";
  }
  return rep;
}

VerifyReport verify_thm_3_12(const VerifyBundle& bundle) {
  VerifyReport rep = report("THM_3_12");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  auto cls = classify(*R, bundle.limits);
  if (!cls.subtractive_hemiring && !cls.commutative && !cls.lattice_ordered)
    return inapplicable(rep.theorem_id, "neither subtractive nor commutative nor lattice-ordered");
  bool bm_whole = radical(R, RadicalKind::BM, bundle.limits).subset.count() == R->size();
  bool g_reg = is_regular_hemiring(*R, RegularityKind::G);
  bool f1_reg = is_regular_hemiring(*R, RegularityKind::F1);
  rep.details.push_back(std::string("BM-radical hemiring: ") + (bm_whole ? "yes" : "no"));
  rep.details.push_back(std::string("G-regular: ") + (g_reg ? "yes" : "no"));
  rep.details.push_back(std::string("F1-regular: ") + (f1_reg ? "yes" : "no"));
  if (bm_whole == g_reg && g_reg == f1_reg) {
    rep.status = VerifyStatus::pass;
  } else {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "the three conditions disagree on " + R->name;
  }
  return rep;
}

VerifyReport verify_thm_3_15(const VerifyBundle& bundle) {
  VerifyReport rep = report("THM_3_15");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  Bitset bm = radical(R, RadicalKind::BM, bundle.limits).subset;
  Bitset cs = radical(R, RadicalKind::BMCs, bundle.limits).subset;
  rep.details.push_back("R_BM = " + subset_labels(*R, bm));
  rep.details.push_back("R_Cs = " + subset_labels(*R, cs));
  if (!bm.is_subset_of(cs)) {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "R_BM not contained in R_Cs (violates the unconditional inclusion)";
    return rep;
  }
  auto cls = classify(*R, bundle.limits);
  if (!cls.commutative && !cls.strongly_subtractive && !cls.lattice_ordered) {
    rep = inapplicable(rep.theorem_id,
                       "neither commutative nor strongly subtractive nor lattice-ordered");
    rep.details.push_back("unconditional inclusion R_BM within R_Cs holds");
    return rep;
  }
  if (bm == cs) {
    rep.status = VerifyStatus::pass;
  } else {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "R_BM != R_Cs on an applicable hemiring";
  }
  return rep;
}

VerifyReport verify_cor_3_16_or_17(const std::string& id, bool lattice_version,
                                   const VerifyBundle& bundle) {
  VerifyReport rep = report(id);
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  if (lattice_version) {
    if (!is_lattice_ordered(*R)) return inapplicable(id, "not lattice-ordered");
  } else {
    if (!is_commutative(*R)) return inapplicable(id, "not commutative");
  }
  Bitset bm = radical(R, RadicalKind::BM, bundle.limits).subset;
  if (bm.count() != 1) return inapplicable(id, "R_BM(R) != 0");
  auto sub = subdirect_by_annihilators(R, RadicalKind::BM, bundle.limits);
  if (!sub) {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "BM radical zero but no decomposition produced";
    return rep;
  }
  if (!sub->semiisomorphic) {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "combined map is not a semiisomorphism onto a subdirect product";
    return rep;
  }
  auto B = catalog_hemiring("B");
  for (const auto& f : sub->factors) {
    bool good = lattice_version ? are_isomorphic(*f.factor, *B)
                                : (is_field(*f.factor) || are_isomorphic(*f.factor, *B));
    if (!good) {
      rep.status = VerifyStatus::fail;
      rep.counterexample = "factor " + f.factor->name + " is not of the required form";
      return rep;
    }
  }
  rep.details.push_back(std::to_string(sub->factors.size()) + " factors, all " +
                        (lattice_version ? "isomorphic to B" : "fields or B"));
  rep.status = VerifyStatus::pass;
  return rep;
}

VerifyReport verify_thm_3_10(const VerifyBundle& bundle) {
  VerifyReport rep = report("THM_3_10");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  if (!is_congruence_simple(*R)) return inapplicable(rep.theorem_id, "not congruence-simple");
  Bitset J = radical(R, RadicalKind::J, bundle.limits).subset;
  bool whole = J.count() == R->size();
  bool zero = J.count() == 1;
  if (!whole) {
    auto prim = is_primitive(R, bundle.limits);
    rep.details.push_back(std::string("J(R) != R; primitive: ") + (prim.primitive ? "yes" : "no"));
    if (!prim.primitive) {
      rep.status = VerifyStatus::fail;
      rep.counterexample = "congruence-simple but neither J-radical nor primitive";
      return rep;
    }
  } else {
    rep.details.push_back("J(R) = R");
  }
  if (zero) {
    auto cls = classify(*R, bundle.limits);
    bool simple_ring = R->is_ring() && cls.simple;
    rep.details.push_back(std::string("J(R) = 0; simple ring: ") + (simple_ring ? "yes" : "no"));
    if (!simple_ring) {
      rep.status = VerifyStatus::fail;
      rep.counterexample = "J-semisimple congruence-simple hemiring is not a simple ring";
      return rep;
    }
  }
  rep.status = VerifyStatus::pass;
  return rep;
}

VerifyReport verify_thm_3_11(const VerifyBundle& bundle) {
  VerifyReport rep = report("THM_3_11");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  if (!is_additively_idempotent(*R))
    return inapplicable(rep.theorem_id, "not additively idempotent");
  Bitset Js = radical(R, RadicalKind::Js, bundle.limits).subset;
  if (Js.count() != 1)
    return inapplicable(rep.theorem_id,
                        "J_s(R) != 0 (only the canonical construction is checked)");
  auto sub = subdirect_by_annihilators(R, RadicalKind::Js, bundle.limits);
  if (!sub || !sub->semiisomorphic || !sub->all_surjective) {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "no semiisomorphism onto a subdirect product of the images";
    return rep;
  }
  for (const auto& f : sub->factors)
    if (!f.density_checked || !f.dense) {
      rep.status = VerifyStatus::fail;
      rep.counterexample = "factor " + f.factor->name + " is not dense in End(M)";
      return rep;
    }
  rep.details.push_back(std::to_string(sub->factors.size()) +
                        " factors, each dense in the endomorphism hemiring of its semilattice");
  rep.status = VerifyStatus::pass;
  return rep;
}

VerifyReport verify_ex_3_7(const VerifyBundle& bundle) {
  VerifyReport rep = report("EX_3_7");
  auto B = catalog_hemiring("B");
  Bitset J = radical(B, RadicalKind::J, bundle.limits).subset;
  Bitset Js = radical(B, RadicalKind::Js, bundle.limits).subset;
  rep.details.push_back("J(B) = " + subset_labels(*B, J));
  rep.details.push_back("J_s(B) = " + subset_labels(*B, Js));
  if (J.count() == 2 && Js.count() == 1 && Js.test(0)) {
    rep.status = VerifyStatus::pass;
  } else {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "expected J(B) = B and J_s(B) = {0}";
  }
  return rep;
}

VerifyReport verify_ex_3_13(const VerifyBundle& bundle) {
  VerifyReport rep = report("EX_3_13");
  CommMonoidPtr M = bundle.monoid ? bundle.monoid : catalog_monoid("N5");
  if (!M->idempotent()) return inapplicable(rep.theorem_id, "not a semilattice");
  auto E = endomorphism_hemiring(M, bundle.limits);
  const HemiringPtr& R = E.ring;

  bool cong_simple = is_congruence_simple(*R);
  rep.details.push_back(std::string("End(M) congruence-simple: ") + (cong_simple ? "yes" : "no"));

  auto density = density_check(E, Bitset::full(R->size()));
  const Bitset& F = density.step_monoid;
  bool proper = F.count() > 1 && F.count() < R->size();
  bool ideal = is_ideal(*R, F, Sidedness::two_sided);
  rep.details.push_back("F_M has " + std::to_string(F.count()) + " of " +
                        std::to_string(R->size()) + " elements; proper nonzero ideal: " +
                        (proper && ideal ? "yes" : "no"));

  Bitset bm = radical(R, RadicalKind::BM, bundle.limits).subset;
  bool bm_whole = bm.count() == R->size();
  rep.details.push_back(std::string("R_BM(End(M)) = End(M): ") + (bm_whole ? "yes" : "no"));

  bool id_f1 = regularity(*R, E.identity_map(), RegularityKind::F1);
  rep.details.push_back(std::string("identity map F1-regular: ") + (id_f1 ? "yes" : "no"));

  if (cong_simple && proper && ideal && bm_whole && !id_f1) {
    rep.status = VerifyStatus::pass;
  } else {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "one of the Example 3.13 facts fails on End(" + M->name + ")";
  }
  return rep;
}

VerifyReport verify_prop_5_15(const VerifyBundle& bundle) {
  VerifyReport rep = report("PROP_5_15");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  bool ok = true;
  elem e = resolve_idempotent(*R, bundle, rep, ok);
  if (!ok) return rep;
  auto c = corner(R, e);
  Bitset J = radical(R, RadicalKind::J, bundle.limits).subset;
  Bitset rhs(c.corner->size());
  J.for_each([&](std::size_t x) { rhs.set(c.to_corner[elem(x)]); });
  Bitset lhs = radical(c.corner, RadicalKind::J, bundle.limits).subset;
  rep.details.push_back("J(eRe) = " + subset_labels(*c.corner, lhs));
  rep.details.push_back("eJ(R)e = " + subset_labels(*c.corner, rhs));
  if (lhs == rhs) {
    rep.status = VerifyStatus::pass;
  } else {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "J(eRe) != eJ(R)e at e = " + R->label(e);
  }
  return rep;
}

VerifyReport verify_prop_5_16(const VerifyBundle& bundle) {
  VerifyReport rep = report("PROP_5_16");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  bool ok = true;
  elem e = resolve_idempotent(*R, bundle, rep, ok);
  if (!ok) return rep;
  auto c = corner(R, e);
  if (!c.is_full) return inapplicable(rep.theorem_id, "idempotent is not full (ReR != R)");
  for (RadicalKind kind : {RadicalKind::BM, RadicalKind::Js}) {
    if (kind == RadicalKind::Js && !R->one()) continue;  // J_s part is for semirings
    Bitset base = radical(R, kind, bundle.limits).subset;
    Bitset rhs(c.corner->size());
    base.for_each([&](std::size_t x) { rhs.set(c.to_corner[elem(x)]); });
    Bitset lhs = radical(c.corner, kind, bundle.limits).subset;
    rep.details.push_back(to_string(kind) + "(eRe) = " + subset_labels(*c.corner, lhs) +
                          ", e" + to_string(kind) + "(R)e = " + subset_labels(*c.corner, rhs));
    if (!(lhs == rhs)) {
      rep.status = VerifyStatus::fail;
      rep.counterexample = to_string(kind) + "(eRe) != e" + to_string(kind) + "(R)e";
      return rep;
    }
  }
  rep.status = VerifyStatus::pass;
  return rep;
}

VerifyReport verify_lemma_5_7(const VerifyBundle& bundle) {
  VerifyReport rep = report("LEMMA_5_7");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  if (!R->one()) return inapplicable(rep.theorem_id, "not a semiring (no identity)");
  bool base = radical(R, RadicalKind::BM, bundle.limits).subset.count() == 1;
  for (unsigned n = 1; n <= bundle.lemma_5_7_max_n; ++n) {
    auto M = std::make_shared<Hemiring>(matrix_hemiring(*R, n, bundle.limits));
    bool mat = radical(M, RadicalKind::BM, bundle.limits).subset.count() == 1;
    rep.details.push_back("n=" + std::to_string(n) + ": R_BM(M_n(R)) " +
                          (mat ? "=" : "!=") + " 0");
    if (mat != base) {
      rep.status = VerifyStatus::fail;
      rep.counterexample = "BM-semisimplicity differs between R and M_" + std::to_string(n) + "(R)";
      return rep;
    }
  }
  rep.status = VerifyStatus::pass;
  rep.details.push_back(std::string("R_BM(R) ") + (base ? "=" : "!=") + " 0, matching all n");
  return rep;
}

VerifyReport verify_cor_5_2(const VerifyBundle& bundle) {
  VerifyReport rep = report("COR_5_2");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  if (!R->one()) return inapplicable(rep.theorem_id, "not a semiring (no identity)");
  if (!zeroid(*R).test(*R->one())) return inapplicable(rep.theorem_id, "not zeroic");
  bool ok = true;
  elem e = resolve_idempotent(*R, bundle, rep, ok);
  if (!ok) return rep;
  auto c = corner(R, e);
  if (!c.is_full) return inapplicable(rep.theorem_id, "idempotent is not full (ReR != R)");
  auto corner_one = c.corner->one();
  bool corner_zeroic = corner_one && zeroid(*c.corner).test(*corner_one);
  rep.details.push_back(std::string("eRe zeroic: ") + (corner_zeroic ? "yes" : "no"));
  rep.status = corner_zeroic ? VerifyStatus::pass : VerifyStatus::fail;
  if (!corner_zeroic) rep.counterexample = "corner of a zeroic semiring is not zeroic";
  return rep;
}

VerifyReport verify_cor_4_7(const VerifyBundle& bundle) {
  VerifyReport rep = report("COR_4_7");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  auto prim = is_primitive(R, bundle.limits);
  if (!prim.primitive) return inapplicable(rep.theorem_id, "not primitive");
  const Semimodule& M = *prim.witness;

  // S = image of R in End(M,+); finite and cancellative, so D(S) = S.
  std::vector<std::vector<elem>> add(M.size(), std::vector<elem>(M.size()));
  for (elem a = 0; a < M.size(); ++a)
    for (elem b = 0; b < M.size(); ++b) add[a][b] = M.add(a, b);
  auto monoid = std::make_shared<CommMonoid>(
      CommMonoid::validate("add(" + M.name + ")", M.labels(), 0, add));
  EndHemiring E = endomorphism_hemiring(monoid, bundle.limits);
  Bitset image(E.ring->size());
  for (elem r = 0; r < R->size(); ++r) {
    Endomorphism f;
    f.values.resize(M.size());
    for (elem m = 0; m < M.size(); ++m) f.values[m] = M.act(r, m);
    image.set(E.index_of(f));
  }
  auto S = std::make_shared<Hemiring>(subhemiring(*E.ring, image, "im(" + R->name + ")"));
  if (!S->is_ring()) {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "image of a primitive hemiring on its module is not a ring";
    return rep;
  }
  rep.details.push_back("faithful irreducible module of size " + std::to_string(M.size()) +
                        "; D(S) has " + std::to_string(S->size()) + " elements");

  // F = End_{D(S)}(M): additive endomorphisms commuting with the action.
  std::vector<elem> Fmaps;
  for (elem h = 0; h < E.ring->size(); ++h) {
    bool commutes = true;
    image.for_each([&](std::size_t s) {
      if (commutes && E.ring->mul(h, elem(s)) != E.ring->mul(elem(s), h)) commutes = false;
    });
    if (commutes) Fmaps.push_back(h);
  }
  // Schur: F must be a division ring.
  elem idm = E.identity_map();
  for (elem h : Fmaps) {
    if (h == 0) continue;
    bool invertible = false;
    for (elem g : Fmaps)
      if (E.ring->mul(h, g) == idm && E.ring->mul(g, h) == idm) {
        invertible = true;
        break;
      }
    if (!invertible) {
      rep.status = VerifyStatus::fail;
      rep.counterexample = "endomorphism ring of the simple module is not a division ring";
      return rep;
    }
  }
  rep.details.push_back("endomorphism division ring has " + std::to_string(Fmaps.size()) +
                        " elements");
  // Density, finite case: D(S) must be ALL F-linear maps, i.e. the full
  // centralizer of F inside End(M,+).
  Bitset centralizer(E.ring->size());
  for (elem g = 0; g < E.ring->size(); ++g) {
    bool commutes = true;
    for (elem h : Fmaps)
      if (E.ring->mul(g, h) != E.ring->mul(h, g)) {
        commutes = false;
        break;
      }
    if (commutes) centralizer.set(g);
  }
  rep.details.push_back("full F-linear transformation ring has " +
                        std::to_string(centralizer.count()) + " elements");
  if (centralizer == image) {
    rep.status = VerifyStatus::pass;
  } else {
    rep.status = VerifyStatus::fail;
    rep.counterexample = "D(S) is not the full ring of F-linear transformations";
  }
  return rep;
}

VerifyReport verify_thm_5_17(const VerifyBundle& bundle) {
  VerifyReport rep = report("THM_5_17");
  const HemiringPtr& R = bundle.hemiring;
  if (!R) return inapplicable(rep.theorem_id, "needs a hemiring input");
  if (!R->one()) return inapplicable(rep.theorem_id, "not a semiring (no identity)");
  bool ok = true;
  elem e = resolve_idempotent(*R, bundle, rep, ok);
  if (!ok) return rep;
  auto c = corner(R, e);
  if (!c.is_full) return inapplicable(rep.theorem_id, "idempotent is not full (ReR != R)");
  for (RadicalKind kind : {RadicalKind::J, RadicalKind::Js, RadicalKind::BM}) {
    bool base = radical(R, kind, bundle.limits).subset.count() == 1;
    bool side = radical(c.corner, kind, bundle.limits).subset.count() == 1;
    rep.details.push_back(to_string(kind) + "(R) " + (base ? "=" : "!=") + " 0, " +
                          to_string(kind) + "(eRe) " + (side ? "=" : "!=") + " 0");
    if (base != side) {
      rep.status = VerifyStatus::fail;
      rep.counterexample = to_string(kind) + "-semisimplicity is not preserved by the corner";
      return rep;
    }
  }
  rep.status = VerifyStatus::pass;
  return rep;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {
      "EX_3_7",      "EX_3_13",     "THM_3_10", "THM_3_11", "THM_3_12", "THM_3_15",
      "COR_3_16",    "COR_3_17",    "THM_4_3",  "COR_4_4",  "COR_4_7",  "PROP_4_8",
      "COR_5_2",     "LEMMA_5_7",   "COR_5_11_J", "COR_5_11_JS", "COR_5_11_BM",
      "PROP_5_15",   "PROP_5_16",   "THM_5_17"};
  return ids;
}

VerifyReport verify(const std::string& theorem_id, const VerifyBundle& bundle) {
  if (theorem_id == "COR_5_11_J") return verify_cor_5_11(theorem_id, RadicalKind::J, bundle);
  if (theorem_id == "COR_5_11_JS") return verify_cor_5_11(theorem_id, RadicalKind::Js, bundle);
  if (theorem_id == "COR_5_11_BM") return verify_cor_5_11(theorem_id, RadicalKind::BM, bundle);
  if (theorem_id == "COR_4_4") return verify_cor_4_4(bundle);
  if (theorem_id == "THM_4_3") return verify_thm_4_3(bundle);
  if (theorem_id == "PROP_4_8") return verify_prop_4_8(bundle);
  if (theorem_id == "THM_3_12") return verify_thm_3_12(bundle);
  if (theorem_id == "THM_3_15") return verify_thm_3_15(bundle);
  if (theorem_id == "COR_3_16") return verify_cor_3_16_or_17(theorem_id, false, bundle);
  if (theorem_id == "COR_3_17") return verify_cor_3_16_or_17(theorem_id, true, bundle);
  if (theorem_id == "THM_3_10") return verify_thm_3_10(bundle);
  if (theorem_id == "THM_3_11") return verify_thm_3_11(bundle);
  if (theorem_id == "EX_3_7") return verify_ex_3_7(bundle);
  if (theorem_id == "EX_3_13") return verify_ex_3_13(bundle);
  if (theorem_id == "PROP_5_15") return verify_prop_5_15(bundle);
  if (theorem_id == "PROP_5_16") return verify_prop_5_16(bundle);
  if (theorem_id == "LEMMA_5_7") return verify_lemma_5_7(bundle);
  if (theorem_id == "COR_5_2") return verify_cor_5_2(bundle);
  if (theorem_id == "COR_4_7") return verify_cor_4_7(bundle);
  if (theorem_id == "THM_5_17") return verify_thm_5_17(bundle);
  throw UnknownTheoremId("unknown theorem id '" + theorem_id + "'");
}

std::vector<VerifyReport> verify_all(const VerifyBundle& bundle) {
  std::vector<VerifyReport> out;
  for (const auto& id : verify_ids()) {
    try {
      out.push_back(verify(id, bundle));
    } catch (const ResourceLimit& e) {
      // A single oversized check must not abort the rest of the suite.
      out.push_back(inapplicable(id, std::string("resource limit: ") + e.what()));
    }
  }
  return out;
}

SearchReport search_counterexample(SearchProblem problem, unsigned max_order,
                                   const Limits& limits) {
  SearchReport rep;
  rep.problem = problem;
  rep.max_order = max_order;
  for (unsigned order = 1; order <= max_order; ++order) {
    auto classes = enumerate_hemirings(order, {}, limits);
    for (std::size_t idx = 0; idx < classes.size(); ++idx) {
      auto R = std::make_shared<Hemiring>(classes[idx]);
      std::string tag = "order " + std::to_string(order) + " class " + std::to_string(idx);
      if (problem == SearchProblem::P1_JS_VS_J) {
        Bitset J = radical(R, RadicalKind::J, limits).subset;
        Bitset Js = radical(R, RadicalKind::Js, limits).subset;
        bool contained = Js.is_subset_of(J);
        bool equal = Js == J;
        rep.per_class.push_back(tag + ": J=" + J.to_string() + " Js=" + Js.to_string() +
                                (contained ? (equal ? " (Js = J)" : " (Js < J)")
                                           : " (Js not in J)"));
        if (!contained)
          rep.findings.push_back(
              {order, encode_tables(*R), "J_s(R) is not contained in J(R)"});
      } else {
        Bitset bm = radical(R, RadicalKind::BM, limits).subset;
        Bitset cs_both =
            radical(R, RadicalKind::BMCs, limits, CsVariant::both_simple).subset;
        Bitset cs_cong =
            radical(R, RadicalKind::BMCs, limits, CsVariant::congruence_simple_only).subset;
        rep.per_class.push_back(tag + ": BM=" + bm.to_string() + " Cs(both)=" +
                                cs_both.to_string() + " Cs(cong)=" + cs_cong.to_string());
        if (!(bm == cs_both))
          rep.findings.push_back({order, encode_tables(*R),
                                  "R_BM != R_Cs under the both-simple reading"});
        if (!(bm == cs_cong))
          rep.findings.push_back({order, encode_tables(*R),
                                  "R_BM != R_Cs under the congruence-simple-only reading"});
      }
    }
  }
  rep.exhausted = true;
  return rep;
}

}  // namespace radx
