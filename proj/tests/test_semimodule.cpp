#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "radx/catalog.hpp"
#include "radx/construct.hpp"
#include "radx/semimodule.hpp"

using namespace radx;

TEST_CASE("semimodule validation") {
  auto B = catalog_hemiring("B");
  auto reg = Semimodule::regular(B);
  CHECK(reg.size() == 2);

  // action r.m = m for all r over Z2 breaks (r+r')m = rm+r'm
  auto Z2 = catalog_hemiring("Z2");
  try {
    Semimodule::validate("bad", Z2, {"0", "m"}, 0, {{0, 1}, {1, 0}}, {{0, 1}, {0, 1}});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom == "(r+r')m = rm+r'm");
  }

  // the zero semimodule over anything is valid
  for (const auto& name : catalog_hemiring_names()) {
    auto R = catalog_hemiring(name);
    std::vector<std::vector<elem>> act(R->size(), std::vector<elem>(1, 0));
    auto Z = Semimodule::validate("zero", R, {"0"}, 0, {{0}}, act);
    CHECK(Z.size() == 1);
  }
}

TEST_CASE("semimodule reports") {
  auto B = catalog_hemiring("B");
  auto regB = Semimodule::regular(B);
  auto rep = semimodule_report(regB);
  CHECK(rep.simple);
  CHECK(!rep.irreducible);  // no irreducible B-semimodules exist
  CHECK(rep.annihilator == Bitset::singleton(2, 0));
  CHECK(rep.faithful);
  CHECK(!rep.cancellative);

  auto Z2 = catalog_hemiring("Z2");
  auto regZ2 = Semimodule::regular(Z2);
  auto rep2 = semimodule_report(regZ2);
  CHECK(rep2.simple);
  CHECK(rep2.irreducible);
  CHECK(rep2.cancellative);

  std::vector<std::vector<elem>> act(B->size(), std::vector<elem>(1, 0));
  auto zero = Semimodule::validate("zero", B, {"0"}, 0, {{0}}, act);
  auto rep3 = semimodule_report(zero);
  CHECK(!rep3.simple);
  CHECK(rep3.w_finitely_generated);  // the (0,0) pair convention
}

TEST_CASE("simple semimodule enumeration") {
  auto B = catalog_hemiring("B");
  auto simples = enumerate_simple_semimodules(B);
  REQUIRE(simples.size() == 1);
  CHECK(simples[0].size() == 2);

  auto Z4 = catalog_hemiring("Z4");
  auto s4 = enumerate_simple_semimodules(Z4);
  REQUIRE(s4.size() == 1);
  CHECK(s4[0].size() == 2);
  CHECK(annihilator(s4[0]).count() == 2);

  CHECK(enumerate_simple_semimodules(catalog_hemiring("ZERO")).empty());
}

TEST_CASE("irreducible semimodule enumeration") {
  CHECK(enumerate_irreducible_semimodules(catalog_hemiring("B")).empty());

  auto Z2 = catalog_hemiring("Z2");
  auto irr = enumerate_irreducible_semimodules(Z2);
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].size() == 2);
  CHECK(annihilator(irr[0]).count() == 1);

  CHECK(enumerate_irreducible_semimodules(catalog_hemiring("CHAIN4")).empty());

  // every enumerated irreducible is in fact irreducible and has RM != 0
  for (const auto& name : {"Z2", "Z4", "BXZ2", "T3"}) {
    for (const auto& M : enumerate_irreducible_semimodules(catalog_hemiring(name))) {
      CHECK(is_irreducible(M));
      CHECK(action_is_nonzero(M));
    }
  }
}

TEST_CASE("enumerated simple semimodules over semirings are unitary") {
  for (const auto& name : {"B", "Z2", "Z4", "T3", "CHAIN4", "BXZ2", "M2B"}) {
    auto R = catalog_hemiring(name);
    REQUIRE(R->one().has_value());
    for (const auto& M : enumerate_simple_semimodules(R)) {
      for (elem m = 0; m < M.size(); ++m) CHECK(M.act(*R->one(), m) == m);
      CHECK(is_simple(M));
    }
  }
}

TEST_CASE("simple enumeration is complete against the brute-force scan") {
  // acceptance criterion: both order-2 semirings, carriers up to 3
  for (const auto& name : {"B", "Z2"}) {
    auto R = catalog_hemiring(name);
    auto enumerated = enumerate_simple_semimodules(R);
    std::vector<Semimodule> brute;
    for (auto& M : testing::brute_semimodules(R, 3)) {
      if (!is_simple(M)) continue;
      bool known = false;
      for (const auto& seen : brute)
        if (are_isomorphic(seen, M)) known = true;
      if (!known) brute.push_back(std::move(M));
    }
    REQUIRE_MESSAGE(brute.size() == enumerated.size(), name);
    for (const auto& M : brute) {
      bool matched = false;
      for (const auto& E : enumerated)
        if (are_isomorphic(M, E)) matched = true;
      CHECK(matched);
    }
  }
}

TEST_CASE("cancellative iff xi into differences is injective") {
  auto Z4 = catalog_hemiring("Z4");
  for (auto& M : testing::brute_semimodules(catalog_hemiring("B"), 2)) {
    auto d = differences(std::make_shared<Semimodule>(M));
    Bitset hit(d.module->size());
    for (elem m = 0; m < M.size(); ++m) hit.set(d.xi.image[m]);
    bool injective = hit.count() == M.size();
    CHECK(injective == is_cancellative(M));
  }
  (void)Z4;
}

TEST_CASE("w-finite generation") {
  // every finite semimodule over a semiring is w-finitely generated
  for (const auto& name : {"B", "Z2", "Z4", "T3", "CHAIN4"}) {
    auto R = catalog_hemiring(name);
    REQUIRE(R->one().has_value());
    auto reg = Semimodule::regular(R);
    CHECK(is_w_finitely_generated(reg));
  }
  // over the zero hemiring, a nonzero cancellative module is NOT w-finitely
  // generated: no coefficients exist to絞 witness anything
  auto ZERO = catalog_hemiring("ZERO");
  auto M = Semimodule::validate("z2flat", ZERO, {"0", "1"}, 0, {{0, 1}, {1, 0}}, {{0, 0}});
  CHECK(is_cancellative(M));
  CHECK(!is_w_finitely_generated(M));

  // Prop 4.2(v) instance: for cancellative M, w-f.g. iff D(M) is generated by
  // D(R)-multiples
  for (const auto& name : {"ZERO", "B", "Z2", "Z4"}) {
    auto R = catalog_hemiring(name);
    for (auto& Mx : testing::brute_semimodules(R, 2)) {
      if (!is_cancellative(Mx)) continue;
      auto Mp = std::make_shared<Semimodule>(Mx);
      auto dM = differences(Mp);
      auto dR = differences(R);
      // span of D(R).D(M) inside D(M): additive closure of all products
      Bitset gens(dM.module->size());
      gens.set(0);
      for (elem r = 0; r < R->size(); ++r)
        for (elem m = 0; m < dM.module->size(); ++m)
          gens.set(dM.module->act(dR.xi.image[r] == dR.xi.image[r] ? r : r, m));
      // D(R) acts through R on the star classes; the action table of D(M)
      // already is the R-action, so the span is the closure of R.D(M)
      Bitset span = subsemimodule_closure(*dM.module, gens);
      bool fg = span.count() == dM.module->size();
      CHECK(fg == is_w_finitely_generated(Mx));
    }
  }
}

TEST_CASE("w-finite generation agrees with the bounded direct search") {
  for (const auto& name : {"ZERO", "B", "Z2"}) {
    auto R = catalog_hemiring(name);
    for (auto& M : testing::brute_semimodules(R, 2)) {
      bool direct = testing::brute_w_finitely_generated(M, 3);
      bool closure = is_w_finitely_generated(M);
      // the bounded search can only under-approximate
      if (direct) CHECK(closure);
      if (!closure) CHECK(!direct);
      // at these sizes three pairs suffice, so demand agreement
      CHECK_MESSAGE(direct == closure, name);
    }
  }
}

TEST_CASE("semi-irreducible detection") {
  // B as a module over itself is simple but not cancellative, hence not
  // semi-irreducible; Z2 over Z2 is both
  auto regB = Semimodule::regular(catalog_hemiring("B"));
  CHECK(!is_semi_irreducible(regB));
  auto regZ2 = Semimodule::regular(catalog_hemiring("Z2"));
  CHECK(is_semi_irreducible(regZ2));
}

TEST_CASE("semimodule isomorphism distinguishes actions") {
  auto Z2 = catalog_hemiring("Z2");
  // regular Z2 vs zero-action module on the same carrier
  auto reg = Semimodule::regular(Z2);
  auto flat = Semimodule::validate("flat", Z2, {"0", "1"}, 0, {{0, 1}, {1, 0}},
                                   {{0, 0}, {0, 0}});
  CHECK(!are_isomorphic(reg, flat));
  // relabeled regular module is isomorphic
  auto relabeled = Semimodule::validate("r", Z2, {"zero", "one"}, 0, {{0, 1}, {1, 0}},
                                        {{0, 0}, {0, 1}});
  CHECK(are_isomorphic(reg, relabeled));
}
