#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "radx/catalog.hpp"
#include "radx/construct.hpp"
#include "radx/iso.hpp"

using namespace radx;

TEST_CASE("matrix hemiring basics") {
  auto B = catalog_hemiring("B");
  auto M = matrix_hemiring(*B, 2);
  CHECK(M.size() == 16);
  CHECK(M.one().has_value());
  CHECK(is_additively_idempotent(M));

  auto Z3 = matrix_hemiring(*catalog_hemiring("ZERO"), 3);
  CHECK(Z3.size() == 1);

  auto MZ2 = matrix_hemiring(*catalog_hemiring("Z2"), 2);
  CHECK(MZ2.size() == 16);
  CHECK(MZ2.one().has_value());
  CHECK(!is_commutative(MZ2));
  elem e11 = matrix_unit(*catalog_hemiring("Z2"), 2, 0, 0);
  elem e12 = matrix_unit(*catalog_hemiring("Z2"), 2, 0, 1);
  CHECK(MZ2.mul(e11, e12) != MZ2.mul(e12, e11));
}

TEST_CASE("matrix hemiring has identity iff the base does") {
  // zero-multiplication hemiring on the two-element join-semilattice
  auto no_one = std::make_shared<Hemiring>(Hemiring::validate(
      "flat", {"0", "1"}, 0, {{0, 1}, {1, 1}}, {{0, 0}, {0, 0}}));
  CHECK(!no_one->one());
  CHECK(!matrix_hemiring(*no_one, 2).one());
  CHECK(matrix_hemiring(*catalog_hemiring("Z4"), 2).one());
}

TEST_CASE("matrix ideal lattice corresponds to the base lattice") {
  for (const auto& name : {"B", "Z2"}) {
    auto R = catalog_hemiring(name);
    auto M = std::make_shared<Hemiring>(matrix_hemiring(*R, 2));
    auto base = enumerate_ideals(*R, Sidedness::two_sided);
    auto mat = enumerate_ideals(*M, Sidedness::two_sided);
    REQUIRE(base.size() == mat.size());
    // every matrix ideal consists of the matrices with all entries in a base
    // ideal
    for (const auto& I : base) {
      Bitset expected = matrix_subset(*R, 2, I.subset);
      bool found = false;
      for (const auto& K : mat)
        if (K.subset == expected) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("direct products") {
  auto p = direct_product({catalog_hemiring("B"), catalog_hemiring("Z2")});
  CHECK(p.product->size() == 4);
  CHECK(p.product->one().has_value());
  for (const auto& proj : p.projections) {
    auto rep = hom_check(proj);
    CHECK(rep.is_hom);
    CHECK(rep.surjective);
  }
  auto single = direct_product({catalog_hemiring("T3")});
  CHECK(are_isomorphic(*single.product, *catalog_hemiring("T3")));

  auto bb = direct_product({catalog_hemiring("B"), catalog_hemiring("B")});
  CHECK(bb.product->size() == 4);
  CHECK(is_additively_idempotent(*bb.product));
}

TEST_CASE("star quotient examples and properties") {
  auto B = catalog_hemiring("B");
  CHECK(star_quotient(B).hemiring->size() == 1);

  auto Z4 = catalog_hemiring("Z4");
  auto s = star_quotient(Z4);
  CHECK(s.hemiring->size() == 4);
  CHECK(s.partition.is_identity());

  CHECK(star_quotient(catalog_hemiring("CHAIN4")).hemiring->size() == 1);

  for (const auto& name : catalog_hemiring_names()) {
    auto R = catalog_hemiring(name);
    if (R->size() > 64) continue;
    auto q = star_quotient(R);
    CHECK(is_additively_cancellative(*q.hemiring));
    // applying the star twice changes nothing
    auto q2 = star_quotient(q.hemiring);
    CHECK(q2.hemiring->size() == q.hemiring->size());
    // the projection is a surjective homomorphism
    auto rep = hom_check(q.projection);
    CHECK(rep.is_hom);
    CHECK(rep.surjective);
  }
}

TEST_CASE("differences examples") {
  auto dz4 = differences(catalog_hemiring("Z4"));
  CHECK(are_isomorphic(*dz4.ring, *catalog_hemiring("Z4")));

  auto db = differences(catalog_hemiring("B"));
  CHECK(db.ring->size() == 1);

  auto dbz = differences(catalog_hemiring("BXZ2"));
  CHECK(are_isomorphic(*dbz.ring, *catalog_hemiring("Z2")));
}

TEST_CASE("differences properties") {
  for (const auto& name : {"ZERO", "B", "Z2", "Z4", "T3", "CHAIN4", "BXZ2", "M2B"}) {
    auto R = catalog_hemiring(name);
    auto d = differences(R);
    // additive inverses exist
    CHECK(d.ring->is_ring());
    // xi is a homomorphism, injective iff R is cancellative
    auto rep = hom_check(d.xi);
    CHECK(rep.is_hom);
    CHECK(rep.injective == is_additively_cancellative(*R));
    // D(R*) is isomorphic to D(R)
    auto ds = differences(star_quotient(R).hemiring);
    CHECK(are_isomorphic(*d.ring, *ds.ring));
  }
}

TEST_CASE("production differences agrees with the literal pair construction") {
  for (const auto& name : {"ZERO", "B", "Z2", "Z4", "T3", "CHAIN4", "BXZ2"}) {
    auto R = catalog_hemiring(name);
    auto d = differences(R);
    auto literal = testing::pair_differences(*R);
    CHECK_MESSAGE(are_isomorphic(*d.ring, literal), name);
  }
}

TEST_CASE("module of differences") {
  auto Z4 = catalog_hemiring("Z4");
  auto reg = std::make_shared<Semimodule>(Semimodule::regular(Z4));
  auto d = differences(reg);
  CHECK(d.module->size() == 4);
  // cancellative module: xi injective
  Bitset hit(d.module->size());
  for (elem m = 0; m < reg->size(); ++m) hit.set(d.xi.image[m]);
  CHECK(hit.count() == reg->size());
}

TEST_CASE("endomorphism hemirings") {
  auto C2 = catalog_monoid("C2");
  auto E = endomorphism_hemiring(C2);
  CHECK(E.ring->size() == 2);
  CHECK(are_isomorphic(*E.ring, *catalog_hemiring("B")));

  auto one = CommMonoid::validate("pt", {"0"}, 0, {{0}});
  auto E1 = endomorphism_hemiring(std::make_shared<CommMonoid>(one));
  CHECK(E1.ring->size() == 1);

  auto EN5 = endomorphism_hemiring(catalog_monoid("N5"));
  CHECK(EN5.ring->size() == 43);
  CHECK(is_congruence_simple(*EN5.ring));
}

TEST_CASE("step endomorphisms") {
  auto C2 = catalog_monoid("C2");
  auto id = step_endomorphism(*C2, 0, 1);
  CHECK(id.values == std::vector<elem>{0, 1});

  auto N5 = catalog_monoid("N5");
  elem top = *N5->index_of("1");
  auto zero_map = step_endomorphism(*N5, top, *N5->index_of("y"));
  CHECK(zero_map.values == std::vector<elem>(5, 0));

  elem x = *N5->index_of("x"), y = *N5->index_of("y");
  auto e = step_endomorphism(*N5, x, y);
  // (0,x,y,z,1) -> (0,0,y,y,y)
  std::vector<elem> expected{0, 0, y, y, y};
  CHECK(e.values == expected);

  // e_{a,b} is additive on every semilattice in the catalog
  for (elem a = 0; a < N5->size(); ++a)
    for (elem b = 0; b < N5->size(); ++b)
      CHECK(is_endomorphism(*N5, step_endomorphism(*N5, a, b).values));

  auto Z4mon = CommMonoid::validate("z4", {"0", "1", "2", "3"}, 0,
                                    {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  CHECK_THROWS_AS(step_endomorphism(Z4mon, 0, 1), NotASemilattice);
}

TEST_CASE("density checks") {
  auto C2 = catalog_monoid("C2");
  auto E = endomorphism_hemiring(C2);
  auto all = density_check(E, Bitset::full(E.ring->size()));
  CHECK(all.dense);
  CHECK(all.step_monoid == Bitset::full(2));

  auto only_zero = density_check(E, Bitset::singleton(E.ring->size(), 0));
  CHECK(!only_zero.dense);

  auto N5 = catalog_monoid("N5");
  auto EN5 = endomorphism_hemiring(N5);
  auto rep = density_check(EN5, Bitset::full(EN5.ring->size()));
  // F_M is dense in itself but is not all of End(M) for non-distributive M
  CHECK(rep.step_monoid.count() < EN5.ring->size());
  auto self = density_check(EN5, rep.step_monoid);
  CHECK(self.dense);
  // F_M is a two-sided ideal of End(M) for finite M
  CHECK(is_ideal(*EN5.ring, rep.step_monoid, Sidedness::two_sided));

  // M3, the other minimal non-distributive lattice, behaves the same way
  auto EM3 = endomorphism_hemiring(catalog_monoid("M3"));
  auto rep3 = density_check(EM3, Bitset::full(EM3.ring->size()));
  CHECK(rep3.step_monoid.count() < EM3.ring->size());
}

TEST_CASE("corners") {
  auto M2B = catalog_hemiring("M2B");
  elem e11 = *M2B->index_of("[[1,0],[0,0]]");
  auto c = corner(M2B, e11);
  CHECK(c.corner->size() == 2);
  CHECK(c.is_full);
  CHECK(are_isomorphic(*c.corner, *catalog_hemiring("B")));

  auto T3 = catalog_hemiring("T3");
  auto c2 = corner(T3, *T3->one());
  CHECK(c2.corner->size() == 3);
  CHECK(c2.is_full);

  auto BXZ2 = catalog_hemiring("BXZ2");
  elem e = *BXZ2->index_of("(1,0)");
  auto c3 = corner(BXZ2, e);
  CHECK(c3.corner->size() == 2);
  CHECK(!c3.is_full);
  CHECK(are_isomorphic(*c3.corner, *catalog_hemiring("B")));

  CHECK_THROWS_AS(corner(catalog_hemiring("Z4"), *catalog_hemiring("Z4")->index_of("3")),
                  NotIdempotent);
}
