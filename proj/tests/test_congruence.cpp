#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "radx/catalog.hpp"
#include "radx/congruence.hpp"
#include "radx/ideal.hpp"
#include "radx/iso.hpp"
#include "radx/semimodule.hpp"

using namespace radx;

namespace {

Bitset subset_of(const Hemiring& R, std::initializer_list<const char*> labels) {
  Bitset b(R.size());
  for (const char* l : labels) b.set(*R.index_of(l));
  return b;
}

std::vector<Bitset> ideal_subsets(const std::vector<SubsetIdeal>& v) {
  std::vector<Bitset> out;
  for (const auto& i : v) out.push_back(i.subset);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("ideal closure examples") {
  auto C = catalog_hemiring("CHAIN4");
  CHECK(ideal_closure(*C, subset_of(*C, {"a"}), Sidedness::two_sided).subset ==
        subset_of(*C, {"0", "a"}));

  auto M = catalog_hemiring("M2B");
  elem e11 = *M->index_of("[[1,0],[0,0]]");
  CHECK(ideal_closure(*M, Bitset::singleton(M->size(), e11), Sidedness::two_sided)
            .subset.count() == M->size());

  CHECK(ideal_closure(*C, Bitset(C->size()), Sidedness::left).subset ==
        Bitset::singleton(C->size(), 0));
}

TEST_CASE("enumerate_ideals matches the spec examples") {
  auto C = catalog_hemiring("CHAIN4");
  auto ideals = enumerate_ideals(*C, Sidedness::two_sided);
  REQUIRE(ideals.size() == 4);
  CHECK(ideals[0].subset == subset_of(*C, {"0"}));
  CHECK(ideals[1].subset == subset_of(*C, {"0", "a"}));
  CHECK(ideals[2].subset == subset_of(*C, {"0", "a", "b"}));
  CHECK(ideals[3].subset == Bitset::full(4));

  auto B = catalog_hemiring("B");
  CHECK(enumerate_ideals(*B, Sidedness::two_sided).size() == 2);

  auto T3 = catalog_hemiring("T3");
  auto sub = enumerate_ideals(*T3, Sidedness::two_sided, true);
  REQUIRE(sub.size() == 2);
  CHECK(sub[0].subset == Bitset::singleton(3, 0));
  CHECK(sub[1].subset == Bitset::full(3));
  // {0,2} is an ideal but not subtractive
  auto all = enumerate_ideals(*T3, Sidedness::two_sided, false);
  bool found = false;
  for (const auto& I : all)
    if (I.subset == subset_of(*T3, {"0", "2"})) {
      found = true;
      CHECK(!I.subtractive);
    }
  CHECK(found);
}

TEST_CASE("ideal lattices agree with subset filtering") {
  for (const auto& name : {"B", "Z2", "Z4", "T3", "CHAIN4", "BXZ2"}) {
    auto R = catalog_hemiring(name);
    for (auto s : {Sidedness::left, Sidedness::right, Sidedness::two_sided}) {
      auto brute = testing::brute_ideals(*R, s);
      auto fast = ideal_subsets(enumerate_ideals(*R, s));
      CHECK_MESSAGE(brute == fast, name);
    }
  }
}

TEST_CASE("subtractive closure") {
  auto T3 = catalog_hemiring("T3");
  SubsetIdeal I{subset_of(*T3, {"0", "2"}), Sidedness::two_sided, false};
  CHECK(subtractive_closure(*T3, I).subset == Bitset::full(3));

  auto Z4 = catalog_hemiring("Z4");
  SubsetIdeal J{subset_of(*Z4, {"0", "2"}), Sidedness::two_sided, true};
  CHECK(subtractive_closure(*Z4, J).subset == J.subset);

  SubsetIdeal zero{Bitset::singleton(4, 0), Sidedness::two_sided, true};
  CHECK(subtractive_closure(*Z4, zero).subset == zero.subset);

  // applying the closure twice equals applying it once
  for (const auto& name : {"T3", "CHAIN4", "BXZ2", "Z4"}) {
    auto R = catalog_hemiring(name);
    for (const auto& I2 : enumerate_ideals(*R, Sidedness::two_sided)) {
      auto c1 = subtractive_closure(*R, I2);
      auto c2 = subtractive_closure(*R, c1);
      CHECK(c1.subset == c2.subset);
      CHECK(is_subtractive(*R, c1.subset));
    }
  }

  CHECK_THROWS_AS(subtractive_closure(*T3, SubsetIdeal{subset_of(*T3, {"0", "1"}),
                                                       Sidedness::two_sided, false}),
                  NotAnIdeal);
}

TEST_CASE("bourne quotients") {
  auto T3 = catalog_hemiring("T3");
  auto q = bourne_quotient(T3, SubsetIdeal{subset_of(*T3, {"0", "2"}), Sidedness::two_sided,
                                           false});
  CHECK(q.hemiring->size() == 1);

  auto Z4 = catalog_hemiring("Z4");
  auto q2 = bourne_quotient(Z4, SubsetIdeal{subset_of(*Z4, {"0", "2"}), Sidedness::two_sided,
                                            true});
  CHECK(q2.hemiring->size() == 2);
  CHECK(are_isomorphic(*q2.hemiring, *catalog_hemiring("Z2")));

  auto q3 = bourne_quotient(Z4, SubsetIdeal{Bitset::singleton(4, 0), Sidedness::two_sided,
                                            true});
  CHECK(q3.hemiring->size() == 4);
  for (elem a = 0; a < 4; ++a) CHECK(q3.projection.image[a] == a);
}

TEST_CASE("bourne partition of an ideal and of its subtractive closure coincide") {
  for (const auto& name : {"T3", "CHAIN4", "BXZ2", "Z4", "B"}) {
    auto R = catalog_hemiring(name);
    for (const auto& I : enumerate_ideals(*R, Sidedness::two_sided)) {
      auto closure = subtractive_closure(*R, I);
      CHECK(bourne_partition(*R, I.subset) == bourne_partition(*R, closure.subset));
      // kernel block of the quotient equals the subtractive closure
      auto q = bourne_quotient(R, I);
      CHECK(q.partition.kernel_block() == closure.subset);
      // projections are surjective homomorphisms
      auto rep = hom_check(q.projection);
      CHECK(rep.is_hom);
      CHECK(rep.surjective);
    }
  }
}

TEST_CASE("congruence closure examples") {
  auto B = catalog_hemiring("B");
  CHECK(congruence_closure(*B, {{0, 1}}).is_full());

  auto C = catalog_hemiring("CHAIN4");
  elem b = *C->index_of("b"), one = *C->index_of("1"), a = *C->index_of("a");
  auto p = congruence_closure(*C, {{b, one}});
  CHECK(p.num_blocks() == 2);
  CHECK(p.same(0, a));
  CHECK(p.same(b, one));
  CHECK(!p.same(0, b));

  auto T3 = catalog_hemiring("T3");
  auto p2 = congruence_closure(*T3, {{1, 2}});
  CHECK(p2.num_blocks() == 2);
  CHECK(p2.same(1, 2));
  CHECK(!p2.same(0, 1));
  auto q = quotient(T3, p2);
  CHECK(are_isomorphic(*q.hemiring, *catalog_hemiring("B")));
}

TEST_CASE("congruence closure equals the intersection of covering congruences") {
  // |A| <= 4: check against all compatible partitions containing the pairs
  for (const auto& name : {"B", "Z2", "T3", "CHAIN4", "Z4", "BXZ2"}) {
    auto R = catalog_hemiring(name);
    auto congs = testing::brute_congruences(*R);
    for (elem a = 0; a < R->size(); ++a)
      for (elem b = elem(a + 1); b < R->size(); ++b) {
        auto closed = congruence_closure(*R, {{a, b}});
        // meet of all congruences containing (a,b)
        for (elem x = 0; x < R->size(); ++x)
          for (elem y = elem(x + 1); y < R->size(); ++y) {
            bool in_all = true;
            for (const auto& c : congs)
              if (c.same(a, b) && !c.same(x, y)) {
                in_all = false;
                break;
              }
            CHECK(closed.same(x, y) == in_all);
          }
      }
  }
}

TEST_CASE("congruence lattices agree with partition filtering") {
  for (const auto& name : {"ZERO", "B", "Z2", "T3", "CHAIN4", "Z4", "BXZ2"}) {
    auto R = catalog_hemiring(name);
    auto brute = testing::brute_congruences(*R);
    auto fast = enumerate_congruences(*R);
    CHECK_MESSAGE(brute == fast, name);
  }
  // semimodule congruences: the regular semimodule over each
  for (const auto& name : {"B", "Z2", "T3", "CHAIN4", "Z4"}) {
    auto R = catalog_hemiring(name);
    auto reg = Semimodule::regular(R);
    auto brute = testing::brute_congruences(reg);
    auto fast = enumerate_congruences(reg);
    CHECK_MESSAGE(brute == fast, name);
  }
}

TEST_CASE("CHAIN4 has exactly the congruences the partition scan finds") {
  auto C = catalog_hemiring("CHAIN4");
  auto congs = enumerate_congruences(*C);
  // pinned by the brute-force oracle over all 15 partitions of 4 points
  CHECK(testing::all_partitions(4).size() == 15);
  CHECK(congs.size() == testing::brute_congruences(*C).size());
  elem a = *C->index_of("a"), b = *C->index_of("b"), one = *C->index_of("1");
  bool has_ab = false, has_abb = false;
  for (const auto& p : congs) {
    if (p.num_blocks() == 2 && p.same(0, a) && p.same(b, one) && !p.same(0, b)) has_ab = true;
    if (p.num_blocks() == 2 && p.same(0, a) && p.same(0, b) && !p.same(0, one)) has_abb = true;
  }
  CHECK(has_ab);
  CHECK(has_abb);
}

TEST_CASE("quotient rejects incompatible partitions") {
  auto Z4 = catalog_hemiring("Z4");
  // {{0,1},{2},{3}} is not a congruence of Z4
  Partition p(std::vector<elem>{0, 0, 2, 3});
  CHECK_THROWS_AS(quotient(Z4, p), IncompatiblePartition);
}

TEST_CASE("quotient by the identity partition is the structure itself") {
  auto C = catalog_hemiring("CHAIN4");
  auto q = quotient(C, Partition(C->size()));
  CHECK(*q.hemiring == *C);
}

TEST_CASE("hom_check examples") {
  auto B = catalog_hemiring("B");
  auto Z2 = catalog_hemiring("Z2");
  // label-identity B -> Z2 is not a homomorphism (1+1 disagrees)
  HemiringMap f{B, Z2, {0, 1}};
  CHECK(!hom_check(f).is_hom);

  // T3 -> B via 0,1,2 -> 0,1,1: a semiisomorphism that is not injective
  auto T3 = catalog_hemiring("T3");
  HemiringMap g{T3, B, {0, 1, 1}};
  auto rep = hom_check(g);
  CHECK(rep.is_hom);
  CHECK(rep.kernel == Bitset::singleton(3, 0));
  CHECK(rep.surjective);
  CHECK(!rep.injective);
  CHECK(rep.is_semiisomorphism);

  HemiringMap id{B, B, {0, 1}};
  auto rep2 = hom_check(id);
  CHECK(rep2.is_hom);
  CHECK(rep2.injective);
  CHECK(rep2.surjective);
}

TEST_CASE("congruence enumeration respects the resource limit") {
  Limits tight;
  tight.max_congruences = 2;
  auto Z4 = catalog_hemiring("Z4");
  CHECK_THROWS_AS(enumerate_congruences(*Z4, tight), ResourceLimit);
}
