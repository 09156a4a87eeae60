#include <doctest.h>

#include "oracles.hpp"
#include "radx/catalog.hpp"
#include "radx/hemiring.hpp"
#include "radx/ideal.hpp"

using namespace radx;

namespace {

Bitset subset_of(const Hemiring& R, std::initializer_list<const char*> labels) {
  Bitset b(R.size());
  for (const char* l : labels) b.set(*R.index_of(l));
  return b;
}

}  // namespace

TEST_CASE("every builtin validates") {
  for (const auto& name : catalog_hemiring_names()) {
    auto R = catalog_hemiring(name);
    CHECK(R->size() >= 1);
    // re-validation from the exported tables is idempotent
    std::vector<std::vector<elem>> add(R->size(), std::vector<elem>(R->size()));
    std::vector<std::vector<elem>> mul = add;
    for (elem a = 0; a < R->size(); ++a)
      for (elem b = 0; b < R->size(); ++b) {
        add[a][b] = R->add(a, b);
        mul[a][b] = R->mul(a, b);
      }
    auto again = Hemiring::validate(R->name, R->labels(), 0, add, mul);
    CHECK(again == *R);
  }
  for (const auto& name : catalog_monoid_names()) CHECK(catalog_monoid(name)->size() >= 1);
}

TEST_CASE("one-element tables give the zero hemiring") {
  auto Z = Hemiring::validate("trivial", {"0"}, 0, {{0}}, {{0}});
  CHECK(Z.size() == 1);
  CHECK(Z.one().has_value());  // 0 acts as identity in the zero semiring
}

TEST_CASE("zero can sit anywhere in the input tables") {
  // B with the labels swapped: element 0 of the document is the one
  auto B2 = Hemiring::validate("B'", {"one", "zero"}, 1, {{1, 1}, {1, 0}}, {{1, 0}, {0, 0}});
  CHECK(B2.label(0) == "zero");
  CHECK(B2.add(1, 1) == 1);
  CHECK(B2.mul(1, 1) == 1);
}

TEST_CASE("a corrupted distributivity cell is rejected with a witness") {
  // T3 with mul(2,2) forced to 1
  std::vector<std::vector<elem>> add(3, std::vector<elem>(3)), mul(3, std::vector<elem>(3));
  for (elem a = 0; a < 3; ++a)
    for (elem b = 0; b < 3; ++b) {
      add[a][b] = elem(std::min(a + b, 2));
      mul[a][b] = elem(std::min(a * b, 2));
    }
  mul[2][2] = 1;
  try {
    Hemiring::validate("broken", {"0", "1", "2"}, 0, add, mul);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom.find("distributivity") != std::string::npos);
    // the witness triple really violates the axiom it names
    REQUIRE(e.witness.size() == 3);
    auto a = e.witness[0], b = e.witness[1], c = e.witness[2];
    bool left_broken = mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]];
    bool right_broken = mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]];
    CHECK((left_broken || right_broken));
  }
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(Hemiring::validate("x", {"0", "0"}, 0, {{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}),
                  MalformedTables);
  CHECK_THROWS_AS(Hemiring::validate("x", {"0", "1"}, 0, {{0}, {0}}, {{0, 0}, {0, 0}}),
                  MalformedTables);
  CHECK_THROWS_AS(Hemiring::validate("x", {"0", "1"}, 0, {{0, 7}, {0, 0}}, {{0, 0}, {0, 0}}),
                  MalformedTables);
}

TEST_CASE("classify B") {
  auto B = catalog_hemiring("B");
  auto c = classify(*B);
  CHECK(c.is_semiring);
  CHECK(*c.identity == *B->index_of("1"));
  CHECK(c.commutative);
  CHECK(c.additively_idempotent);
  CHECK(c.lattice_ordered);
  CHECK(c.zeroic);
  CHECK(c.simple);
  CHECK(!c.additively_cancellative);
}

TEST_CASE("classify Z4") {
  auto R = catalog_hemiring("Z4");
  auto c = classify(*R);
  CHECK(c.is_semiring);
  CHECK(c.commutative);
  CHECK(c.additively_cancellative);
  CHECK(!c.zeroic);
  CHECK(!c.additively_idempotent);
  CHECK(R->is_ring());
}

TEST_CASE("classify CHAIN4") {
  auto R = catalog_hemiring("CHAIN4");
  auto c = classify(*R);
  CHECK(c.lattice_ordered);
  CHECK(!c.commutative);
  CHECK(c.strongly_subtractive);
  CHECK(c.subtractive_hemiring);
}

TEST_CASE("zeroid examples") {
  auto Z4 = catalog_hemiring("Z4");
  CHECK(zeroid(*Z4) == Bitset::singleton(4, 0));
  auto B = catalog_hemiring("B");
  CHECK(zeroid(*B) == Bitset::full(2));
  auto BXZ2 = catalog_hemiring("BXZ2");
  CHECK(zeroid(*BXZ2) == subset_of(*BXZ2, {"(0,0)", "(1,0)"}));
}

TEST_CASE("zeroid is a subtractive two-sided ideal") {
  for (const auto& name : catalog_hemiring_names()) {
    auto R = catalog_hemiring(name);
    Bitset z = zeroid(*R);
    CHECK(is_ideal(*R, z, Sidedness::two_sided));
    CHECK(is_subtractive(*R, z));
  }
}

TEST_CASE("classification implications hold on small structures") {
  for (const auto& name : catalog_hemiring_names()) {
    auto R = catalog_hemiring(name);
    if (R->size() > 16) continue;
    auto c = classify(*R);
    if (c.lattice_ordered) CHECK(c.additively_idempotent);
    if (c.simple) {
      CHECK(c.congruence_simple);
      CHECK(c.ideal_simple);
    }
    // zeroic definition
    if (c.identity)
      CHECK(c.zeroic == c.zeroid.test(*c.identity));
    else
      CHECK(c.zeroic == (c.zeroid.count() == R->size()));
  }
}
