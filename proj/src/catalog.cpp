#include "radx/catalog.hpp"

#include <map>

#include "radx/construct.hpp"

namespace radx {

namespace {

using Table = std::vector<std::vector<elem>>;

HemiringPtr make(const std::string& name, std::vector<std::string> labels, const Table& add,
                 const Table& mul) {
  return std::make_shared<Hemiring>(Hemiring::validate(name, std::move(labels), 0, add, mul));
}

HemiringPtr build_hemiring(const std::string& name) {
  if (name == "ZERO") return make("ZERO", {"0"}, {{0}}, {{0}});
  if (name == "B")
    return make("B", {"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
  if (name == "Z2")
    return make("Z2", {"0", "1"}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}});
  if (name == "Z4") {
    Table add(4, std::vector<elem>(4)), mul(4, std::vector<elem>(4));
    for (elem a = 0; a < 4; ++a)
      for (elem b = 0; b < 4; ++b) {
        add[a][b] = elem((a + b) % 4);
        mul[a][b] = elem((a * b) % 4);
      }
    return make("Z4", {"0", "1", "2", "3"}, add, mul);
  }
  if (name == "T3") {
    // truncated naturals {0,1,2}: a(+)b = min(a+b,2), a(*)b = min(ab,2)
    Table add(3, std::vector<elem>(3)), mul(3, std::vector<elem>(3));
    for (elem a = 0; a < 3; ++a)
      for (elem b = 0; b < 3; ++b) {
        add[a][b] = elem(std::min(a + b, 2));
        mul[a][b] = elem(std::min(a * b, 2));
      }
    return make("T3", {"0", "1", "2"}, add, mul);
  }
  if (name == "CHAIN4") {
    // chain 0 < a < b < 1 under join, with b*b=b, a*a=0, b*a=a, a*b=0
    // and 1 the multiplicative identity
    std::vector<std::string> labels{"0", "a", "b", "1"};
    Table add(4, std::vector<elem>(4)), mul(4, std::vector<elem>(4));
    for (elem x = 0; x < 4; ++x)
      for (elem y = 0; y < 4; ++y) add[x][y] = std::max(x, y);
    // indices: 0=0, 1=a, 2=b, 3=1
    elem tbl[4][4] = {{0, 0, 0, 0},   // 0 * -
                      {0, 0, 0, 1},   // a*a=0, a*b=0, a*1=a
                      {0, 1, 2, 2},   // b*a=a, b*b=b, b*1=b
                      {0, 1, 2, 3}};  // 1 * -
    for (elem x = 0; x < 4; ++x)
      for (elem y = 0; y < 4; ++y) mul[x][y] = tbl[x][y];
    return make("CHAIN4", std::move(labels), add, mul);
  }
  if (name == "BXZ2") {
    auto prod = direct_product({catalog_hemiring("B"), catalog_hemiring("Z2")});
    auto h = std::make_shared<Hemiring>(*prod.product);
    h->name = "BXZ2";
    return h;
  }
  if (name == "M2B") {
    auto m = std::make_shared<Hemiring>(matrix_hemiring(*catalog_hemiring("B"), 2));
    m->name = "M2B";
    return m;
  }
  if (name == "END_N5") {
    auto e = endomorphism_hemiring(catalog_monoid("N5"));
    auto h = std::make_shared<Hemiring>(*e.ring);
    h->name = "END_N5";
    return h;
  }
  throw RadxError("unknown builtin hemiring '" + name + "'");
}

CommMonoidPtr build_monoid(const std::string& name) {
  if (name == "C2")
    return std::make_shared<CommMonoid>(
        CommMonoid::validate("C2", {"0", "1"}, 0, {{0, 1}, {1, 1}}));
  if (name == "N5") {
    // pentagon: 0 < x < z < 1 with y incomparable to x and z
    // indices: 0=0, 1=x, 2=y, 3=z, 4=1
    Table join{{0, 1, 2, 3, 4},
               {1, 1, 4, 3, 4},
               {2, 4, 2, 4, 4},
               {3, 3, 4, 3, 4},
               {4, 4, 4, 4, 4}};
    return std::make_shared<CommMonoid>(
        CommMonoid::validate("N5", {"0", "x", "y", "z", "1"}, 0, join));
  }
  if (name == "M3") {
    // diamond: three incomparable atoms a, b, c between 0 and 1
    Table join{{0, 1, 2, 3, 4},
               {1, 1, 4, 4, 4},
               {2, 4, 2, 4, 4},
               {3, 4, 4, 3, 4},
               {4, 4, 4, 4, 4}};
    return std::make_shared<CommMonoid>(
        CommMonoid::validate("M3", {"0", "a", "b", "c", "1"}, 0, join));
  }
  throw RadxError("unknown builtin monoid '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_hemiring_names() {
  return {"ZERO", "B", "Z2", "Z4", "T3", "CHAIN4", "BXZ2", "M2B", "END_N5"};
}

std::vector<std::string> catalog_monoid_names() { return {"C2", "N5", "M3"}; }

bool is_catalog_hemiring(const std::string& name) {
  for (const auto& n : catalog_hemiring_names())
    if (n == name) return true;
  return false;
}

bool is_catalog_monoid(const std::string& name) {
  for (const auto& n : catalog_monoid_names())
    if (n == name) return true;
  return false;
}

HemiringPtr catalog_hemiring(const std::string& name) {
  static std::map<std::string, HemiringPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto h = build_hemiring(name);
  cache[name] = h;
  return h;
}

CommMonoidPtr catalog_monoid(const std::string& name) {
  static std::map<std::string, CommMonoidPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto m = build_monoid(name);
  cache[name] = m;
  return m;
}

}  // namespace radx
