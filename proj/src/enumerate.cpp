#include "radx/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "radx/iso.hpp"

namespace radx {

namespace {

using Table = std::vector<std::vector<elem>>;

bool monoid_associative(const Table& add, unsigned n) {
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (add[add[a][b]][c] != add[a][add[b][c]]) return false;
  return true;
}

// All commutative monoid tables on {0..n-1} with identity 0, canonicalized
// over zero-fixing permutations.
std::vector<Table> canonical_monoids(unsigned n) {
  std::vector<std::pair<elem, elem>> cells;
  for (elem a = 1; a < n; ++a)
    for (elem b = a; b < n; ++b) cells.emplace_back(a, b);

  std::vector<Table> raw;
  Table add(n, std::vector<elem>(n));
  for (elem a = 0; a < n; ++a) {
    add[0][a] = a;
    add[a][0] = a;
  }
  std::vector<elem> choice(cells.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto [a, b] = cells[i];
      add[a][b] = choice[i];
      add[b][a] = choice[i];
    }
    if (monoid_associative(add, n)) raw.push_back(add);
    std::size_t k = cells.size();
    while (k-- > 0) {
      if (++choice[k] < n) break;
      choice[k] = 0;
    }
    if (k == std::size_t(-1)) break;
    if (cells.empty()) break;
  }
  if (cells.empty() && raw.empty()) raw.push_back(add);

  // canonical form of a bare monoid: minimal relabeled table over
  // zero-fixing permutations
  std::set<Table> canon;
  std::vector<elem> perm(n);
  for (const auto& t : raw) {
    for (elem i = 0; i < n; ++i) perm[i] = i;
    Table best = t;
    do {
      Table relabeled(n, std::vector<elem>(n));
      for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b) relabeled[perm[a]][perm[b]] = perm[t[a][b]];
      if (relabeled < best) best = relabeled;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    canon.insert(best);
  }
  return {canon.begin(), canon.end()};
}

// Multiplication scans for one addition table, with distributivity checked
// cell-by-cell against the decided prefix to prune.
void scan_multiplications(const Table& add, unsigned n, std::vector<Hemiring>& out) {
  std::vector<std::pair<elem, elem>> cells;
  for (elem a = 1; a < n; ++a)
    for (elem b = 1; b < n; ++b) cells.emplace_back(a, b);

  Table mul(n, std::vector<elem>(n, 0));
  std::vector<char> decided(n * n, 0);
  for (elem a = 0; a < n; ++a) {
    decided[0 * n + a] = 1;
    decided[a * n + 0] = 1;
  }

  auto ok_so_far = [&](elem a, elem b) {
    // distributivity instances whose three product cells are decided
    for (elem c = 0; c < n; ++c) {
      elem s = add[b][c];
      if (decided[a * n + s] && decided[a * n + b] && decided[a * n + c])
        if (mul[a][s] != add[mul[a][b]][mul[a][c]]) return false;
      s = add[a][c];
      if (decided[s * n + b] && decided[a * n + b] && decided[c * n + b])
        if (mul[s][b] != add[mul[a][b]][mul[c][b]]) return false;
      // associativity instances with decided cells
      if (decided[a * n + b] && decided[mul[a][b] * n + c] && decided[b * n + c] &&
          decided[a * n + mul[b][c]])
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
    }
    return true;
  };

  auto full_check = [&]() {
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b) {
        for (elem c = 0; c < n; ++c) {
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
          if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) return false;
          if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) return false;
        }
      }
    return true;
  };

  std::vector<std::string> labels(n);
  for (elem i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);

  std::size_t depth = 0;
  std::vector<elem> choice(cells.size(), 0);
  if (cells.empty()) {
    out.push_back(Hemiring::validate("enumerated", labels, 0, add, mul));
    return;
  }
  // iterative DFS over cell values
  std::vector<elem> stack_value(cells.size(), 0);
  std::size_t pos = 0;
  stack_value[0] = 0;
  while (true) {
    if (stack_value[pos] < n) {
      auto [a, b] = cells[pos];
      mul[a][b] = stack_value[pos];
      decided[a * n + b] = 1;
      if (ok_so_far(a, b)) {
        if (pos + 1 == cells.size()) {
          if (full_check())
            out.push_back(Hemiring::validate("enumerated", labels, 0, add, mul));
          decided[a * n + b] = 0;
          ++stack_value[pos];
        } else {
          ++pos;
          stack_value[pos] = 0;
        }
      } else {
        decided[a * n + b] = 0;
        ++stack_value[pos];
      }
    } else {
      if (pos == 0) break;
      --pos;
      auto [a, b] = cells[pos];
      decided[a * n + b] = 0;
      ++stack_value[pos];
    }
  }
  (void)depth;
  (void)choice;
}

bool passes(const Hemiring& R, const Classification& c, const std::string& p) {
  if (p == "is_semiring") return c.is_semiring;
  if (p == "commutative") return c.commutative;
  if (p == "additively_idempotent") return c.additively_idempotent;
  if (p == "additively_cancellative") return c.additively_cancellative;
  if (p == "additively_regular") return c.additively_regular;
  if (p == "zeroic") return c.zeroic;
  if (p == "lattice_ordered") return c.lattice_ordered;
  if (p == "subtractive") return c.subtractive_hemiring;
  if (p == "strongly_subtractive") return c.strongly_subtractive;
  if (p == "congruence_simple") return c.congruence_simple;
  if (p == "ideal_simple") return c.ideal_simple;
  if (p == "simple") return c.simple;
  if (p == "ring") return R.is_ring();
  throw RadxError("unknown predicate '" + p + "'");
}

}  // namespace

bool known_predicate(const std::string& name) {
  static const std::vector<std::string> names = {
      "is_semiring",       "commutative",   "additively_idempotent",
      "additively_cancellative", "additively_regular", "zeroic",
      "lattice_ordered",   "subtractive",   "strongly_subtractive",
      "congruence_simple", "ideal_simple",  "simple", "ring"};
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Hemiring> enumerate_hemirings(unsigned order, const PredicateList& predicates,
                                          const Limits& limits, unsigned jobs) {
  if (order == 0 || order > 4)
    throw ResourceLimit("enumeration supports orders 1 through 4");
  for (const auto& p : predicates)
    if (!known_predicate(p)) throw RadxError("unknown predicate '" + p + "'");

  auto monoids = canonical_monoids(order);
  std::vector<std::vector<Hemiring>> buckets(monoids.size());
  auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) scan_multiplications(monoids[i], order, buckets[i]);
  };
  if (jobs > 1 && monoids.size() > 1) {
    std::vector<std::thread> threads;
    std::size_t per = (monoids.size() + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
      std::size_t lo = t * per, hi = std::min(monoids.size(), (t + 1) * per);
      if (lo < hi) threads.emplace_back(worker, lo, hi);
    }
    for (auto& t : threads) t.join();
  } else {
    worker(0, monoids.size());
  }

  // Deduplicate by canonical form; deterministic order by canonical encoding.
  std::map<std::vector<elem>, Hemiring> classes;
  for (auto& bucket : buckets)
    for (auto& R : bucket) {
      auto key = canonical_form(R, limits);
      classes.emplace(std::move(key), std::move(R));
    }
  std::vector<Hemiring> out;
  std::size_t idx = 0;
  for (auto& [key, R] : classes) {
    Classification c = classify(R, limits);
    bool keep = true;
    for (const auto& p : predicates)
      if (!passes(R, c, p)) {
        keep = false;
        break;
      }
    if (keep) {
      R.name = "H" + std::to_string(order) + "_" + std::to_string(idx++);
      out.push_back(std::move(R));
    }
  }
  return out;
}

std::size_t count_hemirings(unsigned order, const PredicateList& predicates,
                            const Limits& limits, unsigned jobs) {
  return enumerate_hemirings(order, predicates, limits, jobs).size();
}

}  // namespace radx
