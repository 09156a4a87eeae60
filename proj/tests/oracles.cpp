#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace radx::testing {

std::vector<Partition> all_partitions(std::size_t n) {
  // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<Partition> out;
  std::vector<elem> a(n, 0);
  for (;;) {
    std::vector<elem> rep(n);
    std::map<elem, elem> least;
    for (std::size_t i = 0; i < n; ++i)
      if (!least.count(a[i])) least[a[i]] = elem(i);
    for (std::size_t i = 0; i < n; ++i) rep[i] = least[a[i]];
    out.emplace_back(std::move(rep));

    // next restricted growth string
    std::size_t i = n;
    bool done = true;
    while (i-- > 1) {
      elem maxprefix = *std::max_element(a.begin(), a.begin() + i);
      if (a[i] <= maxprefix) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return out;
}

std::vector<Partition> brute_congruences(const Hemiring& R) {
  std::vector<Partition> out;
  for (const auto& p : all_partitions(R.size()))
    if (is_congruence(R, p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> brute_congruences(const Semimodule& M) {
  std::vector<Partition> out;
  for (const auto& p : all_partitions(M.size()))
    if (is_congruence(M, p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bitset> brute_ideals(const Hemiring& R, Sidedness s) {
  const std::size_t n = R.size();
  std::vector<Bitset> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    if (!(mask & 1)) continue;
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) b.set(i);
    if (is_ideal(R, b, s)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Semimodule> brute_semimodules(const HemiringPtr& R, std::size_t max_size) {
  std::vector<Semimodule> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "m" + std::to_string(i);
    // free cells of the addition table: (a,b) with 1 <= a <= b
    std::vector<std::pair<elem, elem>> cells;
    for (elem a = 1; a < n; ++a)
      for (elem b = a; b < n; ++b) cells.emplace_back(a, b);
    std::vector<elem> add_choice(cells.size(), 0);
    for (;;) {
      std::vector<std::vector<elem>> add(n, std::vector<elem>(n));
      for (elem a = 0; a < n; ++a) {
        add[0][a] = a;
        add[a][0] = a;
      }
      for (std::size_t i = 0; i < cells.size(); ++i) {
        add[cells[i].first][cells[i].second] = add_choice[i];
        add[cells[i].second][cells[i].first] = add_choice[i];
      }
      // all action tables: |R| x n entries, row 0 forced to 0
      const std::size_t rows = R->size();
      std::vector<elem> act_choice((rows - 1) * std::max<std::size_t>(n - 1, 0), 0);
      for (;;) {
        std::vector<std::vector<elem>> act(rows, std::vector<elem>(n, 0));
        std::size_t k = 0;
        for (std::size_t r = 1; r < rows; ++r)
          for (std::size_t m = 1; m < n; ++m) act[r][m] = act_choice.empty() ? 0 : act_choice[k++];
        try {
          out.push_back(Semimodule::validate("brute", R, labels, 0, add, act));
        } catch (const RadxError&) {
          // not a semimodule; skip
        }
        if (act_choice.empty()) break;
        std::size_t i = act_choice.size();
        bool done = true;
        while (i-- > 0) {
          if (++act_choice[i] < n) {
            std::fill(act_choice.begin() + i + 1, act_choice.end(), 0);
            done = false;
            break;
          }
          act_choice[i] = 0;
        }
        if (done) break;
      }
      if (cells.empty()) break;
      std::size_t i = add_choice.size();
      bool done = true;
      while (i-- > 0) {
        if (++add_choice[i] < n) {
          std::fill(add_choice.begin() + i + 1, add_choice.end(), 0);
          done = false;
          break;
        }
        add_choice[i] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

bool brute_w_finitely_generated(const Semimodule& M, unsigned max_pairs) {
  const std::size_t n = M.size();
  const std::size_t nr = M.ring().size();
  // pick up to max_pairs base pairs (with repetition), then per element try
  // all coefficient assignments
  std::vector<std::pair<elem, elem>> pairs;
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) pairs.emplace_back(a, b);

  // iterate tuples of length 1..max_pairs over pairs (ordered tuples; the
  // identity is symmetric in the list, so this covers multisets too)
  auto check_tuple = [&](const std::vector<std::size_t>& t) {
    for (elem m = 0; m < n; ++m) {
      bool ok = false;
      // assignments of (r,s) per chosen pair
      std::vector<std::size_t> coef(t.size(), 0);
      const std::size_t options = nr * nr;
      for (;;) {
        elem lhs = m, rhs = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
          elem r = elem(coef[i] / nr), s = elem(coef[i] % nr);
          auto [mi, mip] = pairs[t[i]];
          lhs = M.add(lhs, M.add(M.act(r, mip), M.act(s, mi)));
          rhs = M.add(rhs, M.add(M.act(r, mi), M.act(s, mip)));
        }
        if (lhs == rhs) {
          ok = true;
          break;
        }
        std::size_t i = coef.size();
        bool done = true;
        while (i-- > 0) {
          if (++coef[i] < options) {
            std::fill(coef.begin() + i + 1, coef.end(), 0);
            done = false;
            break;
          }
          coef[i] = 0;
        }
        if (done) break;
      }
      if (!ok) return false;
    }
    return true;
  };

  // depth-first over tuples of length <= max_pairs
  std::vector<std::size_t> counters{0};
  while (!counters.empty()) {
    if (counters.back() >= pairs.size()) {
      counters.pop_back();
      if (!counters.empty()) ++counters.back();
      continue;
    }
    if (check_tuple(counters)) return true;
    if (counters.size() < max_pairs) {
      counters.push_back(0);
    } else {
      ++counters.back();
    }
  }
  return false;
}

bool brute_isomorphic(const Hemiring& A, const Hemiring& B) {
  if (A.size() != B.size()) return false;
  const std::size_t n = A.size();
  std::vector<elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a)
      for (elem b = 0; b < n && ok; ++b)
        ok = perm[A.add(a, b)] == B.add(perm[a], perm[b]) &&
             perm[A.mul(a, b)] == B.mul(perm[a], perm[b]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

Hemiring pair_differences(const Hemiring& R) {
  const std::size_t n = R.size();
  const std::size_t nn = n * n;
  auto pair_of = [&](std::size_t code) {
    return std::pair<elem, elem>(elem(code / n), elem(code % n));
  };
  // (a,b) ~ (c,d) iff a+d+x = b+c+x for some x
  auto related = [&](std::size_t p, std::size_t q) {
    auto [a, b] = pair_of(p);
    auto [c, d] = pair_of(q);
    elem left = R.add(a, d), right = R.add(b, c);
    for (elem x = 0; x < n; ++x)
      if (R.add(left, x) == R.add(right, x)) return true;
    return false;
  };
  std::vector<int> cls(nn, -1);
  std::vector<std::size_t> reps;
  for (std::size_t p = 0; p < nn; ++p) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (related(p, reps[i])) {
        cls[p] = int(i);
        break;
      }
    if (cls[p] < 0) {
      cls[p] = int(reps.size());
      reps.push_back(p);
    }
  }
  // zero class is the class of (0,0) = code 0; reorder so it is index 0
  std::size_t zero_class = std::size_t(cls[0]);
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::swap(order[0], order[zero_class]);
  std::vector<int> newindex(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) newindex[order[i]] = int(i);

  const std::size_t m = reps.size();
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [a, b] = pair_of(reps[order[i]]);
    labels[i] = "(" + R.label(a) + "-" + R.label(b) + ")";
  }
  std::vector<std::vector<elem>> add(m, std::vector<elem>(m)), mul(m, std::vector<elem>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto [a, b] = pair_of(reps[order[i]]);
      auto [c, d] = pair_of(reps[order[j]]);
      std::size_t sum = std::size_t(R.add(a, c)) * n + R.add(b, d);
      add[i][j] = elem(newindex[cls[sum]]);
      // (a,b)(c,d) = (ac + bd, ad + bc)
      std::size_t prod =
          std::size_t(R.add(R.mul(a, c), R.mul(b, d))) * n + R.add(R.mul(a, d), R.mul(b, c));
      mul[i][j] = elem(newindex[cls[prod]]);
    }
  return Hemiring::validate("pairD(" + R.name + ")", labels, 0, add, mul);
}

}  // namespace radx::testing
