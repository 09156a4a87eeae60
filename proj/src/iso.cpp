#include "radx/iso.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace radx {

namespace {

// Invariant coloring refined to fixpoint; zero is pinned and keeps the least
// color. Signatures use sorted rows, so colors are invariant under
// zero-fixing relabeling.
std::vector<int> hemiring_colors(const Hemiring& R) {
  const std::size_t n = R.size();
  std::vector<int> color(n, 1);
  color[0] = 0;
  for (;;) {
    std::map<std::vector<int>, std::vector<elem>> buckets;
    for (elem a = 0; a < n; ++a) {
      std::vector<int> sig{color[a], color[R.add(a, a)], color[R.mul(a, a)]};
      std::vector<std::array<int, 3>> row;
      for (elem b = 0; b < n; ++b)
        row.push_back({color[R.add(a, b)], color[R.mul(a, b)], color[R.mul(b, a)]});
      std::sort(row.begin(), row.end());
      for (const auto& t : row) {
        sig.push_back(t[0]);
        sig.push_back(t[1]);
        sig.push_back(t[2]);
      }
      buckets[std::move(sig)].push_back(a);
    }
    std::vector<int> next(n);
    int id = 0;
    for (const auto& [sig, members] : buckets) {
      for (elem a : members) next[a] = id;
      ++id;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct HemiringIso {
  const Hemiring& A;
  const Hemiring& B;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<elem> map;
  std::vector<char> used;

  bool consistent(elem pos, elem img) const {
    for (elem b = 0; b <= pos; ++b) {
      elem bi = b == pos ? img : map[b];
      elem s = A.add(pos, b);
      if (s < pos && map[s] != B.add(img, bi)) return false;
      if (s == pos && B.add(img, bi) != img) return false;
      elem p = A.mul(pos, b);
      if (p < pos && map[p] != B.mul(img, bi)) return false;
      if (p == pos && B.mul(img, bi) != img) return false;
      elem q = A.mul(b, pos);
      if (q < pos && map[q] != B.mul(bi, img)) return false;
      if (q == pos && B.mul(bi, img) != img) return false;
    }
    return true;
  }

  bool verify() const {
    const std::size_t n = A.size();
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b) {
        if (map[A.add(a, b)] != B.add(map[a], map[b])) return false;
        if (map[A.mul(a, b)] != B.mul(map[a], map[b])) return false;
      }
    return true;
  }

  bool extend(elem pos) {
    const std::size_t n = A.size();
    if (pos == n) return verify();
    for (elem img = 0; img < n; ++img) {
      if (used[img] || ca[pos] != cb[img]) continue;
      if (!consistent(pos, img)) continue;
      map[pos] = img;
      used[img] = 1;
      if (extend(elem(pos + 1))) return true;
      used[img] = 0;
    }
    return false;
  }
};

// Canonical-form search. Orderings list color classes in ascending color
// order; within that constraint the lexicographically minimal encoding wins.
// The encoding walks cells in determination order: for each position k the
// add- then mul-cells whose arguments lie in {0..k}. Pruning compares those
// cells against the incumbent while its values are decided; once an undecided
// value shows up the branch is compared in full at the leaf.
struct CanonSearch {
  enum class Cmp { equal, less, unknown };

  const Hemiring& A;
  const std::vector<int>& colors;
  std::vector<int> class_of_pos;
  std::vector<elem> perm;  // position -> element
  std::vector<elem> inv;   // element -> position, n when undecided
  std::vector<char> used;
  std::vector<elem> best_code;
  std::vector<elem> best_perm;
  bool have_best = false;
  std::size_t nodes = 0;
  std::size_t node_budget = 0;

  std::vector<elem> full_encoding() const {
    const std::size_t n = A.size();
    std::vector<elem> code;
    code.reserve(2 * n * n);
    for (elem k = 0; k < n; ++k) {
      for (elem p = 0; p <= k; ++p) {
        code.push_back(inv[A.add(perm[p], perm[k])]);
        if (p < k) code.push_back(inv[A.add(perm[k], perm[p])]);
      }
      for (elem p = 0; p <= k; ++p) {
        code.push_back(inv[A.mul(perm[p], perm[k])]);
        if (p < k) code.push_back(inv[A.mul(perm[k], perm[p])]);
      }
    }
    return code;
  }

  // Walks the cells determined by position k, advancing the comparison
  // state. Returns false to prune (strictly greater than the incumbent).
  bool walk_cells(elem k, std::size_t& cell, Cmp& cmp) {
    auto feed = [&](elem value) {
      if (cmp != Cmp::equal) {
        ++cell;
        return true;
      }
      elem pos = inv[value];
      if (pos == elem(A.size())) {
        cmp = Cmp::unknown;
        ++cell;
        return true;
      }
      if (pos > best_code[cell]) return false;
      if (pos < best_code[cell]) cmp = Cmp::less;
      ++cell;
      return true;
    };
    for (elem p = 0; p <= k; ++p) {
      if (!feed(A.add(perm[p], perm[k]))) return false;
      if (p < k && !feed(A.add(perm[k], perm[p]))) return false;
    }
    for (elem p = 0; p <= k; ++p) {
      if (!feed(A.mul(perm[p], perm[k]))) return false;
      if (p < k && !feed(A.mul(perm[k], perm[p]))) return false;
    }
    return true;
  }

  void search(elem k, std::size_t cell, Cmp cmp) {
    const std::size_t n = A.size();
    if (node_budget && ++nodes > node_budget)
      throw ResourceLimit("canonical form search exceeds the node budget");
    if (k == n) {
      // The incumbent may have shrunk since this branch's prefix was
      // compared, so the leaf always compares the full encoding; cmp is a
      // pruning device only.
      (void)cmp;
      auto code = full_encoding();
      if (!have_best || code < best_code) {
        best_code = std::move(code);
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (elem cand = 0; cand < n; ++cand) {
      if (used[cand] || colors[cand] != class_of_pos[k]) continue;
      perm[k] = cand;
      inv[cand] = k;
      used[cand] = 1;
      std::size_t c = cell;
      Cmp state = have_best ? cmp : Cmp::unknown;
      if (walk_cells(k, c, state)) search(elem(k + 1), c, state);
      used[cand] = 0;
      inv[cand] = elem(n);
    }
  }
};

}  // namespace

bool are_isomorphic(const Hemiring& A, const Hemiring& B, const Limits&) {
  if (A.size() != B.size()) return false;
  auto ca = hemiring_colors(A);
  auto cb = hemiring_colors(B);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const std::size_t n = A.size();
  if (n == 1) return true;
  HemiringIso search{A, B, ca, cb, std::vector<elem>(n, 0), std::vector<char>(n, 0)};
  search.used[0] = 1;
  return search.extend(1);
}

std::vector<elem> canonical_form(const Hemiring& A, const Limits&) {
  const std::size_t n = A.size();
  auto colors = hemiring_colors(A);
  std::vector<int> class_of_pos(colors.begin(), colors.end());
  std::sort(class_of_pos.begin(), class_of_pos.end());

  CanonSearch search{A,
                     colors,
                     class_of_pos,
                     std::vector<elem>(n, 0),
                     std::vector<elem>(n, elem(n)),
                     std::vector<char>(n, 0),
                     {},
                     {},
                     false,
                     0,
                     std::size_t(4) << 20};
  // zero keeps the least color, so it owns position 0
  search.perm[0] = 0;
  search.inv[0] = 0;
  search.used[0] = 1;
  search.search(1, 2, CanonSearch::Cmp::unknown);

  // Prefix the class sizes so different colorings can never collide.
  std::vector<elem> out;
  out.push_back(elem(n));
  for (int c : class_of_pos) out.push_back(elem(c));
  out.insert(out.end(), search.best_code.begin(), search.best_code.end());
  return out;
}

std::string encode_tables(const Hemiring& A) {
  std::string s;
  const std::size_t n = A.size();
  s += "n=" + std::to_string(n) + ";add=";
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) s += std::to_string(A.add(a, b)) + (std::size_t(b) + 1 < n ? "," : ";");
  s += "mul=";
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) s += std::to_string(A.mul(a, b)) + (std::size_t(b) + 1 < n ? "," : ";");
  return s;
}

}  // namespace radx
