#include "radx/monoid.hpp"

#include <set>

namespace radx {

std::optional<elem> CommMonoid::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return elem(i);
  return std::nullopt;
}

bool CommMonoid::idempotent() const {
  for (elem a = 0; a < size(); ++a)
    if (add_(a, a) != a) return false;
  return true;
}

CommMonoid CommMonoid::validate(std::string name, std::vector<std::string> labels, elem zero,
                                const std::vector<std::vector<elem>>& add) {
  const std::size_t n = labels.size();
  if (n == 0) throw MalformedTables("empty carrier");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw MalformedTables("element labels not distinct");
  }
  if (zero >= n) throw MalformedTables("zero index out of range");
  if (add.size() != n) throw MalformedTables("add table is not |M| rows");
  for (const auto& row : add) {
    if (row.size() != n) throw MalformedTables("add table is not square");
    for (elem v : row)
      if (v >= n) throw MalformedTables("add table entry out of range");
  }

  std::vector<elem> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = elem(i);
  std::swap(perm[0], perm[zero]);

  CommMonoid M;
  M.name = std::move(name);
  M.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) M.labels_[perm[i]] = labels[i];
  std::vector<elem> ac(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ac[std::size_t(perm[a]) * n + perm[b]] = perm[add[a][b]];
  M.add_ = OpTable(n, std::move(ac));

  for (elem a = 0; a < n; ++a)
    if (M.add(0, a) != a || M.add(a, 0) != a)
      throw AxiomViolation("additive identity", {a},
                           "axiom 'additive identity' fails at " + M.labels_[a]);
  for (elem a = 0; a < n; ++a)
    for (elem b = elem(a); b < n; ++b)
      if (M.add(a, b) != M.add(b, a))
        throw AxiomViolation("additive commutativity", {a, b},
                             "axiom 'additive commutativity' fails at (" + M.labels_[a] + "," +
                                 M.labels_[b] + ")");
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (M.add(M.add(a, b), c) != M.add(a, M.add(b, c)))
          throw AxiomViolation("additive associativity", {a, b, c},
                               "axiom 'additive associativity' fails at (" + M.labels_[a] + "," +
                                   M.labels_[b] + "," + M.labels_[c] + ")");
  return M;
}

}  // namespace radx
