#include "gerbel/group.hpp"

#include <algorithm>
#include <array>

namespace gerbel {

Report check_group_table(const std::vector<std::vector<int>>& mul, int id) {
  Report report;
  const int n = static_cast<int>(mul.size());
  if (id < 0 || id >= n) {
    report.add("group", "identity index in range");
    return report;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n) {
      report.add("group row " + std::to_string(a), "mul table is total");
      return report;
    }
    for (int b = 0; b < n; ++b)
      if (mul[a][b] < 0 || mul[a][b] >= n) {
        report.add("group (" + std::to_string(a) + "," + std::to_string(b) + ")",
                   "mul value in range");
        return report;
      }
  }
  for (int a = 0; a < n; ++a) {
    if (mul[id][a] != a || mul[a][id] != a)
      report.add("group element " + std::to_string(a), "id*a = a*id = a");
    bool has_inv = false;
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == id && mul[b][a] == id) has_inv = true;
    if (!has_inv) report.add("group element " + std::to_string(a), "two-sided inverse exists");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          report.add("group (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")",
                     "(ab)c = a(bc)");
          return report;  // one associativity failure is enough
        }
  return report;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, int id, std::string name)
    : mul_(std::move(mul)), id_(id), name_(std::move(name)) {
  check_group_table(mul_, id_).require("FiniteGroup " + name_);
  const int n = order();
  inv_.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == id_ && mul_[b][a] == id_) inv_[a] = b;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, 0, "1"); }

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return FiniteGroup(std::move(mul), 0, "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Elements are the permutations of {0,1,2} in lexicographic order.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> q;
      for (int i = 0; i < 3; ++i) q[i] = perms[a][perms[b][i]];
      mul[a][b] = index(q);
    }
  return FiniteGroup(std::move(mul), 0, "S3");
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> mul(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      mul[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup(std::move(mul), a.id() * nb + b.id(), a.name() + "x" + b.name());
}

GroupHom::GroupHom(const FiniteGroup& domain, const FiniteGroup& codomain,
                   std::vector<int> table)
    : domain_(&domain), codomain_(&codomain), table_(std::move(table)) {
  Report report;
  if (static_cast<int>(table_.size()) != domain.order()) {
    report.add("hom", "table is total");
  } else {
    for (int x : table_)
      if (x < 0 || x >= codomain.order()) report.add("hom", "values in codomain");
    if (report.ok()) {
      for (int a = 0; a < domain.order(); ++a)
        for (int b = 0; b < domain.order(); ++b)
          if (table_[domain.mul(a, b)] != codomain.mul(table_[a], table_[b]))
            report.add("hom (" + std::to_string(a) + "," + std::to_string(b) + ")",
                       "f(ab) = f(a)f(b)");
    }
  }
  report.require("GroupHom " + domain.name() + " -> " + codomain.name());
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<int> table(g.order());
  for (int i = 0; i < g.order(); ++i) table[i] = i;
  return GroupHom(g, g, std::move(table));
}

FiniteGroup subgroup(const FiniteGroup& g, const std::vector<int>& elements,
                     std::string name) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = g.mul(elements[a], elements[b]);
      if (pos[p] < 0)
        throw Error("subgroup " + name + ": not closed under multiplication (element " +
                    std::to_string(p) + ")");
      mul[a][b] = pos[p];
    }
  if (pos[g.id()] < 0) throw Error("subgroup " + name + ": missing identity");
  return FiniteGroup(std::move(mul), pos[g.id()], std::move(name));
}

}  // namespace gerbel
