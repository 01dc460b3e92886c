#pragma once

#include <string>
#include <vector>

#include "gerbel/report.hpp"

namespace gerbel {

/// Finite group given by its full multiplication table over indices
/// 0..order-1. Associativity, identity and inverses are verified at
/// construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> mul, int id, std::string name = "G");

  /// Generate the group from a multiplication table fragment: closure is the
  /// caller's responsibility; this is just a convenience for the trivial and
  /// cyclic cases used everywhere in tests.
  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  /// Direct product, elements indexed a * |B| + b.
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return static_cast<int>(mul_.size()); }
  int id() const { return id_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& name() const { return name_; }

  bool operator==(const FiniteGroup& other) const {
    return mul_ == other.mul_ && id_ == other.id_;
  }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int id_;
  std::string name_;
};

/// Total map between finite groups, stored as a lookup table. The
/// homomorphism property is verified at construction.
class GroupHom {
 public:
  GroupHom(const FiniteGroup& domain, const FiniteGroup& codomain,
           std::vector<int> table);

  static GroupHom identity(const FiniteGroup& g);

  int operator()(int x) const { return table_[x]; }
  const FiniteGroup& domain() const { return *domain_; }
  const FiniteGroup& codomain() const { return *codomain_; }
  const std::vector<int>& table() const { return table_; }

 private:
  const FiniteGroup* domain_;
  const FiniteGroup* codomain_;
  std::vector<int> table_;
};

/// Verifies the group axioms on a raw table; used by the FiniteGroup
/// constructor and exposed for report-style checking of input files.
Report check_group_table(const std::vector<std::vector<int>>& mul, int id);

/// Subgroup of g spanned by the listed elements (closure check, no
/// generation); returns the induced FiniteGroup together with the embedding
/// into g via the elements list itself.
FiniteGroup subgroup(const FiniteGroup& g, const std::vector<int>& elements,
                     std::string name = "H");

}  // namespace gerbel
