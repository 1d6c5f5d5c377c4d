#pragma once

#include <string>
#include <vector>

#include "hopfpi/scalar.hpp"

namespace hopfpi {

// Finite group given by a full multiplication table over indexed elements.
// Construction validates the table exhaustively (closure, associativity,
// identity, inverses); sizes stay small enough for the cubic sweep.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names,
              std::vector<std::vector<int>> table);

  int size() const { return static_cast<int>(table_.size()); }
  int mul(int i, int j) const { return table_[i][j]; }
  int inv(int i) const { return inverse_[i]; }
  int identity() const { return identity_; }
  bool is_abelian() const { return abelian_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  int index_of(const std::string& name) const;  // InputError when absent

  bool operator==(const FiniteGroup& o) const {
    return names_ == o.names_ && table_ == o.table_;
  }

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);        // names "0".."n-1"
  static FiniteGroup klein4();             // cyclic(2) x cyclic(2)
  static FiniteGroup symmetric3();         // even elements first
  static FiniteGroup dihedral4();          // r^4 = s^2 = e, s r s = r^-1
  static FiniteGroup quaternion8();
  // Lexicographic element order with the left factor major:
  // index(a, b) = a*|B| + b, name "(a,b)".
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  bool abelian_ = true;
};

// Verified group homomorphism source -> target, images per element index.
class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> images);

  static GroupHom identity(const FiniteGroup& g);
  static GroupHom trivial(const FiniteGroup& g);  // everything to the point

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  int operator()(int g) const { return images_[g]; }
  const std::vector<int>& images() const { return images_; }

 private:
  FiniteGroup source_, target_;
  std::vector<int> images_;
};

bool is_group_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                           const std::vector<int>& images);

// g -> t g t^-1 as an element permutation.
std::vector<int> inner_automorphism(const FiniteGroup& g, int t);

}  // namespace hopfpi
