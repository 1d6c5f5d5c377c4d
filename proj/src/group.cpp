#include "hopfpi/group.hpp"

#include <array>

namespace hopfpi {

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw InputError("group table is empty");
  if (static_cast<int>(names_.size()) != n) {
    throw InputError("group has " + std::to_string(table_.size()) +
                     " rows but " + std::to_string(names_.size()) + " names");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j]) {
        throw InputError("duplicate group element name " + names_[i]);
      }
    }
  }
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError("group table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) throw InputError("group table entry out of range");
    }
  }
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) {
      ok = table_[e][g] == g && table_[g][e] == g;
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw InputError("group table has no identity");
  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] < 0) {
      throw InputError("group element " + names_[g] + " has no inverse");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw InputError("group table is not associative at (" + names_[a] +
                           "," + names_[b] + "," + names_[c] + ")");
        }
      }
  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = 0; b < n && abelian_; ++b) abelian_ = table_[a][b] == table_[b][a];
}

int FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InputError("no group element named '" + name + "'");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::klein4() {
  return direct_product(cyclic(2), cyclic(2));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {1,2,3}, composition (fg)(x) = f(g(x)).
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 2, 0},  // (123): 1->2, 2->3, 3->1
      {2, 0, 1},  // (132)
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
  }};
  std::vector<std::string> names = {"e", "(123)", "(132)", "(12)", "(13)", "(23)"};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int f = 0; f < 6; ++f)
    for (int g = 0; g < 6; ++g) {
      std::array<int, 3> fg;
      for (int x = 0; x < 3; ++x) fg[x] = perms[f][perms[g][x]];
      for (int h = 0; h < 6; ++h) {
        if (perms[h] == fg) {
          table[f][g] = h;
          break;
        }
      }
    }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::dihedral4() {
  // Element 4*i + k is s^i r^k; (s^i r^k)(s^j r^l) = s^(i+j) r^(k(-1)^j + l).
  std::vector<std::string> names = {"e",  "r",  "r2",  "r3",
                                    "s", "sr", "sr2", "sr3"};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  auto id = [](int i, int k) { return 4 * i + ((k % 4) + 4) % 4; };
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 4; ++l) {
          int kk = j ? -k : k;
          table[id(i, k)][id(j, l)] = id((i + j) % 2, kk + l);
        }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Order: 1, -1, i, -i, j, -j, k, -k.
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto enc = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  // Basis units 0=1, 1=i, 2=j, 3=k with ij=k, jk=i, ki=j.
  auto unit_mul = [](int a, int b, int& sign) {
    sign = 1;
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -1;
      return 0;
    }
    // cyclic: (1,2)->3, (2,3)->1, (3,1)->2; reversed order flips the sign
    static const int cyc[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    int r = cyc[a][b];
    bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    sign = forward ? 1 : -1;
    return r;
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2 ? -1 : 1;
      int ub = b / 2, sb = b % 2 ? -1 : 1;
      int s;
      int u = unit_mul(ua, ub, s);
      table[a][b] = enc(u, sa * sb * s);
    }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const int na = a.size(), nb = b.size();
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(na) * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          table[i1 * nb + j1][i2 * nb + j2] =
              a.mul(i1, i2) * nb + b.mul(j1, j2);
        }
  return FiniteGroup(std::move(names), std::move(table));
}

bool is_group_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                           const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != source.size()) return false;
  for (int v : images) {
    if (v < 0 || v >= target.size()) return false;
  }
  for (int a = 0; a < source.size(); ++a)
    for (int b = 0; b < source.size(); ++b) {
      if (images[source.mul(a, b)] != target.mul(images[a], images[b])) {
        return false;
      }
    }
  return true;
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target,
                   std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {
  if (!is_group_homomorphism(source_, target_, images_)) {
    throw InputError("degree map is not a group homomorphism");
  }
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<int> images(g.size());
  for (int i = 0; i < g.size(); ++i) images[i] = i;
  return GroupHom(g, g, std::move(images));
}

GroupHom GroupHom::trivial(const FiniteGroup& g) {
  return GroupHom(g, FiniteGroup::trivial(), std::vector<int>(g.size(), 0));
}

std::vector<int> inner_automorphism(const FiniteGroup& g, int t) {
  std::vector<int> images(g.size());
  for (int x = 0; x < g.size(); ++x) images[x] = g.mul(g.mul(t, x), g.inv(t));
  return images;
}

}  // namespace hopfpi
