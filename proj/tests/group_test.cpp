#include <doctest.h>

#include "hopfpi/group.hpp"

using namespace hopfpi;

TEST_CASE("table validation") {
  // Broken associativity: cyclic table with one entry swapped.
  auto t = FiniteGroup::cyclic(3).table();
  std::swap(t[1][1], t[1][2]);
  CHECK_THROWS_AS(FiniteGroup({"0", "1", "2"}, t), InputError);
  // Non-square.
  CHECK_THROWS_AS(FiniteGroup({"a"}, {{0, 0}}), InputError);
  // Out-of-range entry.
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 1}, {1, 5}}), InputError);
  // Duplicate names.
  CHECK_THROWS_AS(FiniteGroup({"a", "a"}, {{0, 1}, {1, 0}}), InputError);
}

TEST_CASE("builtin groups") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.size() == 4);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.is_abelian());
  CHECK(z4.index_of("3") == 3);
  CHECK_THROWS_AS(z4.index_of("4"), InputError);

  auto s3 = FiniteGroup::symmetric3();
  CHECK(s3.size() == 6);
  CHECK_FALSE(s3.is_abelian());
  // Even permutations occupy the first three slots.
  int c3 = s3.index_of("(123)");
  CHECK(c3 < 3);
  CHECK(s3.mul(c3, c3) == s3.index_of("(132)"));
  CHECK(s3.inv(s3.index_of("(12)")) == s3.index_of("(12)"));

  auto d4 = FiniteGroup::dihedral4();
  int r = d4.index_of("r"), s = d4.index_of("s");
  CHECK(d4.mul(d4.mul(s, r), s) == d4.inv(r));

  auto q8 = FiniteGroup::quaternion8();
  int i = q8.index_of("i"), j = q8.index_of("j");
  CHECK(q8.mul(i, j) == q8.index_of("k"));
  CHECK(q8.mul(j, i) == q8.index_of("-k"));
  CHECK(q8.mul(i, i) == q8.index_of("-1"));

  auto v4 = FiniteGroup::klein4();
  CHECK(v4.size() == 4);
  for (int g = 0; g < 4; ++g) CHECK(v4.inv(g) == g);
}

TEST_CASE("direct product ordering") {
  auto p = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                       FiniteGroup::cyclic(3));
  CHECK(p.size() == 6);
  CHECK(p.name(1 * 3 + 2) == "(1,2)");
  CHECK(p.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);
}

TEST_CASE("homomorphisms") {
  auto s3 = FiniteGroup::symmetric3();
  auto z2 = FiniteGroup::cyclic(2);
  std::vector<int> sign{0, 0, 0, 1, 1, 1};
  CHECK(is_group_homomorphism(s3, z2, sign));
  GroupHom h(s3, z2, sign);
  CHECK(h(s3.index_of("(12)")) == 1);

  std::vector<int> bad{0, 1, 0, 1, 1, 1};
  CHECK_FALSE(is_group_homomorphism(s3, z2, bad));
  CHECK_THROWS_AS(GroupHom(s3, z2, bad), InputError);

  auto id = GroupHom::identity(s3);
  CHECK(id(2) == 2);
  auto tr = GroupHom::trivial(s3);
  CHECK(tr.target().size() == 1);
}

TEST_CASE("inner automorphisms") {
  auto s3 = FiniteGroup::symmetric3();
  auto conj = inner_automorphism(s3, s3.index_of("(12)"));
  CHECK(conj[s3.index_of("(123)")] == s3.index_of("(132)"));
  CHECK(is_group_homomorphism(s3, s3, conj));
}
