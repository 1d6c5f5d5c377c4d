// Regenerates the fixture gallery: finite groups with several gradings,
// their group algebras, derived braces and operators, and the action and
// splitting inputs used by the construct subcommands.  Output is canonical
// document bytes, so reruns are idempotent.

#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "hopfpi/document.hpp"

using namespace hopfpi;

namespace {

const Field kQ = Field::rationals();

Mat perm_mat(const std::vector<int>& perm, const Field& f) {
  const int d = static_cast<int>(perm.size());
  Mat m(d, d, f);
  for (int j = 0; j < d; ++j) m.at(perm[j], j) = Scalar::one(f);
  return m;
}

// Per-grade blocks of a grade-preserving element permutation.
std::vector<Mat> graded_permutation(const GroupHom& deg,
                                    const std::vector<int>& perm,
                                    const Field& f) {
  const FiniteGroup& gamma = deg.source();
  const int n = deg.target().size();
  std::vector<std::vector<int>> fiber(n);
  std::vector<int> pos(gamma.size());
  for (int g = 0; g < gamma.size(); ++g) {
    pos[g] = static_cast<int>(fiber[deg(g)].size());
    fiber[deg(g)].push_back(g);
  }
  std::vector<Mat> blocks;
  for (int a = 0; a < n; ++a) {
    const int d = static_cast<int>(fiber[a].size());
    Mat m(d, d, f);
    for (int j = 0; j < d; ++j) m.at(pos[perm[fiber[a][j]]], j) = Scalar::one(f);
    blocks.push_back(std::move(m));
  }
  return blocks;
}

// g |> h = g^-1 h g as triangle blocks on the group algebra of deg.  This
// orientation satisfies the composition rule x |> (y |> z) = (x_1 (x_2 |> y)) |> z,
// and its subadjacent product is the reversed one.
ActionBlocks conjugation_triangle(const GroupHom& deg, const Field& f) {
  const FiniteGroup& gamma = deg.source();
  const int n = deg.target().size();
  std::vector<std::vector<int>> fiber(n);
  std::vector<int> pos(gamma.size());
  for (int g = 0; g < gamma.size(); ++g) {
    pos[g] = static_cast<int>(fiber[deg(g)].size());
    fiber[deg(g)].push_back(g);
  }
  ActionBlocks act(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int da = static_cast<int>(fiber[a].size());
      const int db = static_cast<int>(fiber[b].size());
      StructureTensor st(db, da, db, f);
      for (int i = 0; i < da; ++i) {
        for (int j = 0; j < db; ++j) {
          int g = fiber[a][i], h = fiber[b][j];
          int out = gamma.mul(gamma.mul(gamma.inv(g), h), g);
          st.at(pos[out], i, j) = Scalar::one(f);
        }
      }
      act[a].push_back(std::move(st));
    }
  }
  return act;
}

struct Writer {
  std::filesystem::path dir;
  int count = 0;

  template <typename T>
  void put(const std::string& name, T value) {
    Document doc = make_document(std::move(value));
    save_document(doc, (dir / name).string());
    std::cout << name << "\n";
    ++count;
  }
};

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "gallery";
  std::filesystem::create_directories(dir);
  Writer w{dir};

  FiniteGroup z1 = FiniteGroup::trivial();
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  FiniteGroup v4 = FiniteGroup::klein4();
  FiniteGroup s3 = FiniteGroup::symmetric3();
  FiniteGroup d4 = FiniteGroup::dihedral4();
  FiniteGroup q8 = FiniteGroup::quaternion8();

  w.put("z1.group.json", z1);
  w.put("z2.group.json", z2);
  w.put("z4.group.json", z4);
  w.put("v4.group.json", v4);
  w.put("s3.group.json", s3);
  w.put("d4.group.json", d4);
  w.put("q8.group.json", q8);

  // One group algebra per (group, grading) pair.
  std::vector<std::pair<std::string, GroupHom>> gradings;
  auto add = [&](const std::string& name, GroupHom hom) {
    gradings.emplace_back(name, std::move(hom));
  };
  add("z1.trivial", GroupHom::trivial(z1));
  add("z2.trivial", GroupHom::trivial(z2));
  add("z2.identity", GroupHom::identity(z2));
  add("z4.trivial", GroupHom::trivial(z4));
  add("z4.identity", GroupHom::identity(z4));
  add("z4.mod2", GroupHom(z4, z2, {0, 1, 0, 1}));
  add("v4.trivial", GroupHom::trivial(v4));
  add("v4.identity", GroupHom::identity(v4));
  add("v4.proj1", GroupHom(v4, z2, {0, 0, 1, 1}));
  add("v4.proj2", GroupHom(v4, z2, {0, 1, 0, 1}));
  add("s3.trivial", GroupHom::trivial(s3));
  add("s3.sign", GroupHom(s3, z2, {0, 0, 0, 1, 1, 1}));
  add("s3.identity", GroupHom::identity(s3));
  add("d4.trivial", GroupHom::trivial(d4));
  add("d4.rotation", GroupHom(d4, z2, {0, 0, 0, 0, 1, 1, 1, 1}));
  add("d4.flip", GroupHom(d4, z2, {0, 1, 0, 1, 0, 1, 0, 1}));
  add("q8.trivial", GroupHom::trivial(q8));
  add("q8.central", GroupHom(q8, z2, {0, 0, 0, 0, 1, 1, 1, 1}));
  add("q8.modv4", GroupHom(q8, v4, {0, 0, 2, 2, 1, 1, 3, 3}));

  for (const auto& [name, hom] : gradings) {
    w.put(name + ".hopf.json", group_algebra(hom, kQ));
  }

  // Braces (both products agree, and the reversed circle product) for a
  // spread of abelian-graded algebras.
  for (const std::string base :
       {"z1.trivial", "z2.identity", "z4.mod2", "v4.trivial", "v4.proj2",
        "s3.trivial", "s3.sign", "d4.rotation", "q8.modv4"}) {
    for (const auto& [name, hom] : gradings) {
      if (name != base) continue;
      HopfPiAlgebra h = group_algebra(hom, kQ);
      w.put(base + ".trivial-brace.json", trivial_brace(h));
      w.put(base + ".op-brace.json", opposite_brace(h));
    }
  }

  GroupHom sign(s3, z2, {0, 0, 0, 1, 1, 1});
  HopfPiAlgebra s3_sign = group_algebra(sign, kQ);
  w.put("s3.sign.rb-antipode.json", antipode_rb(s3_sign));
  w.put("s3.sign.post-conj.json",
        PostHopfStructure{s3_sign, conjugation_triangle(sign, kQ)});
  w.put("s3.sign.op-mp.json", brace_to_matched_pair(opposite_brace(s3_sign)));

  // Splitting of k[V4] graded by the second coordinate: the unit-graded
  // factor is all of the identity component, the graded factor is the
  // second-coordinate copy of Z/2.
  FactorizationInput split;
  split.unit_factor = Mat::identity(2, kQ);
  Mat point(2, 1, kQ);
  point.at(0, 0) = Scalar::one(kQ);
  split.graded_factor = {point, point};
  w.put("v4.proj2.factorization.json", std::move(split));

  // k[Z2] acting on k[V4] by swapping the coordinates.
  const std::vector<int> swap_v4 = {0, 2, 1, 3};
  {
    ModuleAction ma;
    ma.acting_dims = {2};
    ma.target_dims = {4};
    StructureTensor st(4, 2, 4, kQ);
    for (int j = 0; j < 4; ++j) {
      st.at(j, 0, j) = Scalar::one(kQ);
      st.at(swap_v4[j], 1, j) = Scalar::one(kQ);
    }
    ma.blocks = {{std::move(st)}};
    w.put("z2-on-v4.module-action.json", std::move(ma));
  }
  {
    ModuleAction ma;
    ma.acting_dims = {1, 1};
    ma.target_dims = {4};
    StructureTensor id(4, 1, 4, kQ), sw(4, 1, 4, kQ);
    for (int j = 0; j < 4; ++j) {
      id.at(j, 0, j) = Scalar::one(kQ);
      sw.at(swap_v4[j], 0, j) = Scalar::one(kQ);
    }
    ma.blocks = {{std::move(id)}, {std::move(sw)}};
    w.put("z2-graded-on-v4.module-action.json", std::move(ma));
  }

  // Grade-preserving automorphism families: conjugation on sign-graded
  // k[S3] (for twisting) and the coordinate swap spread over Z2.
  w.put("s3.sign.twist-family.json",
        MapFamily{z2, graded_permutation(sign, inner_automorphism(s3, 3), kQ)});
  w.put("v4.swap-family.json",
        MapFamily{z2, {Mat::identity(4, kQ), perm_mat(swap_v4, kQ)}});

  std::cout << w.count << " documents in " << dir.string() << "\n";
  return 0;
}
