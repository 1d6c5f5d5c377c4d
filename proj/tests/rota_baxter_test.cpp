#include <doctest.h>

#include <algorithm>

#include "hopfpi/rota_baxter.hpp"

using namespace hopfpi;

namespace {

const Field kQ = Field::rationals();

GroupHom sign_hom() {
  return GroupHom(FiniteGroup::symmetric3(), FiniteGroup::cyclic(2),
                  {0, 0, 0, 1, 1, 1});
}

HopfPiAlgebra sign_graded_s3() { return group_algebra(sign_hom(), kQ); }

GroupHom proj2_hom() {
  return GroupHom(FiniteGroup::klein4(), FiniteGroup::cyclic(2), {0, 1, 0, 1});
}

// Per-grade permutation blocks on a group algebra from a grade-preserving
// element permutation.
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
    for (int j = 0; j < d; ++j) {
      m.at(pos[perm[fiber[a][j]]], j) = Scalar::one(f);
    }
    blocks.push_back(std::move(m));
  }
  return blocks;
}

Mat basis_column(int d, int i, const Field& f) {
  Mat m(d, 1, f);
  m.at(i, 0) = Scalar::one(f);
  return m;
}

}  // namespace

TEST_CASE("the antipode passes the operator sweep") {
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    auto rb = antipode_rb(group_algebra(sign_hom(), f));
    auto rep = check_rb(rb);
    CHECK(rep.pass());
    CHECK(rep.count_for(axioms::kRbLaw) == 0);
  }
}

TEST_CASE("the law holds over a non-abelian grading group") {
  auto s3 = FiniteGroup::symmetric3();
  auto rb = antipode_rb(group_algebra(GroupHom::identity(s3), kQ));
  CHECK(check_rb(rb).pass());
  // The deformed product itself is only graded when grades commute.
  CHECK_THROWS_AS(descendent_hopf(rb), GateError);
}

TEST_CASE("the antipode's deformed structure is the opposite product") {
  auto h = sign_graded_s3();
  auto rb = antipode_rb(h);
  auto hb = descendent_hopf(rb);
  auto op = opposite_brace(h);
  CHECK(hb.mult == op.circle_mult);
  CHECK(hb.antipode == op.circle_antipode);
  CHECK(hb.unit == h.unit);
  CHECK(check_descendent(rb, hb).pass());
  auto b = brace_from_rb(rb);
  CHECK(b == op);
  CHECK(check_brace(b).pass());
}

TEST_CASE("descendent consistency detects a corrupted derived antipode") {
  auto rb = antipode_rb(sign_graded_s3());
  auto hb = descendent_hopf(rb);
  Mat& t = hb.antipode.blocks[1];
  t.at(0, 0) = t.at(0, 0) + Scalar::one(kQ);
  auto rep = check_descendent(rb, hb);
  CHECK(!rep.pass());
  CHECK(rep.count_for(axioms::kRbPairing) > 0);
  CHECK(rep.count_for(axioms::kRbAntipodeCompat) > 0);
}

TEST_CASE("twisting by a conjugation fixes the antipode operator") {
  auto deg = sign_hom();
  auto rb = antipode_rb(group_algebra(deg, kQ));
  auto phi = graded_permutation(deg, inner_automorphism(deg.source(), 3), kQ);
  CHECK(twist_rb(rb, phi) == rb);

  // Swapping two even basis vectors moves the unit: not a Hopf morphism.
  std::vector<Mat> bad = {Mat::identity(3, kQ), Mat::identity(3, kQ)};
  bad[0].at(0, 0) = Scalar::zero(kQ);
  bad[0].at(1, 1) = Scalar::zero(kQ);
  bad[0].at(1, 0) = Scalar::one(kQ);
  bad[0].at(0, 1) = Scalar::one(kQ);
  CHECK_THROWS_AS(twist_rb(rb, bad), GateError);
}

TEST_CASE("spreading across automorphisms that ignore the operator") {
  auto v4 = FiniteGroup::klein4();
  auto deg = GroupHom::trivial(v4);
  // (a,b) -> (b,0) as an image table.
  auto rb0 = linearize_group_rb(deg, kQ, {0, 2, 0, 2});
  CHECK(check_rb(rb0).pass());

  Mat swap(4, 4, kQ);  // (a,b) -> (b,a)
  const std::vector<int> sigma = {0, 2, 1, 3};
  for (int j = 0; j < 4; ++j) swap.at(sigma[j], j) = Scalar::one(kQ);
  CHECK(swap * rb0.b.blocks[0] != rb0.b.blocks[0] * swap);

  auto c2 = FiniteGroup::cyclic(2);
  auto spread = aut_indexed_rb(rb0, c2, {Mat::identity(4, kQ), swap});
  CHECK(check_rb(spread).pass());
  CHECK(spread.b.blocks[1] != spread.b.blocks[0]);
  CHECK(spread.hopf.comult[1] == spread.hopf.comult[0]);

  // A unit-moving block is rejected even though the family is multiplicative.
  Mat q(4, 4, kQ);
  q.at(1, 0) = Scalar::one(kQ);
  q.at(0, 1) = Scalar::one(kQ);
  q.at(2, 2) = Scalar::one(kQ);
  q.at(3, 3) = Scalar::one(kQ);
  CHECK_THROWS_AS(aut_indexed_rb(rb0, c2, {Mat::identity(4, kQ), q}),
                  GateError);
  CHECK_THROWS_AS(aut_indexed_rb(antipode_rb(sign_graded_s3()), c2,
                                 {Mat::identity(3, kQ), Mat::identity(3, kQ)}),
                  InputError);
}

TEST_CASE("factorization of a coordinate splitting") {
  auto h = group_algebra(proj2_hom(), kQ);
  Mat g = Mat::identity(2, kQ);  // all of the even component
  std::vector<Mat> k = {basis_column(2, 0, kQ), basis_column(2, 0, kQ)};
  auto rb = factorization_rb(h, g, k);
  CHECK(check_rb(rb).pass());

  Mat expected(2, 2, kQ);  // both basis vectors collapse onto the k-part
  expected.at(0, 0) = Scalar::one(kQ);
  expected.at(0, 1) = Scalar::one(kQ);
  CHECK(rb.b.blocks[0] == expected);
  CHECK(rb.b.blocks[1] == expected);

  // Degenerate splitting: the scalars times everything gives back the
  // antipode.
  auto rb2 = factorization_rb(h, h.unit,
                              {Mat::identity(2, kQ), Mat::identity(2, kQ)});
  CHECK(rb2.b == h.antipode);
  CHECK(rb2 == antipode_rb(h));
}

TEST_CASE("factorization of the rotation splitting") {
  auto h = sign_graded_s3();
  Mat g = Mat::identity(3, kQ);  // the rotation subalgebra fills grade 0
  std::vector<Mat> k = {basis_column(3, 0, kQ), basis_column(3, 0, kQ)};
  auto rb = factorization_rb(h, g, k);
  CHECK(check_rb(rb).pass());
  CHECK(rb.b != h.antipode);
  // Every odd basis vector lands on the chosen reflection.
  Mat expected(3, 3, kQ);
  for (int j = 0; j < 3; ++j) expected.at(0, j) = Scalar::one(kQ);
  CHECK(rb.b.blocks[1] == expected);
}

TEST_CASE("factorization gates") {
  auto h = group_algebra(proj2_hom(), kQ);
  // Factor dimensions overfill the grade.
  CHECK_THROWS_AS(factorization_rb(h, Mat::identity(2, kQ),
                                   {Mat::identity(2, kQ), Mat::identity(2, kQ)}),
                  GateError);
  // A non-unital line is not a subalgebra.
  CHECK_THROWS_AS(factorization_rb(h, basis_column(2, 1, kQ),
                                   {basis_column(2, 0, kQ), basis_column(2, 0, kQ)}),
                  GateError);
  // The graded factor must contain the unit.
  CHECK_THROWS_AS(factorization_rb(h, Mat::identity(2, kQ),
                                   {basis_column(2, 1, kQ), basis_column(2, 0, kQ)}),
                  GateError);
}

TEST_CASE("set-level operators on the Klein group") {
  auto deg = GroupHom::trivial(FiniteGroup::klein4());
  auto res = enumerate_group_rb(deg);
  auto oracle = enumerate_group_rb(deg, true);
  CHECK(res == oracle);
  CHECK(res.size() == 16);
  for (const auto& img : res) {
    CHECK(img[0] == 0);  // the unit's image is forced, not assumed
    CHECK(check_rb(linearize_group_rb(deg, kQ, img)).pass());
  }
  CHECK_THROWS_AS(enumerate_group_rb(deg, false, 100), InputError);
}

TEST_CASE("set-level operators on S3 match the exhaustive filter") {
  auto s3 = FiniteGroup::symmetric3();
  auto deg = GroupHom::trivial(s3);
  auto res = enumerate_group_rb(deg);
  auto oracle = enumerate_group_rb(deg, true);
  CHECK(res == oracle);
  CHECK(!res.empty());

  // The solution set is stable under conjugating the operator by an inner
  // automorphism.
  auto conj = inner_automorphism(s3, 3);
  std::vector<std::vector<int>> twisted;
  for (const auto& img : res) {
    std::vector<int> t(img.size());
    for (int g = 0; g < static_cast<int>(img.size()); ++g) {
      t[g] = conj[img[conj[g]]];
    }
    twisted.push_back(std::move(t));
  }
  std::sort(twisted.begin(), twisted.end());
  CHECK(twisted == res);
}

TEST_CASE("set-level operators respect a sign grading") {
  auto deg = sign_hom();
  auto res = enumerate_group_rb(deg);
  CHECK(res == enumerate_group_rb(deg, true));
  std::vector<int> inverse_map = {0, 2, 1, 3, 4, 5};
  CHECK(std::find(res.begin(), res.end(), inverse_map) != res.end());
  // The rotation-splitting operator shows up as the table sending every
  // rotation to the unit and every reflection to the chosen one.
  std::vector<int> splitting = {0, 0, 0, 3, 3, 3};
  CHECK(std::find(res.begin(), res.end(), splitting) != res.end());
  for (const auto& img : res) {
    CHECK(check_rb(linearize_group_rb(deg, kQ, img)).pass());
  }
}

TEST_CASE("a law-only corruption is caught by name") {
  // Keep the antipode on the even part, swap two reflections on the odd
  // part: still a graded coalgebra map, no longer multiplicative.
  auto rb = linearize_group_rb(sign_hom(), kQ, {0, 2, 1, 4, 3, 5});
  auto rep = check_rb(rb);
  CHECK(!rep.pass());
  CHECK(rep.count_for(axioms::kRbLaw) > 0);
  CHECK(rep.count_for(axioms::kRbComult) == 0);
  CHECK(rep.count_for(axioms::kRbCounit) == 0);
}

TEST_CASE("a scaled block is caught by the coalgebra sweeps") {
  auto rb = antipode_rb(sign_graded_s3());
  Mat& blk = rb.b.blocks[1];
  blk.at(0, 0) = blk.at(0, 0) + Scalar::one(kQ);
  auto rep = check_rb(rb);
  CHECK(!rep.pass());
  CHECK(rep.count_for(axioms::kRbComult) > 0);
  CHECK(rep.count_for(axioms::kRbCounit) > 0);
}

TEST_CASE("operator validation") {
  auto c4 = FiniteGroup::cyclic(4);
  auto h = group_algebra(GroupHom::identity(c4), kQ);
  auto rb = antipode_rb(h);

  auto bad_shift = rb;
  bad_shift.b.shift = identity_shift(c4);
  CHECK_THROWS_AS(check_rb(bad_shift), InputError);

  auto bad_shape = rb;
  bad_shape.b.blocks[1] = Mat::identity(2, kQ);
  CHECK_THROWS_AS(check_rb(bad_shape), InputError);

  // A lopsided comultiplication trips the cocommutativity gate.
  auto lopsided = sign_graded_s3();
  Mat delta(9, 3, kQ);
  delta.at(1, 0) = Scalar::one(kQ);
  delta.at(4, 1) = Scalar::one(kQ);
  delta.at(8, 2) = Scalar::one(kQ);
  lopsided.comult[0] = delta;
  CHECK_THROWS_AS(check_rb(RotaBaxterOperator{lopsided, lopsided.antipode}),
                  GateError);

  CHECK_THROWS_AS(linearize_group_rb(sign_hom(), kQ, {0, 2, 1, 4, 3}),
                  InputError);
  CHECK_THROWS_AS(linearize_group_rb(sign_hom(), kQ, {0, 2, 1, 4, 3, 0}),
                  InputError);
}

TEST_CASE("the prime-field flow matches the rational one") {
  auto f7 = Field::prime(7);
  auto h = group_algebra(sign_hom(), f7);
  auto rb = antipode_rb(h);
  CHECK(check_rb(rb).pass());
  auto hb = descendent_hopf(rb);
  CHECK(check_descendent(rb, hb).pass());
  CHECK(brace_from_rb(rb) == opposite_brace(h));
}
