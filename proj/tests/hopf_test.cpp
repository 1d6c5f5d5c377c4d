#include <doctest.h>

#include "hopfpi/hopf.hpp"

using namespace hopfpi;

namespace {

const Field kQ = Field::rationals();

HopfPiAlgebra sign_graded_s3() {
  auto s3 = FiniteGroup::symmetric3();
  auto z2 = FiniteGroup::cyclic(2);
  return group_algebra(GroupHom(s3, z2, {0, 0, 0, 1, 1, 1}), kQ);
}

// Bialgebra of the monoid {1, x | x^2 = x}: no antipode exists.
HopfPiAlgebra idempotent_monoid_bialgebra() {
  auto pi = FiniteGroup::trivial();
  HopfPiAlgebra h{GradedSpace(pi, {2}), kQ, {}, Mat(), {}, {}, {}};
  StructureTensor t(2, 2, 2, kQ);
  t.at(0, 0, 0) = Scalar::one(kQ);
  t.at(1, 0, 1) = Scalar::one(kQ);
  t.at(1, 1, 0) = Scalar::one(kQ);
  t.at(1, 1, 1) = Scalar::one(kQ);
  h.mult = {{t}};
  h.unit = Mat(2, 1, kQ);
  h.unit.at(0, 0) = Scalar::one(kQ);
  Mat delta(4, 2, kQ);
  delta.at(0, 0) = Scalar::one(kQ);
  delta.at(3, 1) = Scalar::one(kQ);
  Mat eps(1, 2, kQ);
  eps.at(0, 0) = Scalar::one(kQ);
  eps.at(0, 1) = Scalar::one(kQ);
  h.comult = {delta};
  h.counit = {eps};
  h.antipode.shift = {0};
  h.antipode.blocks = {Mat::identity(2, kQ)};
  return h;
}

}  // namespace

TEST_CASE("group algebra satisfies every axiom") {
  auto h = sign_graded_s3();
  CHECK(h.dim(0) == 3);
  CHECK(h.dim(1) == 3);
  auto rep = check_hopf_pi_algebra(h);
  CHECK(rep.pass());
  CHECK(rep.failure_counts().empty());
  auto extra = check_antipode_identities(h);
  CHECK(extra.pass());
  CHECK(is_cocommutative(h));
  CHECK(extra.count_for(axioms::kAntipodeInvolutive) == 0);
}

TEST_CASE("group algebra over a prime field") {
  auto h = group_algebra(GroupHom::identity(FiniteGroup::quaternion8()),
                         Field::prime(3));
  CHECK(check_hopf_pi_algebra(h).pass());
  CHECK(check_antipode_identities(h).pass());
}

TEST_CASE("empty grade components are legal") {
  auto z2 = FiniteGroup::cyclic(2);
  auto z4 = FiniteGroup::cyclic(4);
  auto h = group_algebra(GroupHom(z2, z4, {0, 2}), kQ);
  CHECK(h.dim(1) == 0);
  CHECK(h.dim(3) == 0);
  CHECK(check_hopf_pi_algebra(h).pass());
  CHECK(check_antipode_identities(h).pass());
}

TEST_CASE("a planted comultiplication defect is caught") {
  auto h = group_algebra(GroupHom::trivial(FiniteGroup::cyclic(2)), kQ);
  // Delta(g) = g(x)g + g(x)1 stays counital on neither side and breaks
  // coassociativity by an added term.
  h.comult[0].at(1 * 2 + 0, 1) = Scalar::one(kQ);
  auto rep = check_hopf_pi_algebra(h);
  CHECK_FALSE(rep.pass());
  CHECK(rep.count_for(axioms::kCoassociativity) > 0);
}

TEST_CASE("iterated comult and mult chains") {
  auto h = group_algebra(GroupHom::trivial(FiniteGroup::cyclic(2)), kQ);
  Mat d3 = iterated_comult(h, 0, 3);
  CHECK(d3.rows() == 8);
  CHECK(d3.at(7, 1) == Scalar::one(kQ));  // g -> g(x)g(x)g
  CHECK(d3.at(0, 0) == Scalar::one(kQ));
  Mat chain = mult_chain(h, {0, 0, 0});
  CHECK(chain.rows() == 2);
  CHECK(chain.at(1, 7) == Scalar::one(kQ));  // g.g.g = g
  CHECK(chain.at(0, 3) == Scalar::one(kQ));  // 1.g.g = 1
  CHECK(iterated_comult(h, 0, 1) == Mat::identity(2, kQ));
}

TEST_CASE("morphism checks") {
  auto h = group_algebra(GroupHom::trivial(FiniteGroup::cyclic(2)), kQ);
  auto id = identity_graded_map(h.space, kQ);
  CHECK(check_hopf_morphism(id, h, h).pass());

  // Linearized constant map g -> 1 is a morphism.
  GradedLinearMap collapse;
  collapse.shift = {0};
  Mat c(2, 2, kQ);
  c.at(0, 0) = Scalar::one(kQ);
  c.at(0, 1) = Scalar::one(kQ);
  collapse.blocks = {c};
  CHECK(check_hopf_morphism(collapse, h, h).pass());

  // g -> 1 + g is not a coalgebra map.
  GradedLinearMap bad = id;
  bad.blocks[0].at(0, 1) = Scalar::one(kQ);
  auto rep = check_hopf_morphism(bad, h, h);
  CHECK_FALSE(rep.pass());
  CHECK(rep.count_for("morphism-comult") > 0);
}

TEST_CASE("convolution inverse in an endomorphism algebra") {
  auto h = group_algebra(GroupHom::trivial(FiniteGroup::cyclic(2)), kQ);
  auto alg = end_algebra_mult(2, kQ);
  auto unit = end_algebra_unit(2, kQ);

  // 1 -> id, g -> swap: pointwise invertible, and each value is its own
  // inverse, so the convolution inverse equals the map itself.
  Mat f(4, 2, kQ);
  f.at(0, 0) = Scalar::one(kQ);
  f.at(3, 0) = Scalar::one(kQ);
  f.at(1, 1) = Scalar::one(kQ);
  f.at(2, 1) = Scalar::one(kQ);
  auto res = convolution_inverse(h.comult[0], h.counit[0], alg, unit, f);
  CHECK(res.status == ConvolutionResult::Status::ok);
  CHECK(res.nullspace_dim == 0);
  CHECK(res.inverse == f);

  // g -> a singular matrix: no convolution inverse.
  Mat g(4, 2, kQ);
  g.at(0, 0) = Scalar::one(kQ);
  g.at(3, 0) = Scalar::one(kQ);
  g.at(0, 1) = Scalar::one(kQ);
  auto none = convolution_inverse(h.comult[0], h.counit[0], alg, unit, g);
  CHECK(none.status == ConvolutionResult::Status::no_solution);
}

TEST_CASE("antipode solving") {
  auto h = sign_graded_s3();
  auto sol = solve_antipode(h);
  REQUIRE(sol.status == AntipodeSolveResult::Status::ok);
  CHECK(sol.antipode == h.antipode);

  CHECK(solve_antipode(idempotent_monoid_bialgebra()).status ==
        AntipodeSolveResult::Status::no_solution);
}

TEST_CASE("shape validation rejects mismatched blocks") {
  auto h = sign_graded_s3();
  h.counit[1] = Mat(1, 2, kQ);
  CHECK_THROWS_AS(validate_shapes(h), InputError);
}
