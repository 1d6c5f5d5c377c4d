#include <doctest.h>

#include "hopfpi/pipeline.hpp"

using namespace hopfpi;

namespace {

// Deterministic filler with mixed signs and some zeros.
Mat filled(int rows, int cols, const Field& f, int seed) {
  Mat m(rows, cols, f);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int v = ((i * 7 + j * 3 + seed) % 11) - 4;
      m.at(i, j) = Scalar::from_int(f.is_rational() ? v : (v % 5 + 5) % 5, f);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("streamed stages match the dense product") {
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    Mat a = filled(3, 6, f, 1);
    Mat b = filled(2, 2, f, 2);
    Mat c = filled(4, 3, f, 3);

    CHECK(Pipeline(6, f).blocks({b, c}).to_mat() == kron(b, c));
    CHECK(Pipeline(6, f).blocks({b, Pipeline::Factor::identity(3)}).to_mat() ==
          kron(b, Mat::identity(3, f)));
    CHECK(Pipeline(6, f).then(a).to_mat() == a);

    Mat perm = tensor_factor_permutation({2, 3, 2}, {2, 0, 1}, f);
    CHECK(Pipeline(12, f).permute({2, 3, 2}, {2, 0, 1}).to_mat() == perm);
  }
}

TEST_CASE("a multi stage pipeline equals the composite matrix") {
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    Mat delta = filled(4, 2, f, 5);   // 2 -> 2x2
    Mat g = filled(3, 2, f, 6);
    Mat h = filled(2, 2, f, 7);
    Mat post = filled(2, 6, f, 8);

    Mat streamed = Pipeline(2, f)
                       .then(delta)                 // modes (2, 2)
                       .permute({2, 2}, {1, 0})     // swap
                       .blocks({g, h})              // modes (3, 2)
                       .then(post)
                       .to_mat();
    Mat dense = post * kron(g, h) *
                tensor_factor_permutation({2, 2}, {1, 0}, f) * delta;
    CHECK(streamed == dense);
  }
}

TEST_CASE("factors may span several adjacent modes") {
  const Field f = Field::rationals();
  // m consumes two modes of sizes 2 and 3 at once.
  Mat m = filled(4, 6, f, 9);
  Mat lhs = Pipeline(12, f)
                .permute({2, 3, 2}, {0, 2, 1})
                .blocks({m, Pipeline::Factor::identity(2)})
                .to_mat();
  Mat rhs = kron(m, Mat::identity(2, f)) *
            tensor_factor_permutation({2, 3, 2}, {0, 2, 1}, f);
  CHECK(lhs == rhs);

  // Interior factor with identities on both sides.
  Mat s = filled(3, 3, f, 10);
  CHECK(Pipeline(12, f)
            .blocks({Pipeline::Factor::identity(2), s,
                     Pipeline::Factor::identity(2)})
            .to_mat() ==
        kron({Mat::identity(2, f), s, Mat::identity(2, f)}));
}

TEST_CASE("an empty pipeline is the identity") {
  const Field f = Field::prime(3);
  CHECK(Pipeline(4, f).to_mat() == Mat::identity(4, f));
  CHECK(Pipeline(0, f).to_mat() == Mat(0, 0, f));
}

TEST_CASE("pipeline shape and field validation") {
  const Field f = Field::rationals();
  CHECK_THROWS_AS(Pipeline(3, f).then(filled(2, 2, f, 0)), InputError);
  CHECK_THROWS_AS(Pipeline(3, f).blocks({filled(2, 2, f, 0)}), InputError);
  CHECK_THROWS_AS(Pipeline(4, f).blocks({}), InputError);
  CHECK_THROWS_AS(Pipeline(4, f).permute({2, 3}, {0, 1}), InputError);
  CHECK_THROWS_AS(Pipeline(4, f).permute({2, 2}, {0, 0}), InputError);
  CHECK_THROWS_AS(Pipeline(4, f).permute({2, 2}, {0}), InputError);
  CHECK_THROWS_AS(Pipeline(2, f).then(filled(2, 2, Field::prime(5), 0)),
                  InputError);
  CHECK_THROWS_AS(Pipeline(2, f).blocks({filled(2, 2, Field::prime(5), 0)}),
                  InputError);
}
