#pragma once

#include "hopfpi/brace.hpp"

namespace hopfpi {

// A Hopf structure together with a family of coalgebra maps
//   triangle[a][b]: H_a (x) H_b -> H_b,
// written x |> y, that distributes over products and composes through
//   x |> (y |> z) = (x_1 (x_2 |> y)) |> z.
// Each curried map theta_{a,b}: H_a -> End(H_b), x -> (y -> x |> y), must
// be convolution invertible; its inverse psi drives the antipode of the
// subadjacent Hopf structure below.
struct PostHopfStructure {
  HopfPiAlgebra hopf;
  ActionBlocks triangle;

  const FiniteGroup& group() const { return hopf.group(); }
  int dim(int a) const { return hopf.dim(a); }

  bool operator==(const PostHopfStructure& o) const = default;
};

namespace axioms {
inline constexpr const char* kTriangleComult = "triangle-comult";
inline constexpr const char* kTriangleCounit = "triangle-counit";
inline constexpr const char* kTriangleOnMult = "triangle-on-mult";
inline constexpr const char* kTriangleCompose = "triangle-compose";
inline constexpr const char* kTriangleInvertible = "triangle-invertible";
inline constexpr const char* kTriangleOnUnit = "triangle-on-unit";
inline constexpr const char* kTriangleUnitActs = "triangle-unit-acts";
inline constexpr const char* kTriangleAntipode = "triangle-antipode";
}  // namespace axioms

// Definition sweep: the carrier's Hopf axioms (prefixed carrier:), the
// coalgebra-map laws of every triangle block, distribution over products,
// the composition rule, and convolution invertibility of every theta.
CheckReport check_post_hopf(const PostHopfStructure& ph);

// Consequences of the definition, kept separate so they can be watched
// holding on their own: x |> 1 = eps(x) 1, 1 |> y = y, and
// S(x |> y) = x |> S(y).
CheckReport check_post_hopf_derived(const PostHopfStructure& ph);

// The convolution inverse psi_{a,b} of theta_{a,b}, packed the same way as
// a hom into End(H_b): column x holds the matrix psi(e_x) with entry (i,j)
// at row i*dim(b)+j.  GateError when no two-sided inverse exists.
Mat psi_block(const PostHopfStructure& ph, int a, int b);

// Subadjacent Hopf structure on the same coalgebra: product
// x * y = x_1 . (x_2 |> y), shared unit, antipode T(x) = psi(x_1)(S(x_2)).
// Needs a valid cocommutative structure (GateError otherwise).
HopfPiAlgebra subadjacent(const PostHopfStructure& ph);

// The identity-grade component as a Hopf structure over the trivial group.
HopfPiAlgebra unit_part(const HopfPiAlgebra& h);

// The carrier and its subadjacent structure form a brace (dot = carrier,
// circle = subadjacent).
HopfPiBrace brace_from_post_hopf(const PostHopfStructure& ph);

// Conversely a cocommutative brace carries x |> y = S(x_1) . (x_2 o y) on
// its dot structure.  Gated on the brace laws (GateError).
PostHopfStructure post_hopf_from_brace(const HopfPiBrace& b);

// The unit part is a modulelike bialgebra over the subadjacent structure
// via the blocks triangle[a][e]; this is the resulting smash brace, graded
// over group x trivial with component at (a, e) equal to
// unit part (x) subadjacent_a.
HopfPiBrace smash_from_post_hopf(const PostHopfStructure& ph);

}  // namespace hopfpi
