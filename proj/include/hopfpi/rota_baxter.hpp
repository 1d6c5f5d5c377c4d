#pragma once

#include <cstdint>
#include <vector>

#include "hopfpi/brace.hpp"
#include "hopfpi/hopf.hpp"

namespace hopfpi {

// Family of coalgebra maps B_a: H_a -> H_{a^-1} on a cocommutative carrier,
// multiplicative in the twisted sense
//   B(a) B(b) = B(a_1 B(a_2) b S(B(a_3))).
// Both sides land in grade (ba)^-1, so the law is graded over any grading
// group; only the deformed product below needs an abelian one.
struct RotaBaxterOperator {
  HopfPiAlgebra hopf;
  GradedLinearMap b;  // shift a -> a^-1

  const FiniteGroup& group() const { return hopf.group(); }
  int dim(int a) const { return hopf.dim(a); }

  bool operator==(const RotaBaxterOperator& o) const = default;
};

namespace axioms {
inline constexpr const char* kRbComult = "rb-comult";
inline constexpr const char* kRbCounit = "rb-counit";
inline constexpr const char* kRbLaw = "rb-law";
inline constexpr const char* kRbPairing = "rb-pairing";
inline constexpr const char* kRbAntipodeCompat = "rb-antipode-compat";
}  // namespace axioms

// Shape and shift validation (InputError), a cocommutativity gate on the
// carrier (GateError), the carrier's own Hopf sweep (prefixed "carrier:"),
// coalgebra-map sweeps for every block, and the twisted multiplicativity
// law over all grade pairs.
CheckReport check_rb(const RotaBaxterOperator& rb);

// The antipode family always satisfies the law on a cocommutative carrier.
RotaBaxterOperator antipode_rb(const HopfPiAlgebra& h);

// Conjugates the blocks by a grade-preserving bialgebra automorphism family
// phi (one block per grade): new B_a = phi_{a^-1} . B_a . phi_a^-1.  The
// family is verified to be an invertible Hopf morphism (GateError).
RotaBaxterOperator twist_rb(const RotaBaxterOperator& rb,
                            const std::vector<Mat>& phi);

// Spreads a trivially graded operator across pi through a multiplicative
// family of Hopf automorphisms of the carrier (identity at the identity
// grade): the carrier's product becomes P_{ag} . m . (P_a^-1 (x) P_g^-1)
// with the coalgebra untouched, and both the antipode and the operator get
// the blocks P_{a^-1} . X . P_{a^-1}.  The family must commute with the
// Hopf structure but not with the operator itself.
RotaBaxterOperator aut_indexed_rb(const RotaBaxterOperator& rb,
                                  const FiniteGroup& pi,
                                  const std::vector<Mat>& autos);

// Operator that kills a unit-graded factor: unit_factor's columns span a
// Hopf subalgebra G of H_e, graded_factor[a]'s columns span the grade-a
// component of a graded Hopf subalgebra K, and multiplication
// G (x) K_a -> H_a must be a linear isomorphism.  The operator is then
//   B_a(h h') = eps(h) S(h')   for h in G, h' in K_a.
// Closure or factorization failures throw GateError.
RotaBaxterOperator factorization_rb(const HopfPiAlgebra& h,
                                    const Mat& unit_factor,
                                    const std::vector<Mat>& graded_factor);

// Deformed Hopf structure on the same graded coalgebra (abelian grading
// group only):
//   g o h = g_1 B(g_2) h S(B(g_3)),    T(g) = S(B(g_1)) S(g_2) B(g_3).
// Gated on check_rb passing.
HopfPiAlgebra descendent_hopf(const RotaBaxterOperator& rb);

// Consistency sweep tying an operator to its deformed structure: the
// deformed Hopf axioms and the operator law over the deformed product
// (prefixed "descendent:"), the pairing B(h_1) B(T(h_2)) = eps(h) 1, the
// slide B . T = S . B, and B as a Hopf morphism from the deformed
// structure back to the carrier (prefixed "morphism:").
CheckReport check_descendent(const RotaBaxterOperator& rb,
                             const HopfPiAlgebra& descendent);

// Original product as dot, deformed product as circle, shared coalgebra.
HopfPiBrace brace_from_rb(const RotaBaxterOperator& rb);

// All set-level operators on the group Gamma behind deg: maps B with
// deg(B(g)) = deg(g)^-1 and B(a) B(b) = B(a B(a) b B(a)^-1), returned as
// image tables in lexicographic order.  use_oracle swaps the pruned
// backtracking search for a filter over the full candidate space; both
// produce the same ordered list.  The candidate-space size is capped by
// bound (InputError above it).
std::vector<std::vector<int>> enumerate_group_rb(
    const GroupHom& deg, bool use_oracle = false,
    std::int64_t bound = 100000000);

// Basis-map operator on the group algebra of deg built from one image
// table (InputError when the table is not graded the right way).
RotaBaxterOperator linearize_group_rb(const GroupHom& deg, const Field& f,
                                      const std::vector<int>& images);

}  // namespace hopfpi
