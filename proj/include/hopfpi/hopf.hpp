#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfpi/graded.hpp"
#include "hopfpi/group.hpp"
#include "hopfpi/matrix.hpp"
#include "hopfpi/report.hpp"

namespace hopfpi {

// Hopf algebra graded by a finite group pi: one coalgebra (comult, counit)
// per grade, multiplication blocks H_a (x) H_b -> H_{ab}, unit in grade e,
// antipode blocks H_a -> H_{a^-1}.  All data is immutable basis data; maps
// use the kron column convention from matrix.hpp.
struct HopfPiAlgebra {
  GradedSpace space;
  Field field;
  std::vector<std::vector<StructureTensor>> mult;  // [a][b]
  Mat unit;                                        // dim(e) x 1
  std::vector<Mat> comult;                         // [a]: dim(a)^2 x dim(a)
  std::vector<Mat> counit;                         // [a]: 1 x dim(a)
  GradedLinearMap antipode;                        // shift a -> a^-1

  const FiniteGroup& group() const { return space.group; }
  int dim(int a) const { return space.dim(a); }
  const Mat& mult_mat(int a, int b) const { return mult[a][b].m; }
  const Mat& antipode_mat(int a) const { return antipode.blocks[a]; }

  bool operator==(const HopfPiAlgebra& o) const {
    return space == o.space && field == o.field && mult == o.mult &&
           unit == o.unit && comult == o.comult && counit == o.counit &&
           antipode == o.antipode;
  }
};

// Axiom names used in reports (tests key on these).
namespace axioms {
inline constexpr const char* kAssociativity = "associativity";
inline constexpr const char* kUnit = "unit-law";
inline constexpr const char* kCoassociativity = "coassociativity";
inline constexpr const char* kCounit = "counit-law";
inline constexpr const char* kComultMultiplicative = "comult-multiplicative";
inline constexpr const char* kCounitMultiplicative = "counit-multiplicative";
inline constexpr const char* kComultUnit = "comult-unit";
inline constexpr const char* kCounitUnit = "counit-unit";
inline constexpr const char* kAntipode = "antipode-law";
inline constexpr const char* kAntipodeAntimult = "antipode-antimultiplicative";
inline constexpr const char* kAntipodeComult = "antipode-comult";
inline constexpr const char* kAntipodeCounit = "antipode-counit";
inline constexpr const char* kAntipodeUnit = "antipode-unit";
inline constexpr const char* kAntipodeInvolutive = "antipode-involutive";
}  // namespace axioms

// Throws InputError when any block shape disagrees with the graded space.
void validate_shapes(const HopfPiAlgebra& h);

// Delta^(n): H_a -> H_a^(n tensor factors), left-iterated (Delta (x) id)Delta.
// n = 1 is the identity.
Mat iterated_comult(const HopfPiAlgebra& h, int a, int n);

// H_{g1} (x) ... (x) H_{gk} -> H_{g1...gk}, left-folded products.
Mat mult_chain(const HopfPiAlgebra& h, const std::vector<int>& grades);

// Comultiplication of the tensor coalgebra A (x) B from the factors'
// comultiplications (middle factors swapped into (a1 b1)(a2 b2) order).
Mat tensor_comult(const Mat& delta_a, const Mat& delta_b);

// Full axiom sweep: (co)associativity, (co)units, multiplicativity of the
// coalgebra maps, and both antipode laws, across all grade tuples.
CheckReport check_hopf_pi_algebra(const HopfPiAlgebra& h);

bool is_cocommutative(const HopfPiAlgebra& h);

// Derived antipode laws: anti-multiplicativity across grades, compatibility
// with comult/counit/unit, and involutivity when cocommutative.
CheckReport check_antipode_identities(const HopfPiAlgebra& h);

// Morphism check for f: H -> K over the same grading group.  f.shift must
// be a group homomorphism of the grading group (identity for ordinary
// morphisms; descendent maps use inversion).
CheckReport check_hopf_morphism(const GradedLinearMap& f,
                                const HopfPiAlgebra& h,
                                const HopfPiAlgebra& k);

// k[Gamma] graded over deg's target: fibers of deg are the grade components,
// basis order inside each fiber follows Gamma's element order.
HopfPiAlgebra group_algebra(const GroupHom& deg, const Field& f);

// Composition algebra End(V) in the kron basis (E_{ij} at index i*d + j);
// product is composition, left factor applied last.
StructureTensor end_algebra_mult(int d, const Field& f);
Mat end_algebra_unit(int d, const Field& f);

struct ConvolutionResult {
  enum class Status { ok, no_solution, one_sided };
  Status status = Status::no_solution;
  Mat inverse;  // d_A x d_C when ok
  // Dimension of the solution space of the defining linear system; a
  // two-sided inverse is unique, so anything nonzero is flagged upstream.
  int nullspace_dim = 0;
};

// Convolution inverse of f: C -> A: solves g(x_(1)) f(x_(2)) = eps(x) 1_A,
// then verifies f(x_(1)) g(x_(2)) = eps(x) 1_A.  A failing right side is
// reported as Status::one_sided.
ConvolutionResult convolution_inverse(const Mat& comult, const Mat& counit,
                                      const StructureTensor& alg_mult,
                                      const Mat& alg_unit, const Mat& f);

struct AntipodeSolveResult {
  enum class Status { ok, no_solution, one_sided };
  Status status = Status::no_solution;
  GradedLinearMap antipode;
};

// Solves m(S (x) id)Delta = unit . eps per grade on bialgebra data (the
// antipode member of h is ignored), then verifies the right-hand law.
AntipodeSolveResult solve_antipode(const HopfPiAlgebra& h);

}  // namespace hopfpi
