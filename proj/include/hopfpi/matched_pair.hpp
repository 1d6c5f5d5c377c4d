#pragma once

#include "hopfpi/brace.hpp"
#include "hopfpi/hopf.hpp"

namespace hopfpi {

// A pair of Hopf algebras acting on each other: K graded by one group, H by
// another, with a forward arrow H_a (x) K_g -> K_g (stored in to_k) and a
// backward arrow H_a (x) K_g -> H_a (stored in to_h).  Both blocks are
// indexed [a][g] by (H grade, K grade).
struct MatchedPair {
  HopfPiAlgebra k;
  HopfPiAlgebra h;
  ActionBlocks to_k;  // x (x) a |-> x -> a
  ActionBlocks to_h;  // x (x) a |-> x <- a

  bool operator==(const MatchedPair& o) const {
    return k == o.k && h == o.h && to_k == o.to_k && to_h == o.to_h;
  }
};

namespace axioms {
inline constexpr const char* kFwdAssoc = "forward-module-assoc";
inline constexpr const char* kFwdUnit = "forward-module-unit";
inline constexpr const char* kFwdComult = "forward-comult";
inline constexpr const char* kFwdCounit = "forward-counit";
inline constexpr const char* kBwdAssoc = "backward-module-assoc";
inline constexpr const char* kBwdUnit = "backward-module-unit";
inline constexpr const char* kBwdComult = "backward-comult";
inline constexpr const char* kBwdCounit = "backward-counit";
inline constexpr const char* kFwdOnProduct = "forward-on-product";
inline constexpr const char* kFwdOnUnit = "forward-on-unit";
inline constexpr const char* kBwdOnProduct = "backward-on-product";
inline constexpr const char* kBwdOnUnit = "backward-on-unit";
inline constexpr const char* kActionSymmetry = "action-symmetry";
inline constexpr const char* kProductRecovery = "product-recovery";
}  // namespace axioms

// Full sweep: both Hopf algebras (prefixed k:/h:), module and coalgebra
// conditions for each arrow, and the four mixed compatibility laws plus the
// symmetry condition.
CheckReport check_matched_pair(const MatchedPair& mp);

// Hopf algebra on K_g (x) H_a over the direct product of the two grading
// groups (K's grade major):
//   (a (x) x)(b (x) y) = a (x_1 -> b_1) (x) (x_2 <- b_2) y,
//   S(a (x) x) = (S(x_2) -> S(a_2)) (x) (S(x_1) <- S(a_1)).
// The pair is validated first (GateError on failure).
HopfPiAlgebra bicrossed_product(const MatchedPair& mp);

// Both structures of a brace act on each other: K = H = the circle Hopf
// algebra, forward arrow g -> h, backward arrow g <- h.  Needs a
// cocommutative brace over an abelian grading group (GateError).
MatchedPair brace_to_matched_pair(const HopfPiBrace& b);

// For a self-pair (K and H identical): a o b = (a_1 -> b_1) o (a_2 <- b_2),
// the law singling out the pairs that come from braces.
CheckReport check_product_recovery(const MatchedPair& mp);

// Inverse construction: the pair's Hopf structure becomes the circle
// product and the dot product is a . b = a_1 o (T(a_2) -> b) with antipode
// S(a) = a_1 -> T(a_2).  Gated on the pair being valid, self, and
// satisfying product recovery.
HopfPiBrace matched_pair_to_brace(const MatchedPair& mp);

}  // namespace hopfpi
