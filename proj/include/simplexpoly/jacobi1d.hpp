#ifndef SIMPLEXPOLY_JACOBI1D_HPP
#define SIMPLEXPOLY_JACOBI1D_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "simplexpoly/mpoly.hpp"
#include "simplexpoly/operators.hpp"

namespace simplexpoly {

struct JacobiParams {
  Rational a;
  Rational b;
};

enum class LadderOp { L1, L2, L3, L4, L5, L6, L1p, L2p, L3p, L4p, L5p, L6p };

inline constexpr LadderOp kLadderOps[] = {LadderOp::L1,  LadderOp::L2,  LadderOp::L3,  LadderOp::L4,
                                          LadderOp::L5,  LadderOp::L6,  LadderOp::L1p, LadderOp::L2p,
                                          LadderOp::L3p, LadderOp::L4p, LadderOp::L5p, LadderOp::L6p};

const char* ladder_name(LadderOp op);

// Coefficients of P~_n^(a,b)(x) in powers of x (index j holds the x^j
// coefficient). Built from the expansion in powers of (1-x), which has no
// poles for any rational a, b. Empty for n < 0.
std::vector<Rational> shifted_jacobi_coefficients(std::int64_t n, const Rational& a, const Rational& b);

// Shifted Jacobi polynomial on (0,1), orthogonal against (1-x)^a x^b. Zero for
// n < 0.
MPoly shifted_jacobi(std::int64_t n, const JacobiParams& p);

// s^n P~_n^(a,b)(t / s) expanded as sum_j c_j t^j s^(n-j).
MPoly homogenized_jacobi(std::int64_t n, const JacobiParams& p, const MPoly& t, const MPoly& s);

// Same polynomial from the binomial sum
// sum_j C(n+a, n-j) C(n+b, j) (t-s)^j t^(n-j); used as an independent
// construction.
MPoly homogenized_jacobi_binomial(std::int64_t n, const JacobiParams& p, const MPoly& t, const MPoly& s);

// ((a+1)_n / n!) 2F1(-n, n+a+b+1; a+1; 1-x). Throws PoleHit if a+1 is a
// non-positive integer within reach.
MPoly shifted_jacobi_hypergeometric(std::int64_t n, const JacobiParams& p);

// h_n / h_0 for the weight (1-x)^a x^b on (0,1).
Rational norm_ratio(std::int64_t n, const JacobiParams& p);

// h_0 = B(a+1, b+1) in floating point.
double norm_h0(const JacobiParams& p);

// Member layout: index {n}, params {a, b}.
Member jacobi_member(std::int64_t n, const JacobiParams& p);
MPoly jacobi_family(const Member& m);

DiffOperator ladder_operator(LadderOp op, std::int64_t n, const JacobiParams& p);
DiffOperator ladder_operator(LadderOp op, const Member& m);

const std::vector<SparseRelation<LadderOp>>& ladder_relations();
const SparseRelation<LadderOp>& ladder_relation(LadderOp op);

// The 12 compositions on shifted members followed by the 12 on unshifted ones.
const std::vector<CompositionIdentity<LadderOp>>& second_order_identities_1d();

VerificationReport verify_ladder(LadderOp op, std::int64_t n, const JacobiParams& p);
VerificationReport verify_second_order_1d(const CompositionIdentity<LadderOp>& id, std::int64_t n,
                                          const JacobiParams& p);

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_JACOBI1D_HPP
