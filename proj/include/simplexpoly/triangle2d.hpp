#ifndef SIMPLEXPOLY_TRIANGLE2D_HPP
#define SIMPLEXPOLY_TRIANGLE2D_HPP

#include <cstdint>
#include <vector>

#include "simplexpoly/mpoly.hpp"
#include "simplexpoly/operators.hpp"

namespace simplexpoly {

struct TriangleParams {
  Rational a, b, c, d;
};

struct TriIndex {
  std::int64_t n = 0;
  std::int64_t k = 0;
};

// M01..M06 act in y only, M10..M60 mix x and y. A trailing p marks the "+"
// partner.
enum class MOp {
  M01, M02, M03, M04, M05, M06,
  M01p, M02p, M03p, M04p, M05p, M06p,
  M10, M20, M30, M40, M50, M60,
  M10p, M20p, M30p, M40p, M50p, M60p
};

inline constexpr int kMOpCount = 24;

const char* m_op_name(MOp op);

enum class TrianglePde { L1, L2, B1 };

const char* triangle_pde_name(TrianglePde which);

// Member layout: index {n, k}, params {a, b, c, d}.
Member triangle_member(const TriIndex& idx, const TriangleParams& p);

// Orthogonal against x^a y^b (1-x-y)^c (1-x)^d on the unit triangle. Zero
// unless 0 <= k <= n.
MPoly triangle_poly(const TriIndex& idx, const TriangleParams& p);
MPoly triangle_family(const Member& m);

Rational triangle_norm_ratio(const TriIndex& idx, const TriangleParams& p);
double triangle_norm(const TriIndex& idx, const TriangleParams& p);

DiffOperator m_operator(MOp op, const TriIndex& idx, const TriangleParams& p);
DiffOperator m_operator(MOp op, const Member& m);

const std::vector<SparseRelation<MOp>>& m_relations();
const SparseRelation<MOp>& m_relation(MOp op);
const std::vector<CompositionIdentity<MOp>>& second_order_identities_2d();

VerificationReport verify_m_relation(MOp op, const TriIndex& idx, const TriangleParams& p);
VerificationReport verify_second_order_m(const CompositionIdentity<MOp>& id, const TriIndex& idx,
                                         const TriangleParams& p);

// Operator with coefficients cleared by the minimal power of (1-x).
SecondOrderOperator triangle_pde_operator(TrianglePde which, const TriIndex& idx, const TriangleParams& p);
// Cleared residual; the zero polynomial on family members.
MPoly pde_residual(TrianglePde which, const TriIndex& idx, const TriangleParams& p);
VerificationReport verify_triangle_pde(TrianglePde which, const TriIndex& idx, const TriangleParams& p);

// Koornwinder polynomial on the triangle (three parameters), assembled from
// the explicit binomial sums of its two Jacobi factors.
MPoly koornwinder_triangle(const TriIndex& idx, const Rational& a, const Rational& b, const Rational& c);
// triangle_poly at d = 0 against koornwinder_triangle.
VerificationReport verify_triangle_reduction_d0(const TriIndex& idx, const Rational& a, const Rational& b,
                                                const Rational& c);

// y^k times a degree-(n-k) polynomial in x, scaled to unit x^(n-k) y^k
// coefficient.
MPoly monic_triangle(const TriIndex& idx, const TriangleParams& p);
// The hypergeometric form of the same solution, before normalization.
MPoly monic_triangle_hypergeometric(const TriIndex& idx, const TriangleParams& p);
// Checks unit leading coefficient, agreement of the two forms and a zero B1
// residual.
VerificationReport verify_monic_triangle(const TriIndex& idx, const TriangleParams& p);

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_TRIANGLE2D_HPP
