#ifndef SIMPLEXPOLY_SIMPLEX3D_HPP
#define SIMPLEXPOLY_SIMPLEX3D_HPP

#include <cstdint>
#include <vector>

#include "simplexpoly/mpoly.hpp"
#include "simplexpoly/operators.hpp"

namespace simplexpoly {

struct SimplexParams {
  Rational alpha, beta, gamma, delta, a, b;
  Rational e() const { return alpha + beta + gamma + delta + a + b; }
};

// Parameters of the a = b = 0 family.
struct FourParams {
  Rational alpha, beta, gamma, delta;
};

struct Index3 {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n3 = 0;
  std::int64_t n() const { return n1 + n2 + n3; }
};

// N0i act through the (y, z) part, Ni0 through x, Oi0 through z alone. A
// trailing p marks the "+" partner.
enum class SOp {
  N01, N02, N03, N04, N05, N06,
  N01p, N02p, N03p, N04p, N05p, N06p,
  N10, N20, N30, N40, N50, N60,
  N10p, N20p, N30p, N40p, N50p, N60p,
  O10, O20, O30, O40, O50, O60,
  O10p, O20p, O30p, O40p, O50p, O60p
};

inline constexpr int kSOpCount = 36;

const char* s_op_name(SOp op);

enum class SimplexPde { T1, T2, T3, T4 };

const char* simplex_pde_name(SimplexPde which);

// Member layout: index {n1, n2, n3}, params {alpha, beta, gamma, delta, a, b}.
Member simplex_member(const Index3& idx, const SimplexParams& p);
Member simplex_member(const Index3& idx, const FourParams& p);

// Orthogonal against x^alpha y^beta z^gamma w^delta (1-x)^a (1-x-y)^b on the
// unit tetrahedron, w = 1-x-y-z. Zero if any index is negative.
MPoly simplex_poly(const Index3& idx, const SimplexParams& p);
MPoly simplex_family(const Member& m);

struct SimplexNorm {
  Rational ratio;   // norm / norm of the (0,0,0) member
  double absolute;  // weighted integral of the square
};

SimplexNorm simplex_norm(const Index3& idx, const SimplexParams& p);

DiffOperator s_operator(SOp op, const Index3& idx, const SimplexParams& p);
DiffOperator s_operator(SOp op, const Member& m);

const std::vector<SparseRelation<SOp>>& theorem1_relations();
const SparseRelation<SOp>& theorem1_relation(SOp op);
// 12 N0 pairs, 12 N pairs, 12 O pairs.
const std::vector<CompositionIdentity<SOp>>& second_order_identities_3d();

VerificationReport verify_theorem1(SOp op, const Index3& idx, const SimplexParams& p);
VerificationReport verify_second_order_3d(const CompositionIdentity<SOp>& id, const Index3& idx,
                                          const SimplexParams& p);

// Operator with coefficients cleared by the minimal powers of (1-x) and
// (1-x-y).
SecondOrderOperator simplex_pde_operator(SimplexPde which, const Index3& idx, const SimplexParams& p);
MPoly pde_residual_3d(SimplexPde which, const Index3& idx, const SimplexParams& p);
VerificationReport verify_simplex_pde(SimplexPde which, const Index3& idx, const SimplexParams& p);

// The classical second order operator of the a = b = 0 family, polynomial
// coefficients.
SecondOrderOperator classical_simplex_operator(const Index3& idx, const FourParams& p);
// Product of three explicit binomial-sum Jacobi factors.
MPoly classical_simplex_explicit(const Index3& idx, const FourParams& p);
// simplex_poly at a = b = 0 against classical_simplex_explicit.
VerificationReport verify_reduction_ab0(const Index3& idx, const FourParams& p);
// T1 at a = b = 0 against classical_simplex_operator, coefficient by
// coefficient.
VerificationReport verify_t1_reduction_ab0(const Index3& idx, const FourParams& p);

// y^n2 z^n3 times a degree-n1 polynomial in x with unit x^n1 y^n2 z^n3
// coefficient.
MPoly monic_simplex(const Index3& idx, const SimplexParams& p);
MPoly monic_simplex_hypergeometric(const Index3& idx, const SimplexParams& p);
VerificationReport verify_monic_simplex(const Index3& idx, const SimplexParams& p);

struct ConnectionTerm {
  Index3 index;
  Rational coeff;
  unsigned s1_power = 0;  // extra factor (1-x)^s1_power
  unsigned s2_power = 0;  // extra factor (1-x-y)^s2_power
};

struct ConnectionExpansion {
  Index3 source;
  SimplexParams source_params;
  SimplexParams target_params;
  std::vector<ConnectionTerm> terms;

  // sum coeff * (1-x)^p (1-x-y)^q * P(target).
  MPoly reassemble() const;
};

// Expansion of P^(alpha,...) over P^(xi,...) members of lower n1.
ConnectionExpansion connect_alpha(const Index3& idx, const SimplexParams& p, const Rational& xi);

struct ConnectionTarget {
  Rational phi, theta, eta, xi;  // replace alpha, beta, gamma, delta
};

ConnectionExpansion connect_general(const Index3& idx, const SimplexParams& p, const ConnectionTarget& target);

VerificationReport verify_connect_alpha(const Index3& idx, const SimplexParams& p, const Rational& xi);
VerificationReport verify_connect_general(const Index3& idx, const SimplexParams& p,
                                          const ConnectionTarget& target);

struct ThreeTerm {
  Rational A, B, C;
};

// x P(n1) = A P(n1+1) + B P(n1) + C P(n1-1).
ThreeTerm three_term_x(const Index3& idx, const SimplexParams& p);
VerificationReport verify_three_term(const Index3& idx, const SimplexParams& p);

enum class DerivCorollary { XY, ZY, Z, ZXY };
enum class WeightedCorollary { First, Second, Third, Fourth };
enum class MultCorollary { X, Y, Z, W };

const char* corollary_name(DerivCorollary which);
const char* corollary_name(WeightedCorollary which);
const char* corollary_name(MultCorollary which);

VerificationReport verify_corollary_derivative(DerivCorollary which, const Index3& idx, const FourParams& p);
// Checked in polynomial form after multiplying both sides by the monomial in
// x, y, z, w that clears the weight derivatives.
VerificationReport verify_corollary_weighted(WeightedCorollary which, const Index3& idx, const FourParams& p);
VerificationReport verify_corollary_multiplication(MultCorollary which, const Index3& idx, const FourParams& p);

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_SIMPLEX3D_HPP
