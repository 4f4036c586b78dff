#ifndef SIMPLEXPOLY_QUADRATURE_HPP
#define SIMPLEXPOLY_QUADRATURE_HPP

#include <array>
#include <string>
#include <vector>

#include "simplexpoly/rational.hpp"
#include "simplexpoly/simplex3d.hpp"
#include "simplexpoly/triangle2d.hpp"

namespace simplexpoly {

// Gauss rule on (0,1) for the weight (1-x)^a x^b, exact to degree 2m-1.
struct QuadRule1D {
  std::vector<double> nodes;  // strictly increasing
  std::vector<double> weights;
};

QuadRule1D gauss_jacobi_01(int m, const Rational& a, const Rational& b);

struct SimplexRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
};

struct TriangleRule {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
};

// Collapsed tensor rules exact for polynomials of total degree <= order
// against the full family weight.
SimplexRule tetra_rule(const SimplexParams& p, int order);
TriangleRule triangle_rule(const TriangleParams& p, int order);

// Weighted moments of x^i y^j z^k from iterated Beta integrals.
double simplex_moment(int i, int j, int k, const SimplexParams& p);
double triangle_moment(int i, int j, const TriangleParams& p);

// Graded order, then n1 (resp. n - k) descending.
std::vector<Index3> simplex_basis(int N);
std::vector<TriIndex> triangle_basis(int N);

using Matrix = std::vector<std::vector<double>>;

// Entries <P_i, P_j>_w over the basis of total degree <= N. threads = 0 uses
// one worker.
Matrix gram_matrix(int N, const SimplexParams& p, const SimplexRule& rule, unsigned threads = 0);
Matrix gram_matrix(int N, const SimplexParams& p, unsigned threads = 0);
Matrix triangle_gram_matrix(int N, const TriangleParams& p, const TriangleRule& rule, unsigned threads = 0);
Matrix triangle_gram_matrix(int N, const TriangleParams& p, unsigned threads = 0);

struct GramCheck {
  bool ok = true;
  double max_offdiag = 0;     // max |G_ij| / sqrt(G_ii G_jj)
  double max_diag_error = 0;  // max relative deviation from the exact norm
};

GramCheck check_gram(int N, const SimplexParams& p, const Matrix& g, double tol = 1e-10);
GramCheck check_triangle_gram(int N, const TriangleParams& p, const Matrix& g, double tol = 1e-10);

// Twelve significant digits, comma separated, one row per line.
std::string gram_csv(const Matrix& g);
std::string rule_json(const SimplexRule& rule);

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_QUADRATURE_HPP
