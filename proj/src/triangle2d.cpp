#include "simplexpoly/triangle2d.hpp"

#include <cmath>

#include "simplexpoly/jacobi1d.hpp"
#include "simplexpoly/relations.hpp"
#include "simplexpoly/special.hpp"

namespace simplexpoly {

namespace {

const char* const kSuite = "m2d";

struct View {
  Rational n, k, a, b, c, d;
  explicit View(const Member& m)
      : n(rational(m.index[0])),
        k(rational(m.index[1])),
        a(m.params[0]),
        b(m.params[1]),
        c(m.params[2]),
        d(m.params[3]) {}
  Rational A() const { return a + b + c + d; }
};

TriangleParams params_of(const Member& m) { return {m.params[0], m.params[1], m.params[2], m.params[3]}; }
TriIndex index_of(const Member& m) { return {m.index[0], m.index[1]}; }

using Scale = std::function<Rational(const Member&)>;

template <class F>
Scale scale(F f) {
  return [f](const Member& m) { return Rational(f(View(m))); };
}

}  // namespace

const char* m_op_name(MOp op) {
  static const char* const names[] = {"M01",  "M02",  "M03",  "M04",  "M05",  "M06",  "M01p", "M02p",
                                      "M03p", "M04p", "M05p", "M06p", "M10",  "M20",  "M30",  "M40",
                                      "M50",  "M60",  "M10p", "M20p", "M30p", "M40p", "M50p", "M60p"};
  return names[static_cast<int>(op)];
}

const char* triangle_pde_name(TrianglePde which) {
  switch (which) {
    case TrianglePde::L1: return "L1";
    case TrianglePde::L2: return "L2";
    case TrianglePde::B1: return "B1";
  }
  return "?";
}

Member triangle_member(const TriIndex& idx, const TriangleParams& p) {
  return Member{{idx.n, idx.k}, {p.a, p.b, p.c, p.d}};
}

MPoly triangle_poly(const TriIndex& idx, const TriangleParams& p) {
  if (idx.k < 0 || idx.k > idx.n) return {};
  const Rational top = rational(2 * idx.k) + p.b + p.c + p.d + 1;
  return shifted_jacobi(idx.n - idx.k, {top, p.a}) * homogenized_jacobi(idx.k, {p.c, p.b}, Y(), one_minus_x());
}

MPoly triangle_family(const Member& m) { return triangle_poly(index_of(m), params_of(m)); }

Rational triangle_norm_ratio(const TriIndex& idx, const TriangleParams& p) {
  // h_(n-k)^(2k+B, a) h_k^(c, b) over h_0^(B, a) h_0^(c, b), B = b+c+d+1.
  const Rational B = p.b + p.c + p.d + 1;
  const std::int64_t twok = 2 * idx.k;
  return norm_ratio(idx.n - idx.k, {B + twok, p.a}) * pochhammer(B + 1, twok) / pochhammer(B + p.a + 2, twok) *
         norm_ratio(idx.k, {p.c, p.b});
}

double triangle_norm(const TriIndex& idx, const TriangleParams& p) {
  const Rational B = p.b + p.c + p.d + 1;
  return to_double(triangle_norm_ratio(idx, p)) * norm_h0({B, p.a}) * norm_h0({p.c, p.b});
}

DiffOperator m_operator(MOp op, const Member& m) {
  const View v(m);
  const MPoly x = X(), y = Y(), s1 = one_minus_x(), s2 = one_minus_x_y();
  const Rational &n = v.n, &k = v.k, &a = v.a, &b = v.b, &c = v.c, &d = v.d;
  const Rational A = v.A();
  DiffOperator o;
  switch (op) {
    case MOp::M01: o.cy = Rational(1); break;
    case MOp::M02: o.c0 = Rational(k + b + c + 1); o.cy = y; break;
    case MOp::M03: o.c0 = Rational(k + b + c + 1); o.cy = -s2; break;
    case MOp::M04: o.c0 = y * c - s2 * Rational(b + k + 1); o.cy = -(y * s2); break;
    case MOp::M05: o.c0 = y * Rational(c + k + 1) - s2 * b; o.cy = -(y * s2); break;
    case MOp::M06: o.c0 = b; o.cy = y; break;
    case MOp::M01p: o.c0 = y * c - s2 * b; o.cy = -(y * s2); break;
    case MOp::M02p: o.c0 = s1 * Rational(c + k) - y * k; o.cy = -(y * s2); o.denom = s1; break;
    case MOp::M03p: o.c0 = s1 * b + y * k; o.cy = y * s2; o.denom = s1; break;
    case MOp::M04p: o.c0 = Rational(-k); o.cy = y; o.denom = s1; break;
    case MOp::M05p: o.c0 = k; o.cy = s2; o.denom = s1; break;
    case MOp::M06p: o.c0 = c; o.cy = -s2; break;
    case MOp::M10: o.c0 = k; o.cx = s1; o.cy = -y; o.denom = s1; break;
    case MOp::M10p: o.c0 = x * Rational(k + A + 1) - MPoly(a); o.cx = -(x * s1); o.cy = x * y; break;
    case MOp::M20:
      o.c0 = s1 * Rational(n + k + A + 2) + x * k;
      o.cx = x * s1;
      o.cy = -(x * y);
      o.denom = s1;
      break;
    case MOp::M20p: o.c0 = MPoly(Rational(n + k + b + c + d + 1)) - x * n; o.cx = -(x * s1); o.cy = x * y; break;
    case MOp::M30: o.c0 = Rational(n + A + 2); o.cx = -s1; o.cy = y; break;
    case MOp::M30p: o.c0 = MPoly(a) + x * n; o.cx = x * s1; o.cy = -(x * y); break;
    case MOp::M40:
      o.c0 = x * Rational(n + A + 2) - MPoly(Rational(a + n - k + 1));
      o.cx = -(x * s1);
      o.cy = x * y;
      break;
    case MOp::M40p: o.c0 = MPoly(k) - s1 * n; o.cx = x * s1; o.cy = -(x * y); o.denom = s1; break;
    case MOp::M50: o.c0 = x * Rational(n + A + 2) - MPoly(a); o.cx = -(x * s1); o.cy = x * y; break;
    case MOp::M50p: o.c0 = n; o.cx = s1; o.cy = -y; break;
    case MOp::M60: o.c0 = s1 * a + x * k; o.cx = x * s1; o.cy = -(x * y); o.denom = s1; break;
    case MOp::M60p: o.c0 = Rational(k + b + c + d + 1); o.cx = -s1; o.cy = y; break;
  }
  return o;
}

DiffOperator m_operator(MOp op, const TriIndex& idx, const TriangleParams& p) {
  return m_operator(op, triangle_member(idx, p));
}

const std::vector<SparseRelation<MOp>>& m_relations() {
  using M = MOp;
  // Rows follow the enum order; dparams are (a, b, c, d).
  static const std::vector<SparseRelation<MOp>> table = {
      {M::M01, {-1, -1}, {0, 1, 1, 0}, scale([](const View& v) -> Rational { return v.k + v.b + v.c + 1; })},
      {M::M02, {0, 0}, {0, 0, 1, -1}, scale([](const View& v) -> Rational { return v.k + v.b + v.c + 1; })},
      {M::M03, {0, 0}, {0, 1, 0, -1}, scale([](const View& v) -> Rational { return v.k + v.b + v.c + 1; })},
      {M::M04, {1, 1}, {0, 0, -1, -1}, scale([](const View& v) -> Rational { return v.k + 1; })},
      {M::M05, {1, 1}, {0, -1, 0, -1}, scale([](const View& v) -> Rational { return v.k + 1; })},
      {M::M06, {0, 0}, {0, -1, 1, 0}, scale([](const View& v) -> Rational { return v.k + v.b; })},
      {M::M01p, {1, 1}, {0, -1, -1, 0}, scale([](const View& v) -> Rational { return v.k + 1; })},
      {M::M02p, {0, 0}, {0, 0, -1, 1}, scale([](const View& v) -> Rational { return v.k + v.c; })},
      {M::M03p, {0, 0}, {0, -1, 0, 1}, scale([](const View& v) -> Rational { return v.k + v.b; })},
      {M::M04p, {-1, -1}, {0, 0, 1, 1}, scale([](const View& v) -> Rational { return v.k + v.b; })},
      {M::M05p, {-1, -1}, {0, 1, 0, 1}, scale([](const View& v) -> Rational { return v.k + v.c; })},
      {M::M06p, {0, 0}, {0, 1, -1, 0}, scale([](const View& v) -> Rational { return v.k + v.c; })},
      {M::M10, {-1, 0}, {1, 0, 0, 1}, scale([](const View& v) -> Rational { return v.n + v.k + v.A() + 2; })},
      {M::M20, {0, 0}, {0, 0, 0, 1}, scale([](const View& v) -> Rational { return v.n + v.k + v.A() + 2; })},
      {M::M30, {0, 0}, {1, 0, 0, 0}, scale([](const View& v) -> Rational { return v.n + v.k + v.A() + 2; })},
      {M::M40, {1, 0}, {0, 0, 0, -1}, scale([](const View& v) -> Rational { return v.n - v.k + 1; })},
      {M::M50, {1, 0}, {-1, 0, 0, 0}, scale([](const View& v) -> Rational { return v.n - v.k + 1; })},
      {M::M60, {0, 0}, {-1, 0, 0, 1}, scale([](const View& v) -> Rational { return v.n - v.k + v.a; })},
      {M::M10p, {1, 0}, {-1, 0, 0, -1}, scale([](const View& v) -> Rational { return v.n - v.k + 1; })},
      {M::M20p, {0, 0}, {0, 0, 0, -1}, scale([](const View& v) -> Rational { return v.n + v.k + v.b + v.c + v.d + 1; })},
      {M::M30p, {0, 0}, {-1, 0, 0, 0}, scale([](const View& v) -> Rational { return v.n - v.k + v.a; })},
      {M::M40p, {-1, 0}, {0, 0, 0, 1}, scale([](const View& v) -> Rational { return v.n - v.k + v.a; })},
      {M::M50p, {-1, 0}, {1, 0, 0, 0}, scale([](const View& v) -> Rational { return v.n + v.k + v.b + v.c + v.d + 1; })},
      {M::M60p, {0, 0}, {1, 0, 0, -1}, scale([](const View& v) -> Rational { return v.n + v.k + v.b + v.c + v.d + 1; })},
  };
  return table;
}

const SparseRelation<MOp>& m_relation(MOp op) { return m_relations()[static_cast<int>(op)]; }

const std::vector<CompositionIdentity<MOp>>& second_order_identities_2d() {
  using M = MOp;
  using Id = CompositionIdentity<MOp>;
  static const std::vector<Id> table = {
      // y-direction pairs; shifts are (n, k) and (a, b, c, d).
      {"M01p*M01", M::M01, M::M01p, {0, 0}, {0, -1, -1, 0}, scale([](const View& v) -> Rational { return v.k * (v.k + v.b + v.c - 1); })},
      {"M01*M01p", M::M01p, M::M01, {0, 0}, {0, 0, 0, 0}, scale([](const View& v) -> Rational { return (v.k + 1) * (v.k + v.b + v.c); })},
      {"M02p*M02", M::M02, M::M02p, {0, 0}, {0, 1, -1, 0}, scale([](const View& v) -> Rational { return (v.k + v.c) * (v.k + v.b + v.c + 1); })},
      {"M02*M02p", M::M02p, M::M02, {0, 0}, {0, 1, 0, 0}, scale([](const View& v) -> Rational { return (v.k + v.c) * (v.k + v.b + v.c + 1); })},
      {"M03p*M03", M::M03, M::M03p, {0, 0}, {0, -1, 1, 0}, scale([](const View& v) -> Rational { return (v.k + v.b) * (v.k + v.b + v.c + 1); })},
      {"M03*M03p", M::M03p, M::M03, {0, 0}, {0, 0, 1, 0}, scale([](const View& v) -> Rational { return (v.k + v.b) * (v.k + v.b + v.c + 1); })},
      {"M04p*M04", M::M04, M::M04p, {0, -1}, {0, 1, 0, 0}, scale([](const View& v) -> Rational { return v.k * (v.k + v.b + 1); })},
      {"M04*M04p", M::M04p, M::M04, {0, 0}, {0, 1, -1, 0}, scale([](const View& v) -> Rational { return v.k * (v.k + v.b + 1); })},
      {"M05p*M05", M::M05, M::M05p, {0, -1}, {0, 0, 1, 0}, scale([](const View& v) -> Rational { return v.k * (v.k + v.c + 1); })},
      {"M05*M05p", M::M05p, M::M05, {0, 0}, {0, -1, 1, 0}, scale([](const View& v) -> Rational { return v.k * (v.k + v.c + 1); })},
      {"M06p*M06", M::M06, M::M06p, {0, 0}, {0, 0, -1, 0}, scale([](const View& v) -> Rational { return (v.k + v.b) * (v.k + v.c); })},
      {"M06*M06p", M::M06p, M::M06, {0, 0}, {0, -1, 0, 0}, scale([](const View& v) -> Rational { return (v.k + v.b) * (v.k + v.c); })},
      // x-direction pairs.
      {"M10p*M10", M::M10, M::M10p, {0, 0}, {-1, 0, 0, -1}, scale([](const View& v) -> Rational { return (v.n - v.k) * (v.n + v.k + v.A()); })},
      {"M10*M10p", M::M10p, M::M10, {0, 0}, {0, 0, 0, 0}, scale([](const View& v) -> Rational { return (v.n - v.k + 1) * (v.n + v.k + v.A() + 1); })},
      {"M20p*M20", M::M20, M::M20p, {0, 0}, {1, 0, 0, -1}, scale([](const View& v) -> Rational { return (v.n + v.k + v.A() + 2) * (v.n + v.k + v.b + v.c + v.d + 1); })},
      {"M20*M20p", M::M20p, M::M20, {0, 0}, {1, -1, 0, 1}, scale([](const View& v) -> Rational { return (v.n + v.k + v.A() + 2) * (v.n + v.k + v.b + v.c + v.d + 1); })},
      {"M30p*M30", M::M30, M::M30p, {0, 0}, {-1, 1, 0, 0}, scale([](const View& v) -> Rational { return (v.n + v.k + v.A() + 2) * (v.n - v.k + v.a); })},
      {"M30*M30p", M::M30p, M::M30, {0, 0}, {0, 1, 0, 0}, scale([](const View& v) -> Rational { return (v.n + v.k + v.A() + 2) * (v.n - v.k + v.a); })},
      {"M40p*M40", M::M40, M::M40p, {-1, 0}, {1, 0, 0, 0}, scale([](const View& v) -> Rational { return (v.n - v.k) * (v.n - v.k + v.a + 1); })},
      {"M40*M40p", M::M40p, M::M40, {0, 0}, {1, -1, 0, 0}, scale([](const View& v) -> Rational { return (v.n - v.k) * (v.n - v.k + v.a + 1); })},
      {"M50p*M50", M::M50, M::M50p, {-1, 0}, {0, 1, 0, 0}, scale([](const View& v) -> Rational { return (v.n - v.k) * (v.n + v.k + v.b + v.c + v.d + 2); })},
      {"M50*M50p", M::M50p, M::M50, {0, 0}, {-1, 1, 0, 0}, scale([](const View& v) -> Rational { return (v.n - v.k) * (v.n + v.k + v.b + v.c + v.d + 2); })},
      {"M60p*M60", M::M60, M::M60p, {0, 0}, {0, 0, 0, -1}, scale([](const View& v) -> Rational { return (v.n - v.k + v.a) * (v.n + v.k + v.b + v.c + v.d + 1); })},
      {"M60*M60p", M::M60p, M::M60, {0, 0}, {-1, 0, 0, 0}, scale([](const View& v) -> Rational { return (v.n - v.k + v.a) * (v.n + v.k + v.b + v.c + v.d + 1); })},
  };
  return table;
}

namespace {

MPoly family_fn(const Member& m) { return triangle_family(m); }
DiffOperator op_fn(MOp op, const Member& m) { return m_operator(op, m); }

}  // namespace

VerificationReport verify_m_relation(MOp op, const TriIndex& idx, const TriangleParams& p) {
  return verify_sparse<MOp>(kSuite, m_op_name(op), m_relation(op), triangle_member(idx, p), family_fn, op_fn);
}

VerificationReport verify_second_order_m(const CompositionIdentity<MOp>& id, const TriIndex& idx,
                                         const TriangleParams& p) {
  return verify_composition<MOp>("second-order", id, m_relation(id.first), triangle_member(idx, p), family_fn,
                                 op_fn);
}

SecondOrderOperator triangle_pde_operator(TrianglePde which, const TriIndex& idx, const TriangleParams& p) {
  const MPoly x = X(), y = Y(), s1 = one_minus_x(), s2 = one_minus_x_y();
  const Rational n = rational(idx.n), k = rational(idx.k);
  const Rational A = p.a + p.b + p.c + p.d;
  SecondOrderOperator o;
  switch (which) {
    case TrianglePde::L1:
      o.cyy = y * s2;
      o.cy = s1 * Rational(p.b + 1) - y * Rational(p.b + p.c + 2);
      o.c0 = Rational(k * (k + p.b + p.c + 1));
      break;
    case TrianglePde::L2: {
      const auto over = [](const MPoly& poly, unsigned i) { return CoefficientBuilder(1, 0).add(poly, i).take(); };
      o.cxx = over(x * s1, 0);
      o.cxy = over(x * y * Rational(-2), 0);
      o.cyy = over(y * (MPoly(Rational(1)) - y), 0);
      o.cx = over(MPoly(Rational(p.a + 1)) - x * Rational(A + 3), 0);
      o.cy = CoefficientBuilder(1, 0).add(MPoly(Rational(p.b + 1)) - y * Rational(A + 3)).add(y * p.d, 1).take();
      o.c0 = CoefficientBuilder(1, 0).add(MPoly(Rational(n * (n + A + 2)))).add(MPoly(Rational(-k * p.d)), 1).take();
      o.denom = s1;
      break;
    }
    case TrianglePde::B1: {
      const MPoly lin = MPoly(Rational(p.a + 1)) - x * Rational(A + 3);
      const auto over = [](const MPoly& poly, unsigned i) { return CoefficientBuilder(1, 0).add(poly, i).take(); };
      o.cxx = over(x * s1, 0);
      o.cxy = over(x * y * Rational(-2), 0);
      o.cyy = over(x * y * y, 1);
      o.cx = over(lin, 0);
      o.cy = over(-(y * lin), 1);
      o.c0 = CoefficientBuilder(1, 0)
                 .add(MPoly(Rational(n * (n + A + 2))))
                 .add(MPoly(Rational(-k * (k + p.b + p.c + p.d + 1))), 1)
                 .take();
      o.denom = s1;
      break;
    }
  }
  return o;
}

MPoly pde_residual(TrianglePde which, const TriIndex& idx, const TriangleParams& p) {
  return triangle_pde_operator(which, idx, p).numerator(triangle_poly(idx, p));
}

VerificationReport verify_triangle_pde(TrianglePde which, const TriIndex& idx, const TriangleParams& p) {
  const Member at = triangle_member(idx, p);
  return make_report("pde", triangle_pde_name(which), at, pde_residual(which, idx, p), MPoly());
}

MPoly koornwinder_triangle(const TriIndex& idx, const Rational& a, const Rational& b, const Rational& c) {
  if (idx.k < 0 || idx.k > idx.n) return {};
  const MPoly one(Rational(1));
  return homogenized_jacobi_binomial(idx.n - idx.k, {rational(2 * idx.k) + b + c + 1, a}, X(), one) *
         homogenized_jacobi_binomial(idx.k, {c, b}, Y(), one_minus_x());
}

VerificationReport verify_triangle_reduction_d0(const TriIndex& idx, const Rational& a, const Rational& b,
                                                const Rational& c) {
  const TriangleParams p{a, b, c, Rational(0)};
  return make_report("m2d", "d0-reduction", triangle_member(idx, p), triangle_poly(idx, p),
                     koornwinder_triangle(idx, a, b, c));
}

namespace {

MPoly monic_triangle_raw(const TriIndex& idx, const TriangleParams& p) {
  const std::int64_t m = idx.n - idx.k;
  const Rational A = p.a + p.b + p.c + p.d;
  // (n-k)! Gamma(A+n+k+2) / Gamma(A+2n+2)
  const Rational pref = factorial(m) * gamma_ratio({A + rational(2 * idx.n + 2), -m});
  return Y().pow(static_cast<unsigned>(idx.k)) *
         shifted_jacobi(m, {p.b + p.c + p.d + rational(2 * idx.k + 1), p.a}) * pref;
}

Monomial leading_monomial(const TriIndex& idx) {
  return Monomial{static_cast<std::uint64_t>(idx.n - idx.k), static_cast<std::uint64_t>(idx.k), 0};
}

}  // namespace

MPoly monic_triangle(const TriIndex& idx, const TriangleParams& p) {
  const MPoly raw = monic_triangle_raw(idx, p);
  const Rational lead = raw.coeff(leading_monomial(idx));
  if (lead == 0) throw PoleHit("monic_triangle: vanishing leading coefficient");
  return raw * Rational(1 / lead);
}

MPoly monic_triangle_hypergeometric(const TriIndex& idx, const TriangleParams& p) {
  const std::int64_t m = idx.n - idx.k;
  const Rational A = p.a + p.b + p.c + p.d;
  // (-1)^(n+k) (a+1)_(n-k) Gamma(A+n+k+2)/Gamma(A+2n+2) y^k 2F1(k-n, A+n+k+2; a+1; x)
  Rational pref = pochhammer(p.a + 1, m) * gamma_ratio({A + rational(2 * idx.n + 2), -m});
  if ((idx.n + idx.k) % 2 != 0) pref = -pref;
  return Y().pow(static_cast<unsigned>(idx.k)) *
         hyper2F1_terminating(m, A + rational(idx.n + idx.k + 2), p.a + 1, X()) * pref;
}

VerificationReport verify_monic_triangle(const TriIndex& idx, const TriangleParams& p) {
  const Member at = triangle_member(idx, p);
  const char* name = "monic-triangle";
  try {
    const MPoly raw = monic_triangle_raw(idx, p);
    if (raw.coeff(leading_monomial(idx)) != 1) {
      return failure("monic", name, at, "leading coefficient " + to_string(raw.coeff(leading_monomial(idx))));
    }
    if (raw != monic_triangle_hypergeometric(idx, p)) {
      VerificationReport r = make_report("monic", name, at, raw, monic_triangle_hypergeometric(idx, p));
      r.detail = "Jacobi and hypergeometric forms differ";
      return r;
    }
    const MPoly u = monic_triangle(idx, p);
    VerificationReport r =
        make_report("monic", name, at, triangle_pde_operator(TrianglePde::B1, idx, p).numerator(u), MPoly());
    if (r.status == Status::Pass) r.detail = "unit leading coefficient, B1 residual 0";
    return r;
  } catch (const PoleHit& e) {
    return not_applicable("monic", name, at, e.what());
  }
}

}  // namespace simplexpoly
