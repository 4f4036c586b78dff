#include "simplexpoly/simplex3d.hpp"

#include <array>
#include <functional>

#include "simplexpoly/errors.hpp"
#include "simplexpoly/jacobi1d.hpp"
#include "simplexpoly/relations.hpp"
#include "simplexpoly/special.hpp"

namespace simplexpoly {

namespace {

const char* const kSuite = "theorem1";

struct View {
  Rational n1, n2, n3, n, al, be, ga, de, a, b;
  explicit View(const Member& m)
      : n1(rational(m.index[0])),
        n2(rational(m.index[1])),
        n3(rational(m.index[2])),
        n(rational(m.index[0] + m.index[1] + m.index[2])),
        al(m.params[0]),
        be(m.params[1]),
        ga(m.params[2]),
        de(m.params[3]),
        a(m.params[4]),
        b(m.params[5]) {}
  Rational e() const { return al + be + ga + de + a + b; }
};

SimplexParams params_of(const Member& m) {
  return {m.params[0], m.params[1], m.params[2], m.params[3], m.params[4], m.params[5]};
}
Index3 index_of(const Member& m) { return {m.index[0], m.index[1], m.index[2]}; }

using Scale = std::function<Rational(const Member&)>;

template <class F>
Scale scale(F f) {
  return [f](const Member& m) { return Rational(f(View(m))); };
}

MPoly family_fn(const Member& m) { return simplex_family(m); }
DiffOperator op_fn(SOp op, const Member& m) { return s_operator(op, m); }

Monomial monomial_of(const Index3& idx) {
  return Monomial{static_cast<std::uint64_t>(idx.n1), static_cast<std::uint64_t>(idx.n2),
                  static_cast<std::uint64_t>(idx.n3)};
}

}  // namespace

const char* s_op_name(SOp op) {
  static const char* const names[] = {
      "N01",  "N02",  "N03",  "N04",  "N05",  "N06",  "N01p", "N02p", "N03p", "N04p", "N05p", "N06p",
      "N10",  "N20",  "N30",  "N40",  "N50",  "N60",  "N10p", "N20p", "N30p", "N40p", "N50p", "N60p",
      "O10",  "O20",  "O30",  "O40",  "O50",  "O60",  "O10p", "O20p", "O30p", "O40p", "O50p", "O60p"};
  return names[static_cast<int>(op)];
}

const char* simplex_pde_name(SimplexPde which) {
  switch (which) {
    case SimplexPde::T1: return "T1";
    case SimplexPde::T2: return "T2";
    case SimplexPde::T3: return "T3";
    case SimplexPde::T4: return "T4";
  }
  return "?";
}

Member simplex_member(const Index3& idx, const SimplexParams& p) {
  return Member{{idx.n1, idx.n2, idx.n3}, {p.alpha, p.beta, p.gamma, p.delta, p.a, p.b}};
}

Member simplex_member(const Index3& idx, const FourParams& p) {
  return simplex_member(idx, SimplexParams{p.alpha, p.beta, p.gamma, p.delta, Rational(0), Rational(0)});
}

MPoly simplex_poly(const Index3& idx, const SimplexParams& p) {
  if (idx.n1 < 0 || idx.n2 < 0 || idx.n3 < 0) return {};
  const Rational px = p.beta + p.gamma + p.delta + p.a + p.b + rational(2 * idx.n2 + 2 * idx.n3 + 2);
  const Rational py = p.gamma + p.delta + p.b + rational(2 * idx.n3 + 1);
  return shifted_jacobi(idx.n1, {px, p.alpha}) * homogenized_jacobi(idx.n2, {py, p.beta}, Y(), one_minus_x()) *
         homogenized_jacobi(idx.n3, {p.delta, p.gamma}, Z(), one_minus_x_y());
}

MPoly simplex_family(const Member& m) { return simplex_poly(index_of(m), params_of(m)); }

SimplexNorm simplex_norm(const Index3& idx, const SimplexParams& p) {
  // h_n1^(P1, alpha) h_n2^(Q + 2 n3, beta) h_n3^(delta, gamma) with
  // P1 = P0 + 2(n2 + n3).
  const Rational P0 = p.beta + p.gamma + p.delta + p.a + p.b + 2;
  const Rational Q = p.gamma + p.delta + p.b + 1;
  const std::int64_t s = 2 * (idx.n2 + idx.n3);
  const std::int64_t t = 2 * idx.n3;
  const Rational ratio = norm_ratio(idx.n1, {P0 + s, p.alpha}) * pochhammer(P0 + 1, s) /
                         pochhammer(P0 + p.alpha + 2, s) * norm_ratio(idx.n2, {Q + t, p.beta}) *
                         pochhammer(Q + 1, t) / pochhammer(Q + p.beta + 2, t) * norm_ratio(idx.n3, {p.delta, p.gamma});
  const double h0 = norm_h0({P0, p.alpha}) * norm_h0({Q, p.beta}) * norm_h0({p.delta, p.gamma});
  return {ratio, to_double(ratio) * h0};
}

DiffOperator s_operator(SOp op, const Member& m) {
  const View v(m);
  const MPoly x = X(), y = Y(), z = Z(), s1 = one_minus_x(), s2 = one_minus_x_y(), w = one_minus_x_y_z();
  const Rational &n1 = v.n1, &n2 = v.n2, &n3 = v.n3, &n = v.n;
  const Rational &al = v.al, &be = v.be, &ga = v.ga, &de = v.de, &b = v.b;
  const Rational e = v.e();
  const Rational n23 = n2 + n3;
  DiffOperator o;
  switch (op) {
    case SOp::N01: o.c0 = n3; o.cy = s2; o.cz = -z; o.denom = s2; break;
    case SOp::N02:
      o.c0 = s2 * Rational(n2 + 2 * n3 + be + ga + de + b + 2) + y * n3;
      o.cy = y * s2;
      o.cz = -(y * z);
      o.denom = s2;
      break;
    case SOp::N03: o.c0 = Rational(n23 + be + ga + de + b + 2); o.cy = -s2; o.cz = z; break;
    case SOp::N04:
      o.c0 = y * Rational(n3 + ga + de + b + 1) - s2 * Rational(be + n2 + 1);
      o.cy = -(y * s2);
      o.cz = y * z;
      break;
    case SOp::N05:
      o.c0 = y * Rational(n23 + ga + de + b + 2) - s2 * be;
      o.cy = -(y * s2);
      o.cz = y * z;
      break;
    case SOp::N06: o.c0 = s2 * be + y * n3; o.cy = y * s2; o.cz = -(y * z); o.denom = s2; break;
    case SOp::N01p:
      o.c0 = y * Rational(ga + de + n3 + b + 1) - s2 * be;
      o.cy = -(y * s2);
      o.cz = y * z;
      break;
    case SOp::N02p:
      o.c0 = s1 * Rational(n2 + 2 * n3 + ga + de + b + 1) - y * n23;
      o.cy = -(y * s2);
      o.cz = y * z;
      o.denom = s1;
      break;
    case SOp::N03p: o.c0 = s1 * be + y * n23; o.cy = y * s2; o.cz = -(y * z); o.denom = s1; break;
    case SOp::N04p:
      o.c0 = y * n3 - s2 * n2;
      o.cy = y * s2;
      o.cz = -(y * z);
      o.denom = s1 * s2;
      break;
    case SOp::N05p: o.c0 = n23; o.cy = s2; o.cz = -z; o.denom = s1; break;
    case SOp::N06p: o.c0 = Rational(ga + de + n3 + b + 1); o.cy = -s2; o.cz = z; break;
    case SOp::N10: o.c0 = n23; o.cx = s1; o.cy = -y; o.cz = -z; o.denom = s1; break;
    case SOp::N20:
      o.c0 = s1 * Rational(n + n23 + e + 3) + x * n23;
      o.cx = x * s1;
      o.cy = -(x * y);
      o.cz = -(x * z);
      o.denom = s1;
      break;
    case SOp::N30: o.c0 = Rational(n + e + 3); o.cx = -s1; o.cy = y; o.cz = z; break;
    case SOp::N40:
      o.c0 = x * Rational(n + e + 3) - MPoly(Rational(al + n1 + 1));
      o.cx = -(x * s1);
      o.cy = x * y;
      o.cz = x * z;
      break;
    case SOp::N50:
      o.c0 = x * Rational(n + e + 3) - MPoly(al);
      o.cx = -(x * s1);
      o.cy = x * y;
      o.cz = x * z;
      break;
    case SOp::N60:
      o.c0 = s1 * al + x * n23;
      o.cx = x * s1;
      o.cy = -(x * y);
      o.cz = -(x * z);
      o.denom = s1;
      break;
    case SOp::N10p:
      o.c0 = x * Rational(n23 + e + 2) - MPoly(al);
      o.cx = -(x * s1);
      o.cy = x * y;
      o.cz = x * z;
      break;
    case SOp::N20p:
      o.c0 = MPoly(Rational(n + n23 + e - al + 2)) - x * n;
      o.cx = -(x * s1);
      o.cy = x * y;
      o.cz = x * z;
      break;
    case SOp::N30p: o.c0 = MPoly(al) + x * n; o.cx = x * s1; o.cy = -(x * y); o.cz = -(x * z); break;
    case SOp::N40p:
      o.c0 = MPoly(n23) - s1 * n;
      o.cx = x * s1;
      o.cy = -(x * y);
      o.cz = -(x * z);
      o.denom = s1;
      break;
    case SOp::N50p: o.c0 = n; o.cx = s1; o.cy = -y; o.cz = -z; break;
    case SOp::N60p: o.c0 = Rational(n23 + e - al + 2); o.cx = -s1; o.cy = y; o.cz = z; break;
    case SOp::O10: o.cz = Rational(1); break;
    case SOp::O20: o.c0 = Rational(de + ga + n3 + 1); o.cz = z; break;
    case SOp::O30: o.c0 = Rational(de + ga + n3 + 1); o.cz = -w; break;
    case SOp::O40: o.c0 = z * de - w * Rational(ga + n3 + 1); o.cz = -(z * w); break;
    case SOp::O50: o.c0 = z * Rational(de + n3 + 1) - w * ga; o.cz = -(z * w); break;
    case SOp::O60: o.c0 = ga; o.cz = z; break;
    case SOp::O10p: o.c0 = z * de - w * ga; o.cz = -(z * w); break;
    case SOp::O20p: o.c0 = s2 * de + w * n3; o.cz = -(z * w); o.denom = s2; break;
    case SOp::O30p: o.c0 = s2 * ga + z * n3; o.cz = z * w; o.denom = s2; break;
    case SOp::O40p: o.c0 = Rational(-n3); o.cz = z; o.denom = s2; break;
    case SOp::O50p: o.c0 = n3; o.cz = w; o.denom = s2; break;
    case SOp::O60p: o.c0 = de; o.cz = -w; break;
  }
  return o;
}

DiffOperator s_operator(SOp op, const Index3& idx, const SimplexParams& p) {
  return s_operator(op, simplex_member(idx, p));
}

const std::vector<SparseRelation<SOp>>& theorem1_relations() {
  using S = SOp;
  // Rows follow the enum order; dindex is (n1, n2, n3), dparams are
  // (alpha, beta, gamma, delta, a, b).
  const auto k2 = [](const View& v) -> Rational { return v.n2 + 2 * v.n3 + v.be + v.ga + v.de + v.b + 2; };
  const auto k1 = [](const View& v) -> Rational { return v.n2 + 2 * v.n3 + v.ga + v.de + v.b + 1; };
  const auto j3 = [](const View& v) -> Rational { return v.n + v.n2 + v.n3 + v.e() + 3; };
  const auto j2 = [](const View& v) -> Rational { return v.n + v.n2 + v.n3 + v.e() - v.al + 2; };
  const auto o1 = [](const View& v) -> Rational { return v.n3 + v.de + v.ga + 1; };
  static const std::vector<SparseRelation<SOp>> table = {
      {S::N01, {0, -1, 0}, {0, 1, 0, 0, 0, 1}, scale(k2)},
      {S::N02, {0, 0, 0}, {0, 0, 0, 0, -1, 1}, scale(k2)},
      {S::N03, {0, 0, 0}, {0, 1, 0, 0, -1, 0}, scale(k2)},
      {S::N04, {0, 1, 0}, {0, 0, 0, 0, -1, -1}, scale([](const View& v) -> Rational { return v.n2 + 1; })},
      {S::N05, {0, 1, 0}, {0, -1, 0, 0, -1, 0}, scale([](const View& v) -> Rational { return v.n2 + 1; })},
      {S::N06, {0, 0, 0}, {0, -1, 0, 0, 0, 1}, scale([](const View& v) -> Rational { return v.n2 + v.be; })},
      {S::N01p, {0, 1, 0}, {0, -1, 0, 0, 0, -1}, scale([](const View& v) -> Rational { return v.n2 + 1; })},
      {S::N02p, {0, 0, 0}, {0, 0, 0, 0, 1, -1}, scale(k1)},
      {S::N03p, {0, 0, 0}, {0, -1, 0, 0, 1, 0}, scale([](const View& v) -> Rational { return v.n2 + v.be; })},
      {S::N04p, {0, -1, 0}, {0, 0, 0, 0, 1, 1}, scale([](const View& v) -> Rational { return v.n2 + v.be; })},
      {S::N05p, {0, -1, 0}, {0, 1, 0, 0, 1, 0}, scale(k1)},
      {S::N06p, {0, 0, 0}, {0, 1, 0, 0, 0, -1}, scale(k1)},
      {S::N10, {-1, 0, 0}, {1, 0, 0, 0, 1, 0}, scale(j3)},
      {S::N20, {0, 0, 0}, {0, 0, 0, 0, 1, 0}, scale(j3)},
      {S::N30, {0, 0, 0}, {1, 0, 0, 0, 0, 0}, scale(j3)},
      {S::N40, {1, 0, 0}, {0, 0, 0, 0, -1, 0}, scale([](const View& v) -> Rational { return v.n1 + 1; })},
      {S::N50, {1, 0, 0}, {-1, 0, 0, 0, 0, 0}, scale([](const View& v) -> Rational { return v.n1 + 1; })},
      {S::N60, {0, 0, 0}, {-1, 0, 0, 0, 1, 0}, scale([](const View& v) -> Rational { return v.n1 + v.al; })},
      {S::N10p, {1, 0, 0}, {-1, 0, 0, 0, -1, 0}, scale([](const View& v) -> Rational { return v.n1 + 1; })},
      {S::N20p, {0, 0, 0}, {0, 0, 0, 0, -1, 0}, scale(j2)},
      {S::N30p, {0, 0, 0}, {-1, 0, 0, 0, 0, 0}, scale([](const View& v) -> Rational { return v.n1 + v.al; })},
      {S::N40p, {-1, 0, 0}, {0, 0, 0, 0, 1, 0}, scale([](const View& v) -> Rational { return v.n1 + v.al; })},
      {S::N50p, {-1, 0, 0}, {1, 0, 0, 0, 0, 0}, scale(j2)},
      {S::N60p, {0, 0, 0}, {1, 0, 0, 0, -1, 0}, scale(j2)},
      {S::O10, {0, 0, -1}, {0, 0, 1, 1, 0, 0}, scale(o1)},
      {S::O20, {0, 0, 0}, {0, 0, 0, 1, 0, -1}, scale(o1)},
      {S::O30, {0, 0, 0}, {0, 0, 1, 0, 0, -1}, scale(o1)},
      {S::O40, {0, 0, 1}, {0, 0, 0, -1, 0, -1}, scale([](const View& v) -> Rational { return v.n3 + 1; })},
      {S::O50, {0, 0, 1}, {0, 0, -1, 0, 0, -1}, scale([](const View& v) -> Rational { return v.n3 + 1; })},
      {S::O60, {0, 0, 0}, {0, 0, -1, 1, 0, 0}, scale([](const View& v) -> Rational { return v.n3 + v.ga; })},
      {S::O10p, {0, 0, 1}, {0, 0, -1, -1, 0, 0}, scale([](const View& v) -> Rational { return v.n3 + 1; })},
      {S::O20p, {0, 0, 0}, {0, 0, 0, -1, 0, 1}, scale([](const View& v) -> Rational { return v.n3 + v.de; })},
      {S::O30p, {0, 0, 0}, {0, 0, -1, 0, 0, 1}, scale([](const View& v) -> Rational { return v.n3 + v.ga; })},
      {S::O40p, {0, 0, -1}, {0, 0, 0, 1, 0, 1}, scale([](const View& v) -> Rational { return v.n3 + v.ga; })},
      {S::O50p, {0, 0, -1}, {0, 0, 1, 0, 0, 1}, scale([](const View& v) -> Rational { return v.n3 + v.de; })},
      {S::O60p, {0, 0, 0}, {0, 0, 1, -1, 0, 0}, scale([](const View& v) -> Rational { return v.n3 + v.de; })},
  };
  return table;
}

const SparseRelation<SOp>& theorem1_relation(SOp op) { return theorem1_relations()[static_cast<int>(op)]; }

const std::vector<CompositionIdentity<SOp>>& second_order_identities_3d() {
  using S = SOp;
  using Id = CompositionIdentity<SOp>;
  const auto k2 = [](const View& v) -> Rational { return v.n2 + 2 * v.n3 + v.be + v.ga + v.de + v.b + 2; };
  const auto k1 = [](const View& v) -> Rational { return v.n2 + 2 * v.n3 + v.ga + v.de + v.b + 1; };
  const auto j3 = [](const View& v) -> Rational { return v.n + v.n2 + v.n3 + v.e() + 3; };
  const auto j2 = [](const View& v) -> Rational { return v.n + v.n2 + v.n3 + v.e() - v.al + 2; };
  static const std::vector<Id> table = {
      // (y, z) pairs.
      {"N01p*N01", S::N01, S::N01p, {0, 0, 0}, {0, -1, 0, 0, 0, -1},
       scale([](const View& v) -> Rational { return v.n2 * (v.n2 + 2 * v.n3 + v.be + v.ga + v.de + v.b); })},
      {"N01*N01p", S::N01p, S::N01, {0, 0, 0}, {0, 0, 0, 0, 0, 0},
       scale([](const View& v) -> Rational { return (v.n2 + 1) * (v.n2 + 2 * v.n3 + v.be + v.ga + v.de + v.b + 1); })},
      {"N02p*N02", S::N02, S::N02p, {0, 0, 0}, {0, 1, 0, 0, 0, -1},
       scale([k2, k1](const View& v) -> Rational { return k2(v) * k1(v); })},
      {"N02*N02p", S::N02p, S::N02, {0, 0, 0}, {0, 1, 0, 0, 0, 0},
       scale([k2, k1](const View& v) -> Rational { return k2(v) * k1(v); })},
      {"N03p*N03", S::N03, S::N03p, {0, 0, 0}, {0, -1, 0, 0, 0, 1},
       scale([k2](const View& v) -> Rational { return (v.n2 + v.be) * k2(v); })},
      {"N03*N03p", S::N03p, S::N03, {0, 0, 0}, {0, 0, 0, 0, 0, 1},
       scale([k2](const View& v) -> Rational { return (v.n2 + v.be) * k2(v); })},
      {"N04p*N04", S::N04, S::N04p, {0, -1, 0}, {0, 1, 0, 0, 0, 0},
       scale([](const View& v) -> Rational { return v.n2 * (v.n2 + v.be + 1); })},
      {"N04*N04p", S::N04p, S::N04, {0, 0, 0}, {0, 1, 0, 0, 0, -1},
       scale([](const View& v) -> Rational { return v.n2 * (v.n2 + v.be + 1); })},
      {"N05p*N05", S::N05, S::N05p, {0, -1, 0}, {0, 0, 0, 0, 0, 1},
       scale([](const View& v) -> Rational { return v.n2 * (v.n2 + 2 * v.n3 + v.ga + v.de + v.b + 2); })},
      {"N05*N05p", S::N05p, S::N05, {0, 0, 0}, {0, -1, 0, 0, 0, 1},
       scale([](const View& v) -> Rational { return v.n2 * (v.n2 + 2 * v.n3 + v.ga + v.de + v.b + 2); })},
      {"N06p*N06", S::N06, S::N06p, {0, 0, 0}, {0, 0, 0, 0, 0, -1},
       scale([k1](const View& v) -> Rational { return (v.n2 + v.be) * k1(v); })},
      {"N06*N06p", S::N06p, S::N06, {0, 0, 0}, {0, -1, 0, 0, 0, 0},
       scale([k1](const View& v) -> Rational { return (v.n2 + v.be) * k1(v); })},
      // x pairs.
      {"N10p*N10", S::N10, S::N10p, {0, 0, 0}, {-1, 0, 0, 0, 0, -1},
       scale([](const View& v) -> Rational { return v.n1 * (v.n + v.n2 + v.n3 + v.e() + 1); })},
      {"N10*N10p", S::N10p, S::N10, {0, 0, 0}, {0, 0, 0, 0, 0, 0},
       scale([](const View& v) -> Rational { return (v.n1 + 1) * (v.n + v.n2 + v.n3 + v.e() + 2); })},
      {"N20p*N20", S::N20, S::N20p, {0, 0, 0}, {1, 0, 0, 0, 0, -1},
       scale([j3, j2](const View& v) -> Rational { return j3(v) * j2(v); })},
      {"N20*N20p", S::N20p, S::N20, {0, 0, 0}, {1, 0, 0, 0, 0, 0},
       scale([j3, j2](const View& v) -> Rational { return j3(v) * j2(v); })},
      {"N30p*N30", S::N30, S::N30p, {0, 0, 0}, {-1, 0, 0, 0, 1, 0},
       scale([j3](const View& v) -> Rational { return (v.n1 + v.al) * j3(v); })},
      {"N30*N30p", S::N30p, S::N30, {0, 0, 0}, {0, 0, 0, 0, 1, 0},
       scale([j3](const View& v) -> Rational { return (v.n1 + v.al) * j3(v); })},
      {"N40p*N40", S::N40, S::N40p, {-1, 0, 0}, {1, 0, 0, 0, 0, 0},
       scale([](const View& v) -> Rational { return v.n1 * (v.n1 + v.al + 1); })},
      {"N40*N40p", S::N40p, S::N40, {0, 0, 0}, {1, 0, 0, 0, 0, -1},
       scale([](const View& v) -> Rational { return v.n1 * (v.n1 + v.al + 1); })},
      {"N50p*N50", S::N50, S::N50p, {-1, 0, 0}, {0, 0, 0, 0, 1, 0},
       scale([](const View& v) -> Rational { return v.n1 * (v.n + v.n2 + v.n3 + v.e() - v.al + 3); })},
      {"N50*N50p", S::N50p, S::N50, {0, 0, 0}, {-1, 0, 0, 0, 1, 0},
       scale([](const View& v) -> Rational { return v.n1 * (v.n + v.n2 + v.n3 + v.e() - v.al + 3); })},
      {"N60p*N60", S::N60, S::N60p, {0, 0, 0}, {0, 0, 0, 0, 0, -1},
       scale([j2](const View& v) -> Rational { return (v.n1 + v.al) * j2(v); })},
      {"N60*N60p", S::N60p, S::N60, {0, 0, 0}, {-1, 0, 0, 0, 0, 0},
       scale([j2](const View& v) -> Rational { return (v.n1 + v.al) * j2(v); })},
      // z pairs.
      {"O10p*O10", S::O10, S::O10p, {0, 0, 0}, {0, 0, -1, -1, 0, 0},
       scale([](const View& v) -> Rational { return v.n3 * (v.n3 + v.ga + v.de - 1); })},
      {"O10*O10p", S::O10p, S::O10, {0, 0, 0}, {0, 0, 0, 0, 0, 0},
       scale([](const View& v) -> Rational { return (v.n3 + 1) * (v.n3 + v.ga + v.de); })},
      {"O20p*O20", S::O20, S::O20p, {0, 0, 0}, {0, 0, 1, -1, 0, 0},
       scale([](const View& v) -> Rational { return (v.n3 + v.de) * (v.n3 + v.ga + v.de + 1); })},
      {"O20*O20p", S::O20p, S::O20, {0, 0, 0}, {0, 0, 1, 0, 0, 0},
       scale([](const View& v) -> Rational { return (v.n3 + v.de) * (v.n3 + v.ga + v.de + 1); })},
      {"O30p*O30", S::O30, S::O30p, {0, 0, 0}, {0, 0, -1, 1, 0, 0},
       scale([](const View& v) -> Rational { return (v.n3 + v.ga) * (v.n3 + v.ga + v.de + 1); })},
      {"O30*O30p", S::O30p, S::O30, {0, 0, 0}, {0, 0, 0, 1, 0, 0},
       scale([](const View& v) -> Rational { return (v.n3 + v.ga) * (v.n3 + v.ga + v.de + 1); })},
      {"O40p*O40", S::O40, S::O40p, {0, 0, -1}, {0, 0, 1, 0, 0, 0},
       scale([](const View& v) -> Rational { return v.n3 * (v.n3 + v.ga + 1); })},
      {"O40*O40p", S::O40p, S::O40, {0, 0, 0}, {0, 0, 1, -1, 0, 0},
       scale([](const View& v) -> Rational { return v.n3 * (v.n3 + v.ga + 1); })},
      {"O50p*O50", S::O50, S::O50p, {0, 0, -1}, {0, 0, 0, 1, 0, 0},
       scale([](const View& v) -> Rational { return v.n3 * (v.n3 + v.de + 1); })},
      {"O50*O50p", S::O50p, S::O50, {0, 0, 0}, {0, 0, -1, 1, 0, 0},
       scale([](const View& v) -> Rational { return v.n3 * (v.n3 + v.de + 1); })},
      {"O60p*O60", S::O60, S::O60p, {0, 0, 0}, {0, 0, 0, -1, 0, 0},
       scale([](const View& v) -> Rational { return (v.n3 + v.ga) * (v.n3 + v.de); })},
      {"O60*O60p", S::O60p, S::O60, {0, 0, 0}, {0, 0, -1, 0, 0, 0},
       scale([](const View& v) -> Rational { return (v.n3 + v.ga) * (v.n3 + v.de); })},
  };
  return table;
}

VerificationReport verify_theorem1(SOp op, const Index3& idx, const SimplexParams& p) {
  return verify_sparse<SOp>(kSuite, s_op_name(op), theorem1_relation(op), simplex_member(idx, p), family_fn, op_fn);
}

VerificationReport verify_second_order_3d(const CompositionIdentity<SOp>& id, const Index3& idx,
                                          const SimplexParams& p) {
  return verify_composition<SOp>("second-order", id, theorem1_relation(id.first), simplex_member(idx, p), family_fn,
                                 op_fn);
}

SecondOrderOperator simplex_pde_operator(SimplexPde which, const Index3& idx, const SimplexParams& p) {
  const MPoly x = X(), y = Y(), z = Z(), s1 = one_minus_x(), s2 = one_minus_x_y(), w = one_minus_x_y_z();
  const MPoly one(Rational(1));
  const Rational n = rational(idx.n()), n2 = rational(idx.n2), n3 = rational(idx.n3);
  const Rational e = p.e();
  const Rational S = p.alpha + p.beta + p.gamma + p.delta;
  SecondOrderOperator o;
  switch (which) {
    case SimplexPde::T1: {
      const auto B = [] { return CoefficientBuilder(1, 1); };
      o.cxx = B().add(x * s1).take();
      o.cyy = B().add(y * (one - y)).take();
      o.czz = B().add(z * (one - z)).take();
      o.cxz = B().add(x * z * Rational(-2)).take();
      o.cyz = B().add(y * z * Rational(-2)).take();
      o.cxy = B().add(x * y * Rational(-2)).take();
      o.cx = B().add(MPoly(Rational(p.alpha + 1)) - x * Rational(e + 4)).take();
      o.cy = B().add(MPoly(Rational(p.beta + 1)) - y * Rational(S + 4))
                 .add(x * y * Rational(p.a + p.b) - y * p.b, 1, 0)
                 .take();
      o.cz = B().add(MPoly(Rational(p.gamma + 1)) - z * Rational(S + 4))
                 .add(x * z * Rational(p.a + p.b), 1, 0)
                 .add(y * z * p.b, 1, 1)
                 .take();
      o.c0 = B().add(MPoly(Rational(n * (n + e + 3))))
                 .add(MPoly(Rational(-p.a * (n2 + n3))), 1, 0)
                 .add(MPoly(Rational(-n3 * p.b)), 0, 1)
                 .take();
      o.denom = s1 * s2;
      break;
    }
    case SimplexPde::T2: {
      const auto B = [] { return CoefficientBuilder(0, 1); };
      const Rational g = p.gamma + p.delta + p.b + 2;
      o.cyy = B().add(y * s2).take();
      o.cyz = B().add(y * z * Rational(-2)).take();
      o.czz = B().add(y * z * z, 0, 1).take();
      o.cy = B().add(s2 * Rational(p.beta + 1) - y * g).take();
      o.cz = B().add(y * z * g - z * s2 * Rational(p.beta + 1), 0, 1).take();
      o.c0 = B().add(MPoly(Rational((p.beta + 1) * n3 + n2 * (n2 + 2 * n3 + p.beta + p.gamma + p.delta + p.b + 2))))
                 .add(y * Rational(-n3 * (p.gamma + p.delta + p.b + n3 + 1)), 0, 1)
                 .take();
      o.denom = s2;
      break;
    }
    case SimplexPde::T3:
      o.czz = z * w;
      o.cz = w * Rational(p.gamma + 1) - z * Rational(p.delta + 1);
      o.c0 = Rational(n3 * (n3 + p.gamma + p.delta + 1));
      break;
    case SimplexPde::T4: {
      const auto B = [] { return CoefficientBuilder(1, 0); };
      const MPoly lin = MPoly(Rational(p.alpha + 1)) - x * Rational(e + 4);
      o.cxx = B().add(x * s1).take();
      o.cyy = B().add(x * y * y, 1).take();
      o.czz = B().add(x * z * z, 1).take();
      o.cxy = B().add(x * y * Rational(-2)).take();
      o.cxz = B().add(x * z * Rational(-2)).take();
      o.cyz = B().add(x * y * z * Rational(2), 1).take();
      o.cx = B().add(lin).take();
      o.cy = B().add(-(y * lin), 1).take();
      o.cz = B().add(-(z * lin), 1).take();
      o.c0 = B().add(MPoly(Rational(n * (n + e + 3))))
                 .add(MPoly(Rational(-(n2 + n3) * (n2 + n3 + e - p.alpha + 2))), 1)
                 .take();
      o.denom = s1;
      break;
    }
  }
  return o;
}

MPoly pde_residual_3d(SimplexPde which, const Index3& idx, const SimplexParams& p) {
  return simplex_pde_operator(which, idx, p).numerator(simplex_poly(idx, p));
}

VerificationReport verify_simplex_pde(SimplexPde which, const Index3& idx, const SimplexParams& p) {
  return make_report("pde", simplex_pde_name(which), simplex_member(idx, p), pde_residual_3d(which, idx, p), MPoly());
}

SecondOrderOperator classical_simplex_operator(const Index3& idx, const FourParams& p) {
  const MPoly x = X(), y = Y(), z = Z();
  const MPoly one(Rational(1));
  const Rational n = rational(idx.n());
  const Rational S = p.alpha + p.beta + p.gamma + p.delta;
  SecondOrderOperator o;
  o.cxx = x * (one - x);
  o.cyy = y * (one - y);
  o.czz = z * (one - z);
  o.cxz = x * z * Rational(-2);
  o.cyz = y * z * Rational(-2);
  o.cxy = x * y * Rational(-2);
  o.cx = MPoly(Rational(p.alpha + 1)) - x * Rational(S + 4);
  o.cy = MPoly(Rational(p.beta + 1)) - y * Rational(S + 4);
  o.cz = MPoly(Rational(p.gamma + 1)) - z * Rational(S + 4);
  o.c0 = Rational(n * (n + S + 3));
  return o;
}

MPoly classical_simplex_explicit(const Index3& idx, const FourParams& p) {
  if (idx.n1 < 0 || idx.n2 < 0 || idx.n3 < 0) return {};
  const MPoly one(Rational(1));
  const Rational px = p.beta + p.gamma + p.delta + rational(2 * idx.n2 + 2 * idx.n3 + 2);
  const Rational py = p.gamma + p.delta + rational(2 * idx.n3 + 1);
  return homogenized_jacobi_binomial(idx.n1, {px, p.alpha}, X(), one) *
         homogenized_jacobi_binomial(idx.n2, {py, p.beta}, Y(), one_minus_x()) *
         homogenized_jacobi_binomial(idx.n3, {p.delta, p.gamma}, Z(), one_minus_x_y());
}

VerificationReport verify_reduction_ab0(const Index3& idx, const FourParams& p) {
  const Member at = simplex_member(idx, p);
  return make_report(kSuite, "ab0-reduction", at, simplex_family(at), classical_simplex_explicit(idx, p));
}

VerificationReport verify_t1_reduction_ab0(const Index3& idx, const FourParams& p) {
  const Member at = simplex_member(idx, p);
  const SecondOrderOperator t1 = simplex_pde_operator(SimplexPde::T1, idx, SimplexParams{p.alpha, p.beta, p.gamma,
                                                                                          p.delta, Rational(0),
                                                                                          Rational(0)});
  const SecondOrderOperator c = classical_simplex_operator(idx, p);
  const std::array<std::pair<const char*, std::pair<const MPoly*, const MPoly*>>, 10> pairs = {{
      {"u", {&t1.c0, &c.c0}},
      {"u_x", {&t1.cx, &c.cx}},
      {"u_y", {&t1.cy, &c.cy}},
      {"u_z", {&t1.cz, &c.cz}},
      {"u_xx", {&t1.cxx, &c.cxx}},
      {"u_yy", {&t1.cyy, &c.cyy}},
      {"u_zz", {&t1.czz, &c.czz}},
      {"u_xy", {&t1.cxy, &c.cxy}},
      {"u_xz", {&t1.cxz, &c.cxz}},
      {"u_yz", {&t1.cyz, &c.cyz}},
  }};
  for (const auto& [name, coeffs] : pairs) {
    const MPoly rhs = *coeffs.second * t1.denom;
    if (*coeffs.first != rhs) {
      VerificationReport r = make_report("pde", "T1-ab0", at, *coeffs.first, rhs);
      r.detail = std::string("coefficient of ") + name + " differs";
      return r;
    }
  }
  VerificationReport r = make_report("pde", "T1-ab0", at, MPoly(), MPoly());
  r.detail = "all 10 coefficients agree";
  return r;
}

namespace {

// n1! Gamma(e+n+n2+n3+3) / Gamma(e+2n+3) y^n2 z^n3 P~_n1^(...)(x).
MPoly monic_simplex_raw(const Index3& idx, const SimplexParams& p) {
  const Rational px = p.beta + p.gamma + p.delta + p.a + p.b + rational(2 * idx.n2 + 2 * idx.n3 + 2);
  const Rational pref = factorial(idx.n1) * gamma_ratio({p.e() + rational(2 * idx.n() + 3), -idx.n1});
  return Y().pow(static_cast<unsigned>(idx.n2)) * Z().pow(static_cast<unsigned>(idx.n3)) *
         shifted_jacobi(idx.n1, {px, p.alpha}) * pref;
}

}  // namespace

MPoly monic_simplex(const Index3& idx, const SimplexParams& p) {
  const MPoly raw = monic_simplex_raw(idx, p);
  const Rational lead = raw.coeff(monomial_of(idx));
  if (lead == 0) throw PoleHit("monic_simplex: vanishing leading coefficient");
  return raw * Rational(1 / lead);
}

MPoly monic_simplex_hypergeometric(const Index3& idx, const SimplexParams& p) {
  // (-1)^n1 (alpha+1)_n1 Gamma(e+n+n2+n3+3)/Gamma(e+2n+3) y^n2 z^n3
  // 2F1(-n1, e+n+n2+n3+3; alpha+1; x)
  Rational pref = pochhammer(p.alpha + 1, idx.n1) * gamma_ratio({p.e() + rational(2 * idx.n() + 3), -idx.n1});
  if (idx.n1 % 2 != 0) pref = -pref;
  return Y().pow(static_cast<unsigned>(idx.n2)) * Z().pow(static_cast<unsigned>(idx.n3)) *
         hyper2F1_terminating(idx.n1, p.e() + rational(idx.n() + idx.n2 + idx.n3 + 3), p.alpha + 1, X()) * pref;
}

VerificationReport verify_monic_simplex(const Index3& idx, const SimplexParams& p) {
  const Member at = simplex_member(idx, p);
  const char* name = "monic-simplex";
  try {
    const MPoly raw = monic_simplex_raw(idx, p);
    const Rational lead = raw.coeff(monomial_of(idx));
    if (lead != 1) return failure("monic", name, at, "leading coefficient " + to_string(lead));
    const MPoly hyp = monic_simplex_hypergeometric(idx, p);
    if (raw != hyp) {
      VerificationReport r = make_report("monic", name, at, raw, hyp);
      r.detail = "Jacobi and hypergeometric forms differ";
      return r;
    }
    VerificationReport r =
        make_report("monic", name, at, simplex_pde_operator(SimplexPde::T4, idx, p).numerator(raw), MPoly());
    if (r.status == Status::Pass) r.detail = "unit leading coefficient, T4 residual 0";
    return r;
  } catch (const PoleHit& e) {
    return not_applicable("monic", name, at, e.what());
  }
}

MPoly ConnectionExpansion::reassemble() const {
  MPoly out;
  const MPoly s1 = one_minus_x(), s2 = one_minus_x_y();
  for (const ConnectionTerm& t : terms) {
    if (t.coeff == 0) continue;
    out += s1.pow(t.s1_power) * s2.pow(t.s2_power) * simplex_poly(t.index, target_params) * t.coeff;
  }
  return out;
}

ConnectionExpansion connect_alpha(const Index3& idx, const SimplexParams& p, const Rational& xi) {
  ConnectionExpansion ex;
  ex.source = idx;
  ex.source_params = p;
  ex.target_params = p;
  ex.target_params.alpha = xi;
  const Rational e = p.e(), al = p.alpha;
  const std::int64_t n = idx.n(), n23 = idx.n2 + idx.n3;
  for (std::int64_t m = 0; m <= idx.n1; ++m) {
    const Rational mm = rational(m);
    // Gamma quotients paired so that each pair has an integer offset.
    Rational c = rational(2 * n - 2 * m + 3) + e - al + xi;
    c *= pochhammer(al - xi, m) / factorial(m);
    c *= gamma_ratio({rational(n + n23 + 3) - mm + e - al, m});
    c *= gamma_ratio({rational(n + n23 + 3) + e, idx.n1 - m});
    c *= gamma_ratio({rational(2 * n + 4) - mm + e - al + xi, -(idx.n1 + 1)});
    if (m % 2 != 0) c = -c;
    ex.terms.push_back({{idx.n1 - m, idx.n2, idx.n3}, c, 0, 0});
  }
  return ex;
}

ConnectionExpansion connect_general(const Index3& idx, const SimplexParams& p, const ConnectionTarget& target) {
  ConnectionExpansion ex;
  ex.source = idx;
  ex.source_params = p;
  ex.target_params = SimplexParams{target.phi, target.theta, target.eta, target.xi, p.a, p.b};
  const Rational &be = p.beta, &ga = p.gamma, &de = p.delta, &a = p.a, &b = p.b;
  const Rational &ph = target.phi, &th = target.theta, &et = target.eta, &xi = target.xi;
  const Rational e = p.e();
  const std::int64_t n1 = idx.n1, n2 = idx.n2, n3 = idx.n3;
  const Rational N1 = rational(n1), N2 = rational(n2), N3 = rational(n3);
  for (std::int64_t k1 = 0; k1 <= n1; ++k1) {
    for (std::int64_t k2 = 0; k2 <= n2; ++k2) {
      for (std::int64_t k3 = 0; k3 <= n3; ++k3) {
        const Rational K1 = rational(k1), K2 = rational(k2), K3 = rational(k3);
        const Rational tx = K1 + 2 * K2 + 2 * K3 + th + xi + et + a + b;
        const Rational ty = K2 + 2 * K3 + xi + et + b;
        // x factor
        const Rational ax = K1 + 2 * N2 + 2 * N3 + be + ga + de + a + b + 3;
        const Rational bx = N1 + 2 * N2 + 2 * N3 + e + 3;
        Rational c = pochhammer(ax, n1 - k1) * pochhammer(bx, k1) /
                     (factorial(n1 - k1) * pochhammer(tx + ph + 3, k1));
        c *= hyper3F2_unit(n1 - k1, bx + K1, tx + 3, tx + K1 + ph + 4, ax);
        // y factor
        const Rational ay = K2 + 2 * N3 + ga + de + b + 2;
        const Rational by = N2 + 2 * N3 + be + ga + de + b + 2;
        c *= pochhammer(ay, n2 - k2) * pochhammer(by, k2) / (factorial(n2 - k2) * pochhammer(ty + th + 2, k2));
        c *= hyper3F2_unit(n2 - k2, by + K2, ty + 2, ty + K2 + th + 3, ay);
        // z factor
        const Rational az = K3 + de + 1;
        const Rational bz = N3 + ga + de + 1;
        c *= pochhammer(az, n3 - k3) * pochhammer(bz, k3) / (factorial(n3 - k3) * pochhammer(K3 + xi + et + 1, k3));
        c *= hyper3F2_unit(n3 - k3, bz + K3, K3 + xi + 1, 2 * K3 + xi + et + 2, az);
        ex.terms.push_back({{k1, k2, k3},
                            c,
                            static_cast<unsigned>(n2 - k2),
                            static_cast<unsigned>(n3 - k3)});
      }
    }
  }
  return ex;
}

namespace {

VerificationReport verify_expansion(const char* name, const Member& at,
                                    const std::function<ConnectionExpansion()>& build) {
  try {
    const ConnectionExpansion ex = build();
    return make_report("connections", name, at, ex.reassemble(), simplex_family(at));
  } catch (const PoleHit& e) {
    return not_applicable("connections", name, at, e.what());
  }
}

}  // namespace

VerificationReport verify_connect_alpha(const Index3& idx, const SimplexParams& p, const Rational& xi) {
  return verify_expansion("connect-alpha", simplex_member(idx, p), [&] { return connect_alpha(idx, p, xi); });
}

VerificationReport verify_connect_general(const Index3& idx, const SimplexParams& p,
                                          const ConnectionTarget& target) {
  return verify_expansion("connect-general", simplex_member(idx, p),
                          [&] { return connect_general(idx, p, target); });
}

ThreeTerm three_term_x(const Index3& idx, const SimplexParams& p) {
  const Rational e = p.e(), al = p.alpha;
  const Rational n = rational(idx.n()), n1 = rational(idx.n1), n23 = rational(idx.n2 + idx.n3);
  const Rational d2 = e + 2 * n + 2, d3 = e + 2 * n + 3, d4 = e + 2 * n + 4;
  ThreeTerm t;
  if (idx.n1 == 0) {
    // d3 and d2 cancel against the numerators of A and B.
    if (d4 == 0) throw PoleHit("three_term_x: vanishing denominator");
    t.A = 1 / d4;
    t.B = (al + 1) / d4;
    t.C = 0;
    return t;
  }
  if (d2 == 0 || d3 == 0 || d4 == 0) throw PoleHit("three_term_x: vanishing denominator");
  t.A = (n1 + 1) * (e + n + n23 + 3) / (d3 * d4);
  t.B = ((al + 2 * n1 + 1) * d2 - 2 * n1 * (al + n1)) / (d2 * d4);
  t.C = (n + n23 + e - al + 2) * (al + n1) / (d2 * d3);
  return t;
}

VerificationReport verify_three_term(const Index3& idx, const SimplexParams& p) {
  const Member at = simplex_member(idx, p);
  try {
    const ThreeTerm t = three_term_x(idx, p);
    const MPoly rhs = simplex_poly({idx.n1 + 1, idx.n2, idx.n3}, p) * t.A + simplex_poly(idx, p) * t.B +
                      simplex_poly({idx.n1 - 1, idx.n2, idx.n3}, p) * t.C;
    return make_report("three-term", "x-recurrence", at, X() * simplex_poly(idx, p), rhs);
  } catch (const PoleHit& e) {
    return not_applicable("three-term", "x-recurrence", at, e.what());
  }
}

namespace {

// coef(base) * P(base shifted by (dindex, dparams)); dparams cover
// (alpha, beta, gamma, delta).
struct Term {
  std::vector<int> dindex;
  std::vector<int> dparams;
  std::function<Rational(const View&)> coef;
};

MPoly combination(const Member& base, const std::vector<Term>& terms) {
  const View v(base);
  MPoly out;
  for (const Term& t : terms) {
    std::vector<int> dp = t.dparams;
    dp.resize(6, 0);
    const Rational c = t.coef(v);
    if (c == 0) continue;
    out += simplex_family(shifted(base, t.dindex, dp)) * c;
  }
  return out;
}

// Shorthands for the a = b = 0 family.
Rational S4(const View& v) { return v.al + v.be + v.ga + v.de; }
Rational f2(const View& v) { return v.n2 + 2 * v.n3 + v.be + v.ga + v.de + 2; }          // n2+2n3+b+g+d+2
Rational f1(const View& v) { return v.n2 + 2 * v.n3 + v.ga + v.de + 1; }                 // n2+2n3+g+d+1
Rational gA(const View& v) { return v.n + v.n2 + v.n3 + S4(v) + 3; }                     // n+n2+n3+S+3
Rational gB(const View& v) { return v.n + v.n2 + v.n3 + v.be + v.ga + v.de + 2; }        // n+n2+n3+b+g+d+2
Rational h2(const View& v) { return 2 * v.n2 + 2 * v.n3 + v.be + v.ga + v.de + 2; }      // 2n2+2n3+b+g+d+2
Rational h3(const View& v) { return 2 * v.n3 + v.ga + v.de + 1; }                        // 2n3+g+d+1
Rational hn(const View& v) { return 2 * v.n + S4(v) + 3; }                               // 2n+S+3

// m W^-1 D(W u) for W = x^e0 y^e1 z^e2 w^e3, D = dx d/dx + dy d/dy + dz d/dz
// and m the product of the factors selected in `use`.
MPoly weighted_cleared(const MPoly& u, const std::array<Rational, 4>& exps, const std::array<int, 3>& dir,
                       const std::array<bool, 4>& use) {
  const std::array<MPoly, 4> f = {X(), Y(), Z(), one_minus_x_y_z()};
  const std::array<int, 4> df = {dir[0], dir[1], dir[2], -dir[0] - dir[1] - dir[2]};
  const auto product_except = [&](int skip) {
    MPoly m(Rational(1));
    for (int k = 0; k < 4; ++k) {
      if (use[k] && k != skip) m *= f[k];
    }
    return m;
  };
  MPoly du;
  if (dir[0] != 0) du += diff(u, Var::X) * rational(dir[0]);
  if (dir[1] != 0) du += diff(u, Var::Y) * rational(dir[1]);
  if (dir[2] != 0) du += diff(u, Var::Z) * rational(dir[2]);
  MPoly out = product_except(-1) * du;
  for (int k = 0; k < 4; ++k) {
    if (df[k] == 0 || exps[k] == 0) continue;
    if (!use[k]) throw InvalidArgument("weighted_cleared: factor not cleared");
    out += product_except(k) * u * Rational(exps[k] * df[k]);
  }
  return out;
}

std::array<Rational, 4> exps_of(const View& v, int d0, int d1, int d2, int d3) {
  return {v.al + d0, v.be + d1, v.ga + d2, v.de + d3};
}

}  // namespace

const char* corollary_name(DerivCorollary which) {
  switch (which) {
    case DerivCorollary::XY: return "deriv-xy";
    case DerivCorollary::ZY: return "deriv-zy";
    case DerivCorollary::Z: return "deriv-z";
    case DerivCorollary::ZXY: return "deriv-z-xy";
  }
  return "?";
}

const char* corollary_name(WeightedCorollary which) {
  switch (which) {
    case WeightedCorollary::First: return "weighted-xy";
    case WeightedCorollary::Second: return "weighted-zy";
    case WeightedCorollary::Third: return "weighted-z";
    case WeightedCorollary::Fourth: return "weighted-z-xy";
  }
  return "?";
}

const char* corollary_name(MultCorollary which) {
  switch (which) {
    case MultCorollary::X: return "mult-x";
    case MultCorollary::Y: return "mult-y";
    case MultCorollary::Z: return "mult-z";
    case MultCorollary::W: return "mult-w";
  }
  return "?";
}

VerificationReport verify_corollary_derivative(DerivCorollary which, const Index3& idx, const FourParams& p) {
  const Member at = simplex_member(idx, p);
  const View v(at);
  const MPoly u = simplex_family(at);
  const MPoly ux = diff(u, Var::X), uy = diff(u, Var::Y), uz = diff(u, Var::Z);
  MPoly lhs;
  std::vector<Term> rhs;
  switch (which) {
    case DerivCorollary::XY:
      lhs = (ux - uy) * h2(v);
      rhs = {{{-1, 0, 0}, {1, 1, 0, 0}, [](const View& t) -> Rational { return f2(t) * gA(t); }},
             {{0, -1, 0}, {1, 1, 0, 0},
              [](const View& t) -> Rational { return -(t.n1 + 2 * t.n2 + 2 * t.n3 + t.be + t.ga + t.de + 2) * f1(t); }}};
      break;
    case DerivCorollary::ZY:
      lhs = (uz - uy) * h3(v);
      rhs = {{{0, 0, -1}, {0, 1, 1, 0}, [](const View& t) -> Rational { return (t.n3 + t.de) * f1(t); }},
             {{0, -1, 0}, {0, 1, 1, 0},
              [](const View& t) -> Rational { return -f2(t) * (t.n3 + t.ga + t.de + 1); }}};
      break;
    case DerivCorollary::Z:
      lhs = uz;
      rhs = {{{0, 0, -1}, {0, 0, 1, 1}, [](const View& t) -> Rational { return t.n3 + t.ga + t.de + 1; }}};
      break;
    case DerivCorollary::ZXY:
      lhs = (diff(ux, Var::Z) - diff(uy, Var::Z)) * h2(v);
      rhs = {{{-1, 0, -1}, {1, 1, 1, 1},
              [](const View& t) -> Rational { return f2(t) * gA(t) * (t.n3 + t.ga + t.de + 1); }},
             {{0, -1, -1}, {1, 1, 1, 1}, [](const View& t) -> Rational {
                return -(t.n1 + 2 * t.n2 + 2 * t.n3 + t.be + t.ga + t.de + 2) * f1(t) * (t.n3 + t.ga + t.de + 1);
              }}};
      break;
  }
  return make_report("corollaries", corollary_name(which), at, lhs, combination(at, rhs));
}

VerificationReport verify_corollary_weighted(WeightedCorollary which, const Index3& idx, const FourParams& p) {
  const Member at = simplex_member(idx, p);
  const View v(at);
  const MPoly u = simplex_family(at);
  MPoly lhs;
  std::vector<Term> rhs;
  switch (which) {
    case WeightedCorollary::First:
      // Cleared by x y.
      lhs = weighted_cleared(u, exps_of(v, 0, 0, 0, 0), {1, -1, 0}, {true, true, false, false}) * h2(v);
      rhs = {{{0, 1, 0}, {-1, -1, 0, 0}, [](const View& t) -> Rational { return (t.n1 + t.al) * (t.n2 + 1); }},
             {{1, 0, 0}, {-1, -1, 0, 0}, [](const View& t) -> Rational { return -(t.n1 + 1) * (t.n2 + t.be); }}};
      break;
    case WeightedCorollary::Second:
      // Cleared by y z.
      lhs = weighted_cleared(u, exps_of(v, 0, 0, 0, 0), {0, -1, 1}, {false, true, true, false}) * h3(v);
      rhs = {{{0, 0, 1}, {0, -1, -1, 0}, [](const View& t) -> Rational { return -(t.n2 + t.be) * (t.n3 + 1); }},
             {{0, 1, 0}, {0, -1, -1, 0}, [](const View& t) -> Rational { return (t.n2 + 1) * (t.n3 + t.ga); }}};
      break;
    case WeightedCorollary::Third:
      // Cleared by z w.
      lhs = weighted_cleared(u, exps_of(v, 0, 0, 0, 0), {0, 0, 1}, {false, false, true, true});
      rhs = {{{0, 0, 1}, {0, 0, -1, -1}, [](const View& t) -> Rational { return -(t.n3 + 1); }}};
      break;
    case WeightedCorollary::Fourth: {
      // Cleared by x y, then by z w after the second derivative.
      const MPoly g = weighted_cleared(u, exps_of(v, 0, 0, 0, 0), {1, -1, 0}, {true, true, false, false});
      lhs = weighted_cleared(g, exps_of(v, -1, -1, 0, 0), {0, 0, 1}, {false, false, true, true}) * h2(v);
      rhs = {{{0, 1, 1}, {-1, -1, -1, -1},
              [](const View& t) -> Rational { return -(t.n1 + t.al) * (t.n2 + 1) * (t.n3 + 1); }},
             {{1, 0, 1}, {-1, -1, -1, -1},
              [](const View& t) -> Rational { return (t.n1 + 1) * (t.n2 + t.be) * (t.n3 + 1); }}};
      break;
    }
  }
  return make_report("corollaries", corollary_name(which), at, lhs, combination(at, rhs));
}

VerificationReport verify_corollary_multiplication(MultCorollary which, const Index3& idx, const FourParams& p) {
  const Member at = simplex_member(idx, p);
  const View v(at);
  const MPoly u = simplex_family(at);
  MPoly lhs;
  std::vector<Term> rhs;
  switch (which) {
    case MultCorollary::X:
      lhs = X() * u * hn(v);
      rhs = {{{0, 0, 0}, {-1, 0, 0, 0}, [](const View& t) -> Rational { return t.n1 + t.al; }},
             {{1, 0, 0}, {-1, 0, 0, 0}, [](const View& t) -> Rational { return t.n1 + 1; }}};
      break;
    case MultCorollary::Y: {
      lhs = Y() * u * Rational(hn(v) * h2(v));
      const std::vector<int> dp = {0, -1, 0, 0};
      rhs = {{{0, 0, 0}, dp, [](const View& t) -> Rational { return gB(t) * (t.n2 + t.be); }},
             {{0, 1, 0}, dp, [](const View& t) -> Rational { return gA(t) * (t.n2 + 1); }},
             {{1, 0, 0}, dp, [](const View& t) -> Rational { return -(t.n1 + 1) * (t.n2 + t.be); }},
             {{-1, 1, 0}, dp, [](const View& t) -> Rational { return -(t.n1 + t.al) * (t.n2 + 1); }}};
      break;
    }
    case MultCorollary::Z: {
      lhs = Z() * u * Rational(hn(v) * h2(v) * h3(v));
      const std::vector<int> dp = {0, 0, -1, 0};
      rhs = {{{0, 0, 0}, dp, [](const View& t) -> Rational { return gB(t) * f1(t) * (t.n3 + t.ga); }},
             {{1, 0, 0}, dp, [](const View& t) -> Rational { return -(t.n1 + 1) * f1(t) * (t.n3 + t.ga); }},
             {{0, 1, 0}, dp, [](const View& t) -> Rational { return -gA(t) * (t.n2 + 1) * (t.n3 + t.ga); }},
             {{-1, 1, 0}, dp, [](const View& t) -> Rational { return (t.n1 + t.al) * (t.n2 + 1) * (t.n3 + t.ga); }},
             {{0, 0, 1}, dp, [](const View& t) -> Rational { return gA(t) * f2(t) * (t.n3 + 1); }},
             {{-1, 0, 1}, dp, [](const View& t) -> Rational { return -(t.n1 + t.al) * f2(t) * (t.n3 + 1); }},
             {{0, -1, 1}, dp, [](const View& t) -> Rational { return -gB(t) * (t.n2 + t.be) * (t.n3 + 1); }},
             {{1, -1, 1}, dp, [](const View& t) -> Rational { return (t.n1 + 1) * (t.n2 + t.be) * (t.n3 + 1); }}};
      break;
    }
    case MultCorollary::W: {
      lhs = one_minus_x_y_z() * u * Rational(hn(v) * h2(v) * h3(v));
      const std::vector<int> dp = {0, 0, 0, -1};
      rhs = {{{0, 0, 1}, dp, [](const View& t) -> Rational { return -gA(t) * f2(t) * (t.n3 + 1); }},
             {{-1, 0, 1}, dp, [](const View& t) -> Rational { return (t.n1 + t.al) * f2(t) * (t.n3 + 1); }},
             {{0, -1, 1}, dp, [](const View& t) -> Rational { return gB(t) * (t.n2 + t.be) * (t.n3 + 1); }},
             {{1, -1, 1}, dp, [](const View& t) -> Rational { return -(t.n1 + 1) * (t.n2 + t.be) * (t.n3 + 1); }},
             {{0, 0, 0}, dp, [](const View& t) -> Rational { return gB(t) * f1(t) * (t.n3 + t.de); }},
             {{1, 0, 0}, dp, [](const View& t) -> Rational { return -(t.n1 + 1) * f1(t) * (t.n3 + t.de); }},
             {{0, 1, 0}, dp, [](const View& t) -> Rational { return -gA(t) * (t.n2 + 1) * (t.n3 + t.de); }},
             {{-1, 1, 0}, dp, [](const View& t) -> Rational { return (t.n1 + t.al) * (t.n2 + 1) * (t.n3 + t.de); }}};
      break;
    }
  }
  return make_report("corollaries", corollary_name(which), at, lhs, combination(at, rhs));
}

}  // namespace simplexpoly
