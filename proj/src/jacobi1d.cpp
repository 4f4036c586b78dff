#include "simplexpoly/jacobi1d.hpp"

#include <cmath>

#include "simplexpoly/relations.hpp"
#include "simplexpoly/special.hpp"

namespace simplexpoly {

namespace {

const char* const kSuite = "ladder1d";
const char* const kSecondOrderSuite = "second-order";

Rational N(const Member& m) { return rational(m.index[0]); }
const Rational& A(const Member& m) { return m.params[0]; }
const Rational& B(const Member& m) { return m.params[1]; }

Rational binomial(std::uint64_t m, std::uint64_t j) {
  Rational r(1);
  for (std::uint64_t i = 0; i < j; ++i) r = r * rational(static_cast<std::int64_t>(m - i)) / rational(static_cast<std::int64_t>(i + 1));
  return r;
}

}  // namespace

const char* ladder_name(LadderOp op) {
  switch (op) {
    case LadderOp::L1: return "L1";
    case LadderOp::L2: return "L2";
    case LadderOp::L3: return "L3";
    case LadderOp::L4: return "L4";
    case LadderOp::L5: return "L5";
    case LadderOp::L6: return "L6";
    case LadderOp::L1p: return "L1p";
    case LadderOp::L2p: return "L2p";
    case LadderOp::L3p: return "L3p";
    case LadderOp::L4p: return "L4p";
    case LadderOp::L5p: return "L5p";
    case LadderOp::L6p: return "L6p";
  }
  return "?";
}

std::vector<Rational> shifted_jacobi_coefficients(std::int64_t n, const Rational& a, const Rational& b) {
  if (n < 0) return {};
  // P = sum_m c_m (1-x)^m, c_m = (-n)_m (n+a+b+1)_m (a+m+1)_(n-m) / (n! m!)
  const Rational nf = factorial(n);
  std::vector<Rational> out(static_cast<std::size_t>(n + 1), Rational(0));
  Rational head(1);  // (-n)_m (n+a+b+1)_m / m!
  for (std::int64_t m = 0; m <= n; ++m) {
    if (m > 0) head = head * rational(m - 1 - n) * (rational(n + m - 1) + a + b + 1) / rational(m);
    const Rational cm = head * pochhammer(a + rational(m + 1), n - m) / nf;
    if (cm == 0) continue;
    for (std::int64_t j = 0; j <= m; ++j) {
      Rational t = cm * binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(j));
      if (j % 2 == 1) t = -t;
      out[static_cast<std::size_t>(j)] += t;
    }
  }
  return out;
}

MPoly shifted_jacobi(std::int64_t n, const JacobiParams& p) {
  MPoly out;
  const auto c = shifted_jacobi_coefficients(n, p.a, p.b);
  for (std::size_t j = 0; j < c.size(); ++j) out += MPoly::monomial(Monomial{j, 0, 0}, c[j]);
  return out;
}

MPoly homogenized_jacobi(std::int64_t n, const JacobiParams& p, const MPoly& t, const MPoly& s) {
  MPoly out;
  const auto c = shifted_jacobi_coefficients(n, p.a, p.b);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    out += t.pow(static_cast<unsigned>(j)) * s.pow(static_cast<unsigned>(c.size() - 1 - j)) * c[j];
  }
  return out;
}

MPoly homogenized_jacobi_binomial(std::int64_t n, const JacobiParams& p, const MPoly& t, const MPoly& s) {
  if (n < 0) return {};
  const auto binom = [](const Rational& top, std::int64_t j) -> Rational {
    Rational r(1);
    for (std::int64_t i = 0; i < j; ++i) r = r * (top - rational(i)) / rational(i + 1);
    return r;
  };
  MPoly out;
  const MPoly tms = t - s;
  for (std::int64_t j = 0; j <= n; ++j) {
    out += tms.pow(static_cast<unsigned>(j)) * t.pow(static_cast<unsigned>(n - j)) *
           Rational(binom(rational(n) + p.a, n - j) * binom(rational(n) + p.b, j));
  }
  return out;
}

MPoly shifted_jacobi_hypergeometric(std::int64_t n, const JacobiParams& p) {
  if (n < 0) return {};
  const Rational a1 = p.a + 1;
  return hyper2F1_terminating(n, rational(n) + p.a + p.b + 1, a1, one_minus_x()) *
         Rational(pochhammer(a1, n) / factorial(n));
}

Rational norm_ratio(std::int64_t n, const JacobiParams& p) {
  if (n < 0) throw InvalidArgument("norm_ratio: negative degree");
  if (n == 0) return Rational(1);
  const Rational s = p.a + p.b;
  return pochhammer(p.a + 1, n) * pochhammer(p.b + 1, n) /
         (factorial(n) * (s + rational(2 * n + 1)) * pochhammer(s + 2, n - 1));
}

double norm_h0(const JacobiParams& p) {
  const double a = to_double(p.a);
  const double b = to_double(p.b);
  return std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
}

Member jacobi_member(std::int64_t n, const JacobiParams& p) { return Member{{n}, {p.a, p.b}}; }

MPoly jacobi_family(const Member& m) { return shifted_jacobi(m.index[0], {m.params[0], m.params[1]}); }

DiffOperator ladder_operator(LadderOp op, std::int64_t n, const JacobiParams& p) {
  const MPoly x = X();
  const MPoly s = one_minus_x();
  const Rational nn = rational(n);
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational abn1 = a + b + nn + 1;
  DiffOperator d;
  switch (op) {
    case LadderOp::L1: d.cx = Rational(1); break;
    case LadderOp::L2: d.c0 = abn1; d.cx = x; break;
    case LadderOp::L3: d.c0 = abn1; d.cx = -s; break;
    case LadderOp::L4: d.c0 = x * a - s * Rational(b + nn + 1); d.cx = -(x * s); break;
    case LadderOp::L5: d.c0 = x * Rational(a + nn + 1) - s * b; d.cx = -(x * s); break;
    case LadderOp::L6: d.c0 = b; d.cx = x; break;
    case LadderOp::L1p: d.c0 = x * a - s * b; d.cx = -(x * s); break;
    case LadderOp::L2p: d.c0 = MPoly(a) + s * nn; d.cx = -(x * s); break;
    case LadderOp::L3p: d.c0 = MPoly(b) + x * nn; d.cx = x * s; break;
    case LadderOp::L4p: d.c0 = Rational(-nn); d.cx = x; break;
    case LadderOp::L5p: d.c0 = nn; d.cx = s; break;
    case LadderOp::L6p: d.c0 = a; d.cx = -s; break;
  }
  return d;
}

DiffOperator ladder_operator(LadderOp op, const Member& m) {
  return ladder_operator(op, m.index[0], {m.params[0], m.params[1]});
}

const std::vector<SparseRelation<LadderOp>>& ladder_relations() {
  using L = LadderOp;
  static const std::vector<SparseRelation<LadderOp>> table = {
      {L::L1, {-1}, {1, 1}, [](const Member& m) { return Rational(N(m) + A(m) + B(m) + 1); }},
      {L::L2, {0}, {1, 0}, [](const Member& m) { return Rational(N(m) + A(m) + B(m) + 1); }},
      {L::L3, {0}, {0, 1}, [](const Member& m) { return Rational(N(m) + A(m) + B(m) + 1); }},
      {L::L4, {1}, {-1, 0}, [](const Member& m) { return Rational(N(m) + 1); }},
      {L::L5, {1}, {0, -1}, [](const Member& m) { return Rational(N(m) + 1); }},
      {L::L6, {0}, {1, -1}, [](const Member& m) { return Rational(N(m) + B(m)); }},
      {L::L1p, {1}, {-1, -1}, [](const Member& m) { return Rational(N(m) + 1); }},
      {L::L2p, {0}, {-1, 0}, [](const Member& m) { return Rational(N(m) + A(m)); }},
      {L::L3p, {0}, {0, -1}, [](const Member& m) { return Rational(N(m) + B(m)); }},
      {L::L4p, {-1}, {1, 0}, [](const Member& m) { return Rational(N(m) + B(m)); }},
      {L::L5p, {-1}, {0, 1}, [](const Member& m) { return Rational(N(m) + A(m)); }},
      {L::L6p, {0}, {-1, 1}, [](const Member& m) { return Rational(N(m) + A(m)); }},
  };
  return table;
}

const SparseRelation<LadderOp>& ladder_relation(LadderOp op) { return ladder_relations()[static_cast<int>(op)]; }

const std::vector<CompositionIdentity<LadderOp>>& second_order_identities_1d() {
  using L = LadderOp;
  using Id = CompositionIdentity<LadderOp>;
  static const std::vector<Id> table = [] {
    const auto n = [](const Member& m) { return N(m); };
    const auto a = [](const Member& m) { return A(m); };
    const auto b = [](const Member& m) { return B(m); };
    std::vector<Id> t = {
        {"L1p*L1:shifted", L::L1, L::L1p, {0}, {-1, -1},
         [=](const Member& m) { return Rational(n(m) * (n(m) + a(m) + b(m) - 1)); }},
        {"L1*L1p:shifted", L::L1p, L::L1, {0}, {0, 0},
         [=](const Member& m) { return Rational((n(m) + 1) * (a(m) + b(m) + n(m))); }},
        {"L2p*L2:shifted", L::L2, L::L2p, {0}, {-1, 1},
         [=](const Member& m) { return Rational((n(m) + a(m)) * (n(m) + a(m) + b(m) + 1)); }},
        {"L2*L2p:shifted", L::L2p, L::L2, {0}, {0, 1},
         [=](const Member& m) { return Rational((n(m) + a(m)) * (n(m) + a(m) + b(m) + 1)); }},
        {"L3p*L3:shifted", L::L3, L::L3p, {0}, {1, -1},
         [=](const Member& m) { return Rational((n(m) + b(m)) * (n(m) + a(m) + b(m) + 1)); }},
        {"L3*L3p:shifted", L::L3p, L::L3, {0}, {1, 0},
         [=](const Member& m) { return Rational((n(m) + b(m)) * (n(m) + a(m) + b(m) + 1)); }},
        {"L4p*L4:shifted", L::L4, L::L4p, {-1}, {0, 1},
         [=](const Member& m) { return Rational(n(m) * (n(m) + b(m) + 1)); }},
        {"L4*L4p:shifted", L::L4p, L::L4, {0}, {-1, 1},
         [=](const Member& m) { return Rational(n(m) * (n(m) + b(m) + 1)); }},
        {"L5p*L5:shifted", L::L5, L::L5p, {-1}, {1, 0},
         [=](const Member& m) { return Rational(n(m) * (n(m) + a(m) + 1)); }},
        {"L5*L5p:shifted", L::L5p, L::L5, {0}, {1, -1},
         [=](const Member& m) { return Rational(n(m) * (n(m) + a(m) + 1)); }},
        {"L6p*L6:shifted", L::L6, L::L6p, {0}, {-1, 0},
         [=](const Member& m) { return Rational((n(m) + a(m)) * (n(m) + b(m))); }},
        {"L6*L6p:shifted", L::L6p, L::L6, {0}, {0, -1},
         [=](const Member& m) { return Rational((n(m) + a(m)) * (n(m) + b(m))); }},

        {"L1p*L1", L::L1, L::L1p, {}, {}, [=](const Member& m) { return Rational(n(m) * (n(m) + a(m) + b(m) + 1)); }},
        {"L1*L1p", L::L1p, L::L1, {}, {},
         [=](const Member& m) { return Rational((n(m) + 1) * (a(m) + b(m) + n(m))); }},
        {"L2p*L2", L::L2, L::L2p, {}, {},
         [=](const Member& m) { return Rational((n(m) + a(m) + 1) * (n(m) + a(m) + b(m) + 1)); }},
        {"L2*L2p", L::L2p, L::L2, {}, {},
         [=](const Member& m) { return Rational((n(m) + a(m)) * (n(m) + a(m) + b(m))); }},
        {"L3p*L3", L::L3, L::L3p, {}, {},
         [=](const Member& m) { return Rational((n(m) + b(m) + 1) * (n(m) + a(m) + b(m) + 1)); }},
        {"L3*L3p", L::L3p, L::L3, {}, {},
         [=](const Member& m) { return Rational((n(m) + b(m)) * (n(m) + a(m) + b(m))); }},
        {"L4p*L4", L::L4, L::L4p, {}, {}, [=](const Member& m) { return Rational((n(m) + 1) * (n(m) + b(m) + 1)); }},
        {"L4*L4p", L::L4p, L::L4, {}, {}, [=](const Member& m) { return Rational(n(m) * (n(m) + b(m))); }},
        {"L5p*L5", L::L5, L::L5p, {}, {}, [=](const Member& m) { return Rational((n(m) + 1) * (n(m) + a(m) + 1)); }},
        {"L5*L5p", L::L5p, L::L5, {}, {}, [=](const Member& m) { return Rational(n(m) * (n(m) + a(m))); }},
        {"L6p*L6", L::L6, L::L6p, {}, {}, [=](const Member& m) { return Rational((n(m) + a(m) + 1) * (n(m) + b(m))); }},
        {"L6*L6p", L::L6p, L::L6, {}, {}, [=](const Member& m) { return Rational((n(m) + a(m)) * (n(m) + b(m) + 1)); }},
    };
    return t;
  }();
  return table;
}

VerificationReport verify_ladder(LadderOp op, std::int64_t n, const JacobiParams& p) {
  const OperatorFn<LadderOp> ops = [](LadderOp o, const Member& m) { return ladder_operator(o, m); };
  return verify_sparse<LadderOp>(kSuite, ladder_name(op), ladder_relation(op), jacobi_member(n, p), jacobi_family,
                                 ops);
}

VerificationReport verify_second_order_1d(const CompositionIdentity<LadderOp>& id, std::int64_t n,
                                          const JacobiParams& p) {
  const OperatorFn<LadderOp> ops = [](LadderOp o, const Member& m) { return ladder_operator(o, m); };
  return verify_composition<LadderOp>(kSecondOrderSuite, id, ladder_relation(id.first), jacobi_member(n, p),
                                      jacobi_family, ops);
}

}  // namespace simplexpoly
