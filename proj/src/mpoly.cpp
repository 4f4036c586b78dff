#include "simplexpoly/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "simplexpoly/errors.hpp"

namespace simplexpoly {

std::uint64_t Monomial::exponent(Var v) const {
  switch (v) {
    case Var::X: return x;
    case Var::Y: return y;
    case Var::Z: return z;
  }
  return 0;
}

namespace {

Monomial operator+(const Monomial& a, const Monomial& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

bool divides(const Monomial& d, const Monomial& m) { return d.x <= m.x && d.y <= m.y && d.z <= m.z; }

Monomial operator-(const Monomial& m, const Monomial& d) { return {m.x - d.x, m.y - d.y, m.z - d.z}; }

Rational pow_rational(const Rational& base, std::uint64_t e) {
  Rational r(1);
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

MPoly::MPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MPoly MPoly::variable(Var v) {
  Monomial m;
  switch (v) {
    case Var::X: m.x = 1; break;
    case Var::Y: m.y = 1; break;
    case Var::Z: m.z = 1; break;
  }
  return monomial(m, Rational(1));
}

MPoly MPoly::monomial(const Monomial& m, const Rational& coeff) {
  MPoly p;
  p.add_term(m, coeff);
  return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t MPoly::degree(Var v) const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::uint64_t MPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma + mb, prod);
    }
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(Rational(1));
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational MPoly::eval(const Point& at) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    sum += c * pow_rational(at.x, m.x) * pow_rational(at.y, m.y) * pow_rational(at.z, m.z);
  }
  return sum;
}

double MPoly::eval(double x, double y, double z) const {
  const auto ipow = [](double b, std::uint64_t e) {
    double r = 1.0;
    for (std::uint64_t i = 0; i < e; ++i) r *= b;
    return r;
  };
  double sum = 0.0;
  for (const auto& [m, c] : terms_) sum += c.get_d() * ipow(x, m.x) * ipow(y, m.y) * ipow(z, m.z);
  return sum;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    if (l.first.total_degree() != r.first.total_degree()) return l.first.total_degree() > r.first.total_degree();
    return l.first > r.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = c;
    if (first) {
      if (c < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) mag = -c;
    }
    first = false;
    os << simplexpoly::to_string(mag);
    if (m.total_degree() == 0) continue;
    os << " *";
    if (m.x > 0) os << " x^" << m.x;
    if (m.y > 0) os << " y^" << m.y;
    if (m.z > 0) os << " z^" << m.z;
  }
  return os.str();
}

MPoly add(const MPoly& p, const MPoly& q) { return p + q; }
MPoly mul(const MPoly& p, const MPoly& q) { return p * q; }

MPoly diff(const MPoly& p, Var v) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    const auto e = m.exponent(v);
    if (e == 0) continue;
    Monomial lowered = m;
    switch (v) {
      case Var::X: lowered.x -= 1; break;
      case Var::Y: lowered.y -= 1; break;
      case Var::Z: lowered.z -= 1; break;
    }
    out += MPoly::monomial(lowered, c * Rational(static_cast<unsigned long>(e)));
  }
  return out;
}

DivisionResult divide(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *d.terms().rbegin();
  DivisionResult result;
  MPoly rest = p;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().rbegin();
    if (divides(lead_m, m)) {
      const MPoly t = MPoly::monomial(m - lead_m, c / lead_c);
      result.quotient += t;
      rest -= t * d;
    } else {
      const MPoly t = MPoly::monomial(m, c);
      result.remainder += t;
      rest -= t;
    }
  }
  return result;
}

MPoly div_exact(const MPoly& p, const MPoly& d) {
  if (d.terms().size() == 1 && d.terms().begin()->first.total_degree() == 0) {
    return p * Rational(1 / d.terms().begin()->second);
  }
  auto [q, r] = divide(p, d);
  if (!r.is_zero()) {
    throw NonzeroRemainder("div_exact: (" + p.to_string() + ") / (" + d.to_string() + ") leaves remainder " +
                               r.to_string(),
                           r.to_string());
  }
  return q;
}

Rational eval(const MPoly& p, const Point& at) { return p.eval(at); }

MPoly one_minus_x() { return MPoly(Rational(1)) - X(); }
MPoly one_minus_x_y() { return MPoly(Rational(1)) - X() - Y(); }
MPoly one_minus_x_y_z() { return MPoly(Rational(1)) - X() - Y() - Z(); }

}  // namespace simplexpoly
