#include "simplexpoly/operators.hpp"

#include "simplexpoly/errors.hpp"

namespace simplexpoly {

MPoly DiffOperator::numerator(const MPoly& u) const {
  MPoly out = c0 * u;
  if (!cx.is_zero()) out += cx * diff(u, Var::X);
  if (!cy.is_zero()) out += cy * diff(u, Var::Y);
  if (!cz.is_zero()) out += cz * diff(u, Var::Z);
  return out;
}

MPoly DiffOperator::apply(const MPoly& u) const { return div_exact(numerator(u), denom); }

MPoly SecondOrderOperator::numerator(const MPoly& u) const {
  const MPoly ux = diff(u, Var::X);
  const MPoly uy = diff(u, Var::Y);
  const MPoly uz = diff(u, Var::Z);
  MPoly out = c0 * u + cx * ux + cy * uy + cz * uz;
  if (!cxx.is_zero()) out += cxx * diff(ux, Var::X);
  if (!cyy.is_zero()) out += cyy * diff(uy, Var::Y);
  if (!czz.is_zero()) out += czz * diff(uz, Var::Z);
  if (!cxy.is_zero()) out += cxy * diff(ux, Var::Y);
  if (!cxz.is_zero()) out += cxz * diff(ux, Var::Z);
  if (!cyz.is_zero()) out += cyz * diff(uy, Var::Z);
  return out;
}

MPoly SecondOrderOperator::apply(const MPoly& u) const { return div_exact(numerator(u), denom); }

CoefficientBuilder::CoefficientBuilder(unsigned s1_power, unsigned s2_power) : p_(s1_power), q_(s2_power) {}

CoefficientBuilder& CoefficientBuilder::add(const MPoly& numerator, unsigned i, unsigned j) {
  if (i > p_ || j > q_) throw InvalidArgument("CoefficientBuilder: denominator power exceeds the common one");
  value_ += numerator * one_minus_x().pow(p_ - i) * one_minus_x_y().pow(q_ - j);
  return *this;
}

MPoly CoefficientBuilder::denominator() const { return one_minus_x().pow(p_) * one_minus_x_y().pow(q_); }

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

VerificationReport make_report(std::string suite, std::string relation, const Member& at, const MPoly& lhs,
                               const MPoly& rhs) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.relation = std::move(relation);
  r.index = at.index;
  r.params = at.params;
  if (lhs == rhs) {
    r.status = Status::Pass;
    if (rhs.is_zero()) r.detail = "0 = 0";
  } else {
    r.status = Status::Fail;
    r.detail = "lhs != rhs";
    r.lhs = lhs;
    r.rhs = rhs;
  }
  return r;
}

VerificationReport not_applicable(std::string suite, std::string relation, const Member& at, std::string why) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.relation = std::move(relation);
  r.index = at.index;
  r.params = at.params;
  r.status = Status::NotApplicable;
  r.detail = std::move(why);
  return r;
}

VerificationReport failure(std::string suite, std::string relation, const Member& at, std::string why) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.relation = std::move(relation);
  r.index = at.index;
  r.params = at.params;
  r.status = Status::Fail;
  r.detail = std::move(why);
  return r;
}

Member shifted(const Member& m, const std::vector<int>& dindex, const std::vector<int>& dparams) {
  Member out = m;
  for (std::size_t i = 0; i < dindex.size() && i < out.index.size(); ++i) out.index[i] += dindex[i];
  for (std::size_t i = 0; i < dparams.size() && i < out.params.size(); ++i) out.params[i] += rational(dparams[i]);
  return out;
}

}  // namespace simplexpoly
