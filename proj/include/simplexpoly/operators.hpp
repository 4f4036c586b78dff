#ifndef SIMPLEXPOLY_OPERATORS_HPP
#define SIMPLEXPOLY_OPERATORS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simplexpoly/mpoly.hpp"

namespace simplexpoly {

// u -> (c0 u + cx u_x + cy u_y + cz u_z) / denom, where denom is a product of
// factors from {1, 1-x, 1-x-y, 1-x-y-z}.
struct DiffOperator {
  MPoly c0;
  MPoly cx;
  MPoly cy;
  MPoly cz;
  MPoly denom = MPoly(Rational(1));

  MPoly numerator(const MPoly& u) const;
  // Throws NonzeroRemainder if the numerator is not divisible by denom.
  MPoly apply(const MPoly& u) const;
};

// Second order operator with all coefficients over one clearing denominator.
struct SecondOrderOperator {
  MPoly c0, cx, cy, cz;
  MPoly cxx, cyy, czz, cxy, cxz, cyz;
  MPoly denom = MPoly(Rational(1));

  MPoly numerator(const MPoly& u) const;
  MPoly apply(const MPoly& u) const;
  bool operator==(const SecondOrderOperator&) const = default;
};

// Accumulates rational-function coefficients b / (s1^i s2^j) over the common
// denominator s1^P s2^Q, with s1 = 1-x and s2 = 1-x-y.
class CoefficientBuilder {
 public:
  CoefficientBuilder(unsigned s1_power, unsigned s2_power);
  // Adds numerator / (s1^i s2^j); requires i <= P and j <= Q.
  CoefficientBuilder& add(const MPoly& numerator, unsigned i = 0, unsigned j = 0);
  MPoly take() const { return value_; }
  MPoly denominator() const;

 private:
  unsigned p_, q_;
  MPoly value_;
};

enum class Status { Pass, Fail, NotApplicable };

const char* status_name(Status s);

// A family member: integer index tuple plus rational parameter tuple.
struct Member {
  std::vector<std::int64_t> index;
  std::vector<Rational> params;
};

struct VerificationReport {
  std::string suite;
  std::string relation;
  std::vector<std::int64_t> index;
  std::vector<Rational> params;
  Status status = Status::Pass;
  std::string detail;
  // Both sides are kept on failure only.
  std::optional<MPoly> lhs;
  std::optional<MPoly> rhs;

  bool passed() const { return status != Status::Fail; }
};

// Compares lhs and rhs and fills the report.
VerificationReport make_report(std::string suite, std::string relation, const Member& at, const MPoly& lhs,
                               const MPoly& rhs);

VerificationReport not_applicable(std::string suite, std::string relation, const Member& at, std::string why);

VerificationReport failure(std::string suite, std::string relation, const Member& at, std::string why);

// One row of a sparse-relation table: op maps P(member) to
// scale(member) * P(member shifted by (dindex, dparams)).
template <class OpId>
struct SparseRelation {
  OpId op;
  std::vector<int> dindex;
  std::vector<int> dparams;
  std::function<Rational(const Member&)> scale;
};

// second(first(P(src))) = eigenvalue(base) * P(src), src = base shifted by
// (src_dindex, src_dparams). Each operator takes its parameters from the
// family member it acts on.
template <class OpId>
struct CompositionIdentity {
  std::string name;
  OpId first;
  OpId second;
  std::vector<int> src_dindex;
  std::vector<int> src_dparams;
  std::function<Rational(const Member&)> eigenvalue;
};

Member shifted(const Member& m, const std::vector<int>& dindex, const std::vector<int>& dparams);

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_OPERATORS_HPP
