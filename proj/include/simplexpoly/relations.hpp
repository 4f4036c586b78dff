#ifndef SIMPLEXPOLY_RELATIONS_HPP
#define SIMPLEXPOLY_RELATIONS_HPP

#include <functional>
#include <string>

#include "simplexpoly/errors.hpp"
#include "simplexpoly/operators.hpp"

namespace simplexpoly {

// Builds a family member; returns the zero polynomial for an invalid index.
using FamilyFn = std::function<MPoly(const Member&)>;

template <class OpId>
using OperatorFn = std::function<DiffOperator(OpId, const Member&)>;

// op(P(at)) == scale(at) * P(at + shift).
template <class OpId>
VerificationReport verify_sparse(const std::string& suite, const std::string& name, const SparseRelation<OpId>& rel,
                                 const Member& at, const FamilyFn& family, const OperatorFn<OpId>& op) {
  try {
    const MPoly lhs = op(rel.op, at).apply(family(at));
    const MPoly rhs = family(shifted(at, rel.dindex, rel.dparams)) * rel.scale(at);
    return make_report(suite, name, at, lhs, rhs);
  } catch (const NonzeroRemainder& e) {
    return failure(suite, name, at, std::string("nonzero remainder: ") + e.remainder());
  } catch (const PoleHit& e) {
    return not_applicable(suite, name, at, e.what());
  }
}

// second(first(P(src))) == eigenvalue(at) * P(src). The operator `second`
// is built from the member that `first` maps to.
template <class OpId>
VerificationReport verify_composition(const std::string& suite, const CompositionIdentity<OpId>& id,
                                      const SparseRelation<OpId>& first_rel, const Member& at,
                                      const FamilyFn& family, const OperatorFn<OpId>& op) {
  const Member src = shifted(at, id.src_dindex, id.src_dparams);
  for (auto i : src.index) {
    if (i < 0) return not_applicable(suite, id.name, at, "source index out of range");
  }
  try {
    const MPoly u = family(src);
    const Member mid = shifted(src, first_rel.dindex, first_rel.dparams);
    const MPoly lhs = op(id.second, mid).apply(op(id.first, src).apply(u));
    const MPoly rhs = u * id.eigenvalue(at);
    return make_report(suite, id.name, at, lhs, rhs);
  } catch (const NonzeroRemainder& e) {
    return failure(suite, id.name, at, std::string("nonzero remainder: ") + e.remainder());
  } catch (const PoleHit& e) {
    return not_applicable(suite, id.name, at, e.what());
  }
}

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_RELATIONS_HPP
