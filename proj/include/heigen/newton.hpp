#pragma once

#include <vector>

#include "heigen/condition.hpp"

namespace heigen {

template <typename Real = double>
struct NewtonStep {
  EigenPairCandidate<Real> cand;
  bool singular = false;
};

// One projective Newton step for F_f; the result is scaled to unit norm.
// A singular restriction leaves the point where it is and raises the flag.
template <typename Real>
NewtonStep<Real> newton_step(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c) {
  require(c.v.norm() > 0, "newton_step: v must be nonzero");
  const CMatrix<Real> J = ff_jacobian(f, c);
  const CMatrix<Real> Q = perp_basis(c, PerpMode::full_perp);
  CVector<Real> w;
  try {
    w = apply_restricted_inverse<Real>(J, Q, ff_eval(f, c));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularRestriction) throw;
    return {c, true};
  }
  CVector<Real> x = c.stacked() - w;
  const Real nx = x.norm();
  if (!(nx > 0) || !x.allFinite()) return {EigenPairCandidate<Real>::from_stacked(x), false};
  return {EigenPairCandidate<Real>::from_stacked(x / nx), false};
}

template <typename Real = double>
struct NewtonTrace {
  std::vector<EigenPairCandidate<Real>> iterates;
  std::vector<Real> residuals;   // ||F_f|| at the unit-norm representative
  std::vector<Real> proj_steps;  // d_proj to the previous iterate, 0 for the first
  bool singular = false;
};

// ||F_f(v, lambda)|| with ||(v, lambda)|| = 1
template <typename Real>
Real residual(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c) {
  return ff_eval(f, c.normalized()).norm();
}

template <typename Real>
NewtonTrace<Real> refine(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c, int k) {
  require(k >= 1, "refine: k must be >= 1");
  NewtonTrace<Real> tr;
  tr.iterates.push_back(c.normalized());
  tr.residuals.push_back(residual(f, c));
  tr.proj_steps.push_back(0);
  for (int i = 0; i < k; ++i) {
    NewtonStep<Real> s = newton_step(f, tr.iterates.back());
    if (!s.cand.finite()) throw Error(ErrorKind::NonFinite, "refine: non-finite iterate");
    tr.singular = tr.singular || s.singular;
    tr.proj_steps.push_back(d_proj(s.cand, tr.iterates.back()));
    tr.residuals.push_back(residual(f, s.cand));
    tr.iterates.push_back(std::move(s.cand));
  }
  return tr;
}

// Sufficient test that c is an approximate eigenpair with associated zero
// `target`: distance at most delta(r) and distance * gamma_bound <= u(r).
template <typename Real>
bool certify_approximate(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c,
                         const EigenPairCandidate<Real>& target, Real r = Real(0.99)) {
  const DeltaU<Real> du = solve_delta_u<Real>(r);
  const Real dist = d_proj(c, target);
  if (dist > du.delta) return false;
  if (dist == 0) return true;
  const Real g = gamma_bound(f, target);
  return dist * g <= du.u;
}

}  // namespace heigen
