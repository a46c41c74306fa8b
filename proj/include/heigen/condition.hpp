#pragma once

#include <cmath>
#include <numbers>

#include "heigen/geometry.hpp"

namespace heigen {

template <typename Real = double>
struct ConditionReport {
  Real mu;
  Real mu_hat;
  Real gamma_bound;
};

// ||v||^(d-1) || DF_f(v,lambda) restricted to (v,lambda)^perp ^{-1} ||
template <typename Real>
Real mu(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c) {
  require(c.v.norm() > 0, "mu: v must be nonzero");
  const Real r = restricted_inverse_norm<Real>(ff_jacobian(f, c), perp_basis(c, PerpMode::full_perp));
  if (std::isinf(r)) return r;
  return std::pow(c.v.norm(), f.degree() - 1) * r;
}

// || diag(|f| I_n, |f|^((d-2)/(d-1))) (DF_f restricted to v^perp x C)^{-1} ||
template <typename Real>
Real mu_hat(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c) {
  require(c.v.norm() > 0, "mu_hat: v must be nonzero");
  const Real nf = bw_norm(f);
  require(nf > 0, "mu_hat: zero system");
  const int n = f.vars(), d = f.degree();
  CMatrix<Real> Q = perp_basis(c, PerpMode::vector_perp);
  CMatrix<Real> B = ff_jacobian(f, c) * Q;
  Eigen::JacobiSVD<CMatrix<Real>> svd(B, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (!(s(s.size() - 1) >= singular_floor<Real>())) return infinity<Real>();
  CMatrix<Real> inv = Q * svd.matrixV() *
                      s.cwiseInverse().template cast<std::complex<Real>>().asDiagonal() *
                      svd.matrixU().adjoint();
  inv.topRows(n) *= nf;
  inv.row(n) *= std::pow(nf, static_cast<Real>(d - 2) / static_cast<Real>(d - 1));
  return spectral_norm<Real>(inv);
}

template <typename Real>
Real gamma_bound_from_mu(Real m, int n, int d) {
  if (std::isinf(m)) return m;
  return m * static_cast<Real>(d) * static_cast<Real>(d) * std::sqrt(static_cast<Real>(2 * n));
}

// upper bound mu d^2 sqrt(2n) for the gamma invariant
template <typename Real>
Real gamma_bound(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c) {
  return gamma_bound_from_mu(mu(f, c), f.vars(), f.degree());
}

template <typename Real>
ConditionReport<Real> condition_report(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c) {
  const Real m = mu(f, c);
  return {m, mu_hat(f, c), gamma_bound_from_mu(m, f.vars(), f.degree())};
}

template <typename Real = double>
struct DeltaU {
  Real delta;
  Real u;
};

// delta(r): smallest delta > 0 with sin(delta) = r delta.
// u(r): smallest u > 0 with 2u = r ((1 + cos delta)(1-u)^2 - 1).
template <typename Real = double>
DeltaU<Real> solve_delta_u(Real r) {
  const Real pi = std::numbers::pi_v<Real>;
  require(r >= 2 / pi && r < 1, "solve_delta_u: r must lie in [2/pi, 1)");
  // sin(x)/x is decreasing on (0, pi], so the root is bracketed there
  Real lo = 0, hi = pi / 2;
  if (std::sin(hi) - r * hi > 0) hi = pi;
  if (r == 2 / pi) {
    lo = hi = pi / 2;
  }
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    const Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    if (std::sin(mid) - r * mid > 0)
      lo = mid;
    else
      hi = mid;
  }
  const Real delta = (lo + hi) / 2;
  // r c u^2 - 2(r c + 1) u + r (c - 1) = 0,  c = 1 + cos(delta)
  const Real c = 1 + std::cos(delta);
  const Real b = 2 * (r * c + 1);
  const Real disc = b * b - 4 * r * c * r * (c - 1);
  const Real u = 2 * r * (c - 1) / (b + std::sqrt(disc));
  return {delta, u};
}

}  // namespace heigen
