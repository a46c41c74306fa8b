#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "heigen/newton.hpp"
#include "heigen/sampler.hpp"

namespace heigen {

enum class Status {
  Success,
  SingularOnPath,
  MaxStepsExceeded,
  TrivialSolutionDrift,
  NonFinite,
};

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Success: return "Success";
    case Status::SingularOnPath: return "SingularOnPath";
    case Status::MaxStepsExceeded: return "MaxStepsExceeded";
    case Status::TrivialSolutionDrift: return "TrivialSolutionDrift";
    case Status::NonFinite: return "NonFinite";
  }
  return "Unknown";
}

template <typename Real = double>
struct EalhParams {
  Real epsilon = Real(0.04);
  std::uint64_t max_steps = 1000000;
  Real min_dtau = Real(1e-14);
};

// 1 - (1-e)^-2 + cos(e/4)
template <typename Real>
Real vartheta(Real e) {
  return 1 - 1 / ((1 - e) * (1 - e)) + std::cos(e / 4);
}

template <typename Real>
Real theta(Real e) {
  require(e >= 0 && e < 1, "theta: epsilon must lie in [0,1)");
  return vartheta(e) - e;
}

template <typename Real>
Real omega(Real e) {
  return 2 * theta(e) - 1;
}

template <typename Real>
void check_params(const EalhParams<Real>& p) {
  require(p.epsilon > 0 && p.epsilon <= Real(0.2), "epsilon must lie in (0, 1/5]");
  require(omega(p.epsilon) > 0, "omega(epsilon) must be positive");
  require(p.max_steps > 0 && p.min_dtau > 0, "bad step limits");
}

// e (1-e)^4 omega Theta / (4 d^2 sqrt(n) mu^2 alpha); +inf mu gives 0
template <typename Real>
Real step_size(int n, int d, Real mu_value, Real alpha, const EalhParams<Real>& p) {
  require(alpha > 0, "step_size: alpha must be positive");
  if (std::isinf(mu_value)) return 0;
  const Real e = p.epsilon;
  const Real num = e * std::pow(1 - e, 4) * omega(e) * theta(e);
  return num / (4 * static_cast<Real>(d) * static_cast<Real>(d) * std::sqrt(static_cast<Real>(n)) *
                mu_value * mu_value * alpha);
}

template <typename Real = double>
struct HomotopyState {
  Real tau = 0;
  PolySystem<Real> q;
  EigenPairCandidate<Real> cand;
  Real mu = 0;
  std::uint64_t steps = 0;
};

template <typename Real>
Real step_size(const HomotopyState<Real>& s, Real alpha, const EalhParams<Real>& p) {
  return step_size(s.q.vars(), s.q.degree(), s.mu, alpha, p);
}

template <typename Real = double>
struct SolveReport {
  EigenPairCandidate<Real> cand;
  std::uint64_t iterations = 0;  // K
  Real residual = 0;
  Real mu_final = 0;
  Status status = Status::Success;
  Real alpha = 0;       // d_S(f, g)
  Real mu_sq_int = 0;   // trapezoid estimate of the integral of mu^2 over tau
  Real tau = 0;         // where tracking stopped
  Real max_ratio = 0;   // max |lambda| / |v| over accepted iterates
};

// Guard against the path drifting to [0:1].
template <typename Real>
bool drifted(const EigenPairCandidate<Real>& c) {
  return c.v.norm() < Real(1e-8) * c.stacked().norm();
}

// Track the eigenpair of start.g along the great circle to f.
template <typename Real>
SolveReport<Real> ealh(const PolySystem<Real>& f, const StartTriple<Real>& start,
                       const EalhParams<Real>& p = {}) {
  check_params(p);
  const PolySystem<Real>& g = start.g;
  require(f.square() && f.same_shape(g), "ealh: shape mismatch");
  const Real tol = Real(1e-8);
  require(std::abs(bw_norm(f) - 1) <= tol && std::abs(bw_norm(g) - 1) <= tol,
          "ealh: systems must have unit norm");
  const Real alpha = d_sphere(f, g);
  require(std::numbers::pi_v<Real> - alpha > Real(1e-12), "ealh: f = -g is not allowed");

  HomotopyState<Real> st{0, g, start.pair().normalized(), 0, 0};
  st.mu = mu(st.q, st.cand);

  SolveReport<Real> rep;
  rep.alpha = alpha;
  auto finish = [&](Status s) {
    rep.cand = st.cand;
    rep.iterations = st.steps;
    rep.residual = st.cand.finite() ? residual(f, st.cand) : infinity<Real>();
    rep.mu_final = st.mu;
    rep.status = s;
    rep.tau = st.tau;
    return rep;
  };
  auto ratio = [](const EigenPairCandidate<Real>& c) { return std::abs(c.lambda) / c.v.norm(); };
  rep.max_ratio = ratio(st.cand);

  if (alpha == 0) {
    st.tau = 1;
    st.steps = 1;
    return finish(Status::Success);
  }

  while (st.tau < 1) {
    if (std::isinf(st.mu)) return finish(Status::SingularOnPath);
    const Real dtau = step_size(st, alpha, p);
    if (dtau < p.min_dtau) return finish(Status::SingularOnPath);
    if (st.steps >= p.max_steps) return finish(Status::MaxStepsExceeded);
    const Real tau = std::min<Real>(1, st.tau + dtau);
    st.q = geodesic_point(f, g, tau, alpha);
    NewtonStep<Real> ns = newton_step(st.q, st.cand);
    ++st.steps;
    if (ns.singular) {
      st.tau = tau;
      st.mu = infinity<Real>();
      return finish(Status::SingularOnPath);
    }
    if (!ns.cand.finite()) {
      st.tau = tau;
      return finish(Status::NonFinite);
    }
    st.cand = std::move(ns.cand);
    if (drifted(st.cand)) {
      st.tau = tau;
      return finish(Status::TrivialSolutionDrift);
    }
    const Real m = mu(st.q, st.cand);
    rep.mu_sq_int += (st.mu * st.mu + m * m) / 2 * (tau - st.tau);
    rep.max_ratio = std::max(rep.max_ratio, ratio(st.cand));
    st.mu = m;
    st.tau = tau;
  }
  if (std::isinf(st.mu)) return finish(Status::SingularOnPath);
  return finish(Status::Success);
}

}  // namespace heigen
