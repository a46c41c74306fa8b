#pragma once

#include <cmath>
#include <vector>

#include "heigen/homotopy.hpp"

namespace heigen {

// Random start from rho*, rescaled onto the unit sphere, tracked to f/|f|,
// then polished with `refine_steps` Newton steps (not counted in K).
template <typename Real>
SolveReport<Real> lv_ealh_star(const PolySystem<Real>& f_in, RngStream& rng,
                               const EalhParams<Real>& p = {}, int refine_steps = 3,
                               StartTriple<Real>* start_out = nullptr) {
  require(f_in.square(), "lv_ealh_star: need n components");
  const Real nf = bw_norm(f_in);
  require(nf > 0, "lv_ealh_star: zero system");
  require(refine_steps >= 0, "lv_ealh_star: negative refine count");
  check_params(p);
  PolySystem<Real> f = f_in;
  f.coeffs() /= nf;
  const int n = f.vars(), d = f.degree();

  StartTriple<Real> st = draw_from_rho_star<Real>(rng, n, d);
  const Real ng = bw_norm(st.g);
  st.g.coeffs() /= ng;
  st.eta /= std::pow(ng, 1 / static_cast<Real>(d - 1));
  if (start_out) *start_out = st;

  SolveReport<Real> rep = ealh(f, st, p);
  if (rep.status != Status::Success || refine_steps == 0) return rep;
  try {
    NewtonTrace<Real> tr = refine(f, rep.cand, refine_steps);
    rep.cand = tr.iterates.back();
    rep.residual = tr.residuals.back();
    rep.mu_final = mu(f, rep.cand);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonFinite) throw;
    rep.status = Status::NonFinite;
  }
  return rep;
}

// Eigenvector classes of an n = 2 system from the binary form
// v2 f1(v) - v1 f2(v), and their expansion into h-eigenpairs.
struct OracleClass {
  CVector<double> v;  // unit
  std::complex<double> lambda;
};

struct OracleEigenSet {
  std::vector<OracleClass> pairs;
  std::vector<EigenPairCandidate<double>> h_pairs;  // |zeta| = 1, eta^(d-1) = lambda
};

OracleEigenSet oracle_eigenpairs_n2(const PolySystem<double>& f);

// min d_proj from c to any oracle h-eigenpair
double oracle_distance(const OracleEigenSet& o, const EigenPairCandidate<double>& c,
                       std::size_t* which = nullptr);

}  // namespace heigen
