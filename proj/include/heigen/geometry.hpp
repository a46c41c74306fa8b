#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "heigen/poly.hpp"

namespace heigen {

// Anything below this is treated as an exactly singular restriction.
template <typename Real>
constexpr Real singular_floor() {
  return std::max(static_cast<Real>(1e-300), std::numeric_limits<Real>::min());
}

template <typename Real>
constexpr Real infinity() {
  return std::numeric_limits<Real>::infinity();
}

template <typename Real>
Real clamp_unit(Real x, Real lo) {
  return std::min(static_cast<Real>(1), std::max(lo, x));
}

// Angle on the sphere of systems.
template <typename Real>
Real d_sphere(const PolySystem<Real>& f, const PolySystem<Real>& g) {
  const Real nf = bw_norm(f), ng = bw_norm(g);
  require(nf > 0 && ng > 0, "d_sphere: zero system");
  // half-angle form, accurate near 0 and pi unlike acos
  const CMatrix<Real> u = f.coeffs() / nf, w = g.coeffs() / ng;
  return 2 * std::atan2((u - w).norm(), (u + w).norm());
}

// Projective angle arccos(|<a,b>| / (|a| |b|)) in [0, pi/2], computed as
// atan2(|a - proj_b a|, |proj_b a|) for accuracy at small angles.
template <typename Real>
Real d_proj(const CVector<Real>& a, const CVector<Real>& b) {
  require(a.size() == b.size(), "d_proj: dimension mismatch");
  const Real na = a.norm(), nb = b.norm();
  require(na > 0 && nb > 0, "d_proj: zero vector");
  const CVector<Real> u = a / na, w = b / nb;
  const std::complex<Real> c = w.dot(u);
  // both projections, averaged, so the result is exactly symmetric
  const Real s = (u - c * w).norm() + (w - std::conj(c) * u).norm();
  return std::atan2(s / 2, std::abs(c));
}

template <typename Real>
Real d_proj(const EigenPairCandidate<Real>& a, const EigenPairCandidate<Real>& b) {
  return d_proj<Real>(a.stacked(), b.stacked());
}

// Point at arc length tau * alpha from g towards f (tau = 0 gives g,
// tau = 1 gives f). alpha = d_sphere(f, g) can be passed in to save work.
template <typename Real>
PolySystem<Real> geodesic_point(const PolySystem<Real>& f, const PolySystem<Real>& g,
                                Real tau, Real alpha) {
  require(f.same_shape(g), "geodesic_point: shape mismatch");
  if (alpha == 0) return f;
  if (tau == 0) return g;
  if (tau == 1) return f;
  const Real s = std::sin(alpha);
  const Real a = std::sin((1 - tau) * alpha) / s;
  const Real b = std::sin(tau * alpha) / s;
  return PolySystem<Real>(f.vars(), f.degree(), CMatrix<Real>(a * g.coeffs() + b * f.coeffs()));
}

template <typename Real>
PolySystem<Real> geodesic_point(const PolySystem<Real>& f, const PolySystem<Real>& g, Real tau) {
  const Real tol = static_cast<Real>(1e-8);
  require(std::abs(bw_norm(f) - 1) <= tol && std::abs(bw_norm(g) - 1) <= tol,
          "geodesic_point: systems must have unit norm");
  require(tau >= 0 && tau <= 1, "geodesic_point: tau outside [0,1]");
  const Real alpha = d_sphere(f, g);
  require(std::sin(alpha) > std::sqrt(std::numeric_limits<Real>::epsilon()) || alpha < 1,
          "geodesic_point: antipodal systems");
  return geodesic_point(f, g, tau, alpha);
}

enum class PerpMode { full_perp, vector_perp };

// Orthonormal basis of w^perp (Hermitian) in C^m, as m x (m-1) columns.
template <typename Real>
CMatrix<Real> orthogonal_complement(const CVector<Real>& w) {
  require(w.norm() > 0, "orthogonal_complement: zero vector");
  Eigen::HouseholderQR<CMatrix<Real>> qr{CMatrix<Real>(w)};
  CMatrix<Real> Q = qr.householderQ();
  return Q.rightCols(w.size() - 1);
}

// Columns form an orthonormal basis of (v,lambda)^perp (full_perp) or of
// v^perp x C (vector_perp); both n-dimensional inside C^{n+1}.
template <typename Real>
CMatrix<Real> perp_basis(const EigenPairCandidate<Real>& c, PerpMode mode) {
  const Eigen::Index n = c.n();
  require(c.v.norm() > 0, "perp_basis: v must be nonzero");
  if (mode == PerpMode::full_perp) return orthogonal_complement<Real>(c.stacked());
  CMatrix<Real> Q = CMatrix<Real>::Zero(n + 1, n);
  Q.topLeftCorner(n, n - 1) = orthogonal_complement<Real>(c.v);
  Q(n, n - 1) = 1;
  return Q;
}

template <typename Real>
Real sigma_min(const CMatrix<Real>& A) {
  Eigen::JacobiSVD<CMatrix<Real>> svd(A);
  const auto& s = svd.singularValues();
  return s.size() == 0 ? Real(0) : s(s.size() - 1);
}

template <typename Real>
Real spectral_norm(const CMatrix<Real>& A) {
  Eigen::JacobiSVD<CMatrix<Real>> svd(A);
  const auto& s = svd.singularValues();
  return s.size() == 0 ? Real(0) : s(0);
}

// || (A restricted to span Q)^{-1} || = 1 / sigma_min(A Q); +inf when singular.
template <typename Real>
Real restricted_inverse_norm(const CMatrix<Real>& A, const CMatrix<Real>& Q) {
  require(A.cols() == Q.rows() && A.rows() == Q.cols(), "restricted_inverse_norm: shape mismatch");
  const Real s = sigma_min<Real>(CMatrix<Real>(A * Q));
  if (!(s >= singular_floor<Real>())) return infinity<Real>();
  return 1 / s;
}

// The unique w in span Q with A w = b.
template <typename Real>
CVector<Real> apply_restricted_inverse(const CMatrix<Real>& A, const CMatrix<Real>& Q,
                                       const CVector<Real>& b) {
  require(A.cols() == Q.rows() && A.rows() == Q.cols() && b.size() == A.rows(),
          "apply_restricted_inverse: shape mismatch");
  CMatrix<Real> AQ = A * Q;
  Eigen::JacobiSVD<CMatrix<Real>> svd(AQ, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (!(s(s.size() - 1) >= singular_floor<Real>()))
    throw Error(ErrorKind::SingularRestriction, "restricted operator is singular");
  CVector<Real> y = svd.matrixV() * (s.cwiseInverse().template cast<std::complex<Real>>().asDiagonal() *
                                     (svd.matrixU().adjoint() * b));
  return Q * y;
}

}  // namespace heigen
