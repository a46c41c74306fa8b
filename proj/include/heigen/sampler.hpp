#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "heigen/geometry.hpp"
#include "heigen/rng.hpp"

namespace heigen {

// (g, zeta, eta) with F_g(zeta, eta) = 0
template <typename Real = double>
struct StartTriple {
  PolySystem<Real> g;
  CVector<Real> zeta;
  std::complex<Real> eta;
  std::uint64_t rejections = 0;  // eta redraws spent in the rejection step

  EigenPairCandidate<Real> pair() const { return {zeta, eta}; }
};

template <typename Real = double>
CVector<Real> gaussian_complex(RngStream& rng, Eigen::Index k) {
  CVector<Real> z(k);
  for (Eigen::Index i = 0; i < k; ++i) z(i) = std::complex<Real>(rng.complex_normal());
  return z;
}

template <typename Real = double>
CMatrix<Real> gaussian_matrix(RngStream& rng, Eigen::Index rows, Eigen::Index cols) {
  CMatrix<Real> A(rows, cols);
  // column major fill, fixed order
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) A(i, j) = std::complex<Real>(rng.complex_normal());
  return A;
}

// f ~ N(H): i.i.d. standard complex Gaussian Weyl coefficients
template <typename Real = double>
PolySystem<Real> gaussian_system(RngStream& rng, int n, int d, int components = -1) {
  PolySystem<Real> f(n, d, components);
  f.coeffs() = gaussian_matrix<Real>(rng, f.components(), f.monomials());
  return f;
}

// uniform on the unit sphere of systems
template <typename Real = double>
PolySystem<Real> unit_system(RngStream& rng, int n, int d) {
  PolySystem<Real> f = gaussian_system<Real>(rng, n, d);
  f.coeffs() /= bw_norm(f);
  return f;
}

// R^(1/(2(d-1))) e^(i phi), R ~ Exp(1), phi ~ U[0, 2pi)
template <typename Real = double>
std::complex<Real> sample_eta(RngStream& rng, int d) {
  require(d >= 2, "sample_eta: d must be >= 2");
  const Real R = static_cast<Real>(rng.exponential());
  const Real phi = 2 * std::numbers::pi_v<Real> * static_cast<Real>(rng.uniform());
  return std::polar(std::pow(R, 1 / static_cast<Real>(2 * (d - 1))), phi);
}

// Haar unitary on C^m via QR of a Gaussian matrix with the phase fix
template <typename Real = double>
CMatrix<Real> haar_unitary(RngStream& rng, Eigen::Index m) {
  CMatrix<Real> G = gaussian_matrix<Real>(rng, m, m);
  Eigen::HouseholderQR<CMatrix<Real>> qr(G);
  CMatrix<Real> Q = qr.householderQ();
  for (Eigen::Index i = 0; i < m; ++i) {
    const std::complex<Real> r = qr.matrixQR()(i, i);
    const Real a = std::abs(r);
    Q.col(i) *= a > 0 ? r / a : std::complex<Real>(1);
  }
  return Q;
}

// Unitary U with U e_1 = zeta, uniformly among those.
template <typename Real = double>
CMatrix<Real> random_unitary_fixing(RngStream& rng, const CVector<Real>& zeta) {
  const Eigen::Index n = zeta.size();
  require(std::abs(zeta.norm() - 1) <= static_cast<Real>(1e-10), "random_unitary_fixing: zeta must be a unit vector");
  CMatrix<Real> V(n, n);
  V.col(0) = zeta;
  if (n > 1) V.rightCols(n - 1) = orthogonal_complement<Real>(zeta);
  if (n == 1) return V;
  CMatrix<Real> B = CMatrix<Real>::Identity(n, n);
  B.bottomRightCorner(n - 1, n - 1) = haar_unitary<Real>(rng, n - 1);
  return V * B;
}

// g = c <X,z>^d + sqrt(d) <X,z>^(d-1) a^T X + h with a^T z = 0 and
// h(z) = 0, Dh(z) = 0. The three pieces are B-W orthogonal.
template <typename Real = double>
struct ClrParts {
  std::complex<Real> c;
  CVector<Real> a;
  PolySystem<Real> h;
};

template <typename Real>
ClrParts<Real> decompose_CLR(const PolySystem<Real>& g, const CVector<Real>& zeta) {
  require(g.components() == 1, "decompose_CLR: expects a single polynomial");
  require(zeta.size() == g.vars(), "decompose_CLR: dimension mismatch");
  require(std::abs(zeta.norm() - 1) <= static_cast<Real>(1e-10), "decompose_CLR: zeta must be a unit vector");
  const int d = g.degree();
  const Real sd = std::sqrt(static_cast<Real>(d));
  const std::complex<Real> c = evaluate(g, zeta)(0);
  // row r = Dg(zeta); a^T = r (I - zeta zeta^H) / sqrt(d)
  CVector<Real> r = jacobian(g, zeta).row(0).transpose();
  const std::complex<Real> rz = (r.transpose() * zeta)(0);  // = d c by Euler
  CVector<Real> a = (r - rz * zeta.conjugate()) / sd;
  PolySystem<Real> h = g;
  h.coeffs() -= c * zeta_power<Real>(zeta, d).coeffs();
  h.coeffs() -= sd * zeta_power_times_linear<Real>(zeta, d - 1, a).coeffs();
  return {c, std::move(a), std::move(h)};
}

// count independent standard Gaussians on R(zeta), one per row
template <typename Real = double>
PolySystem<Real> sample_R_space(RngStream& rng, const CVector<Real>& zeta, int d, int count) {
  const int n = static_cast<int>(zeta.size());
  PolySystem<Real> out(n, d, count);
  for (int i = 0; i < count; ++i) {
    PolySystem<Real> g = gaussian_system<Real>(rng, n, d, 1);
    out.coeffs().row(i) = decompose_CLR(g, zeta).h.coeffs().row(0);
  }
  return out;
}

template <typename Real = double>
struct BpSample {
  PolySystem<Real> fsys;  // n-1 components vanishing at zeta
  CVector<Real> zeta;
  CMatrix<Real> M;  // D fsys(zeta) = sqrt(d) M
};

// Random (n-1)-component system with a known zero: linear part from a
// Gaussian matrix M with kernel zeta, higher part Gaussian on R(zeta).
template <typename Real = double>
BpSample<Real> bp_sample(RngStream& rng, int n, int d) {
  require(n >= 2 && d >= 1, "bp_sample: need n >= 2");
  CMatrix<Real> M;
  CVector<Real> zeta;
  for (;;) {
    M = gaussian_matrix<Real>(rng, n - 1, n);
    Eigen::JacobiSVD<CMatrix<Real>> svd(M, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s(n - 2) > static_cast<Real>(1e-12) * s(0)) {
      zeta = svd.matrixV().col(n - 1);
      break;
    }
  }
  zeta /= zeta.norm();
  const Real sd = std::sqrt(static_cast<Real>(d));
  PolySystem<Real> f = sample_R_space<Real>(rng, zeta, d, n - 1);
  for (int i = 0; i < n - 1; ++i)
    f.coeffs().row(i) += sd * zeta_power_times_linear<Real>(zeta, d - 1, M.row(i).transpose()).coeffs().row(0);
  return {std::move(f), std::move(zeta), std::move(M)};
}

namespace detail {

// Frobenius test of the rejection step, B = D fsys(zeta) restricted to zeta^perp
template <typename Real>
bool rho_star_accepts(const CMatrix<Real>& B, std::complex<Real> eta, int d) {
  CMatrix<Real> S = B;
  S.diagonal().array() += std::pow(eta, d - 1);
  return S.norm() < B.norm();
}

}  // namespace detail

// Start triple (f, zeta, eta) drawn from rho*.
template <typename Real = double>
StartTriple<Real> draw_from_rho_star(RngStream& rng, int n, int d,
                                     std::uint64_t max_rejections = 1000000) {
  require(n >= 2 && d >= 2, "draw_from_rho_star: need n, d >= 2");
  BpSample<Real> bp = bp_sample<Real>(rng, n, d);
  const CVector<Real>& zeta = bp.zeta;
  CMatrix<Real> U = random_unitary_fixing<Real>(rng, zeta);
  CVector<Real> ap = CVector<Real>::Zero(n);
  ap.tail(n - 1) = gaussian_complex<Real>(rng, n - 1);
  // bilinear orthogonality a^T zeta = 0
  CVector<Real> a = (U * ap).conjugate();
  PolySystem<Real> h = sample_R_space<Real>(rng, zeta, d, 1);

  const Real sd = std::sqrt(static_cast<Real>(d));
  const CMatrix<Real> B = sd * bp.M * U.rightCols(n - 1);
  std::complex<Real> eta;
  std::uint64_t rejections = 0;
  for (;;) {
    eta = sample_eta<Real>(rng, d);
    if (detail::rho_star_accepts<Real>(B, eta, d)) break;
    if (++rejections >= max_rejections)
      throw Error(ErrorKind::SamplerStalled, "rejection step did not accept");
  }

  PolySystem<Real> f0 = h;
  f0.coeffs() += std::pow(eta, d - 1) * zeta_power<Real>(zeta, d).coeffs();
  f0.coeffs() += sd * zeta_power_times_linear<Real>(zeta, d - 1, a).coeffs();
  PolySystem<Real> f = stack<Real>({f0, bp.fsys});
  f.coeffs() = U * f.coeffs();
  return {std::move(f), zeta, eta, rejections};
}

// One independent attempt of the rejection step (fresh system and eta).
template <typename Real = double>
bool rho_star_acceptance_trial(RngStream& rng, int n, int d) {
  BpSample<Real> bp = bp_sample<Real>(rng, n, d);
  CMatrix<Real> U = random_unitary_fixing<Real>(rng, bp.zeta);
  const CMatrix<Real> B = std::sqrt(static_cast<Real>(d)) * bp.M * U.rightCols(n - 1);
  return detail::rho_star_accepts<Real>(B, sample_eta<Real>(rng, d), d);
}

}  // namespace heigen
