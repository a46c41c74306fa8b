#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "heigen/driver.hpp"

namespace heigen {

namespace {

using cd = std::complex<double>;

cd horner(const std::vector<cd>& p, cd t) {
  cd r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
  return r;
}

cd horner_deriv(const std::vector<cd>& p, cd t) {
  cd r = 0;
  for (std::size_t k = p.size() - 1; k >= 1; --k) r = r * t + static_cast<double>(k) * p[k];
  return r;
}

// a few Newton steps, kept only while they reduce |p|
cd polish(const std::vector<cd>& p, cd t) {
  double best = std::abs(horner(p, t));
  for (int it = 0; it < 8 && best > 0; ++it) {
    const cd dp = horner_deriv(p, t);
    if (dp == cd(0)) break;
    const cd t2 = t - horner(p, t) / dp;
    const double r2 = std::abs(horner(p, t2));
    if (!(r2 < best)) break;
    t = t2;
    best = r2;
  }
  return t;
}

}  // namespace

OracleEigenSet oracle_eigenpairs_n2(const PolySystem<double>& f) {
  require(f.vars() == 2 && f.square(), "oracle_eigenpairs_n2: needs n = 2");
  const int d = f.degree();
  const CMatrix<double> raw = weyl_to_monomial(f);
  // column k of raw is X1^(d-k) X2^k, so f_i(1,t) = sum_k raw(i,k) t^k
  std::vector<cd> p(d + 2, cd(0));
  for (int k = 0; k <= d; ++k) {
    p[k + 1] += raw(0, k);
    p[k] -= raw(1, k);
  }
  double scale = 0;
  for (const cd& c : p) scale = std::max(scale, std::abs(c));
  if (!(scale > 0) || !std::isfinite(scale))
    throw Error(ErrorKind::OracleDegenerate, "every direction is an eigenvector");
  int m = d + 1;
  while (m > 0 && std::abs(p[m]) <= 1e-14 * scale) --m;
  if (m == 0 && std::abs(p[0]) <= 1e-14 * scale)
    throw Error(ErrorKind::OracleDegenerate, "every direction is an eigenvector");

  std::vector<CVector<double>> dirs;
  if (m >= 1) {
    CMatrix<double> C = CMatrix<double>::Zero(m, m);
    for (int i = 1; i < m; ++i) C(i, i - 1) = 1;
    for (int i = 0; i < m; ++i) C(i, m - 1) = -p[i] / p[m];
    Eigen::ComplexEigenSolver<CMatrix<double>> es(C, false);
    if (es.info() != Eigen::Success)
      throw Error(ErrorKind::OracleDegenerate, "companion eigenvalues failed");
    std::vector<cd> rev(p.begin(), p.begin() + m + 1);
    std::reverse(rev.begin(), rev.end());
    std::vector<cd> fwd(p.begin(), p.begin() + m + 1);
    for (Eigen::Index i = 0; i < m; ++i) {
      cd t = es.eigenvalues()(i);
      CVector<double> v(2);
      if (std::abs(t) <= 1) {
        t = polish(fwd, t);
        v << 1, t;
      } else {
        // s = 1/t on the reversed polynomial, v = (s, 1)
        cd s = polish(rev, 1.0 / t);
        v << s, 1;
      }
      dirs.push_back(v / v.norm());
    }
  }
  if (m < d + 1) {
    CVector<double> v(2);
    v << 0, 1;
    dirs.push_back(v);
  }

  OracleEigenSet out;
  for (auto& v : dirs) {
    const cd lambda = v.dot(evaluate(f, v));  // v^H f(v)
    out.pairs.push_back({v, lambda});
    const double r = std::pow(std::abs(lambda), 1.0 / (d - 1));
    const double a = std::arg(lambda);
    for (int k = 0; k < d - 1; ++k) {
      const cd eta = std::polar(r, (a + 2 * std::numbers::pi * k) / (d - 1));
      out.h_pairs.emplace_back(v, eta);
    }
  }
  return out;
}

double oracle_distance(const OracleEigenSet& o, const EigenPairCandidate<double>& c,
                       std::size_t* which) {
  double best = infinity<double>();
  for (std::size_t i = 0; i < o.h_pairs.size(); ++i) {
    const double dist = d_proj(o.h_pairs[i], c);
    if (dist < best) {
      best = dist;
      if (which) *which = i;
    }
  }
  return best;
}

}  // namespace heigen
