#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "heigen/driver.hpp"

namespace testutil {

using cd = std::complex<double>;
using heigen::CMatrix;
using heigen::CVector;
using heigen::PolySystem;

// Term-by-term evaluation from raw monomial coefficients, independent of the
// Weyl-scaled evaluation path.
inline CVector<double> eval_raw(const PolySystem<double>& f, const CVector<double>& x) {
  const auto& t = f.table();
  CVector<double> out = CVector<double>::Zero(f.components());
  for (int i = 0; i < f.components(); ++i) {
    for (Eigen::Index k = 0; k < t.size(); ++k) {
      long double mult = heigen::ExponentTable<double>::multinomial(t.alpha(k), f.vars(), f.degree());
      cd term = f.coeffs()(i, k) * std::sqrt(static_cast<double>(mult));
      for (int j = 0; j < f.vars(); ++j) term *= std::pow(x(j), t.alpha(k, j));
      out(i) += term;
    }
  }
  return out;
}

// central differences of x -> F(x) along each coordinate, holomorphic so a
// real step suffices
template <typename Fn>
CMatrix<double> fd_jacobian(Fn F, const CVector<double>& x, double h = 1e-6) {
  CVector<double> f0 = F(x);
  CMatrix<double> J(f0.size(), x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    CVector<double> xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    J.col(j) = (F(xp) - F(xm)) / (2 * h);
  }
  return J;
}

inline PolySystem<double> diagonal_squares() {
  PolySystem<double> f(2, 2);
  f.coeffs()(0, f.table().index_of({2, 0})) = 1;
  f.coeffs()(1, f.table().index_of({0, 2})) = 1;
  return f;
}

inline CVector<double> vec(std::initializer_list<cd> xs) {
  CVector<double> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (cd x : xs) v(i++) = x;
  return v;
}

inline bool unitary(const CMatrix<double>& U, double tol) {
  return (U.adjoint() * U - CMatrix<double>::Identity(U.cols(), U.cols())).norm() <= tol;
}

}  // namespace testutil
