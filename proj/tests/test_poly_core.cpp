#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace heigen;
using namespace testutil;

TEST(ExponentTable, CountsAndOrder) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d)
      EXPECT_EQ(exponent_table<double>(n, d)->size(), static_cast<Eigen::Index>(binomial(n + d - 1, n - 1)));
  auto t = exponent_table<double>(3, 2);
  // graded lex, X1^2 first, X3^2 last
  std::vector<std::vector<int>> want = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  for (std::size_t k = 0; k < want.size(); ++k)
    EXPECT_EQ(std::vector<int>(t->alpha(k), t->alpha(k) + 3), want[k]);
  EXPECT_EQ(ExponentTable<double>::multinomial(want[1].data(), 3, 2), 2.0L);
  int a20[] = {10, 10};
  EXPECT_EQ(ExponentTable<double>::multinomial(a20, 2, 20), 184756.0L);
}

TEST(PolySystem, SizeInvariants) {
  PolySystem<double> f(3, 4);
  EXPECT_EQ(f.total_size(), static_cast<Eigen::Index>(3 * binomial(6, 2)));
  CMatrix<double> bad = CMatrix<double>::Zero(3, 5);
  EXPECT_THROW(PolySystem<double>(3, 4, bad), Error);
  CMatrix<double> nan = CMatrix<double>::Zero(3, 15);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(PolySystem<double>(3, 4, nan), Error);
}

TEST(BwInner, UnitMonomial) {
  PolySystem<double> f(2, 3);
  f.coeffs()(0, 0) = 1;
  EXPECT_DOUBLE_EQ(bw_inner(f, f).real(), 1.0);
  EXPECT_DOUBLE_EQ(bw_norm(f), 1.0);
}

TEST(BwInner, MonomialX1X2) {
  CMatrix<double> raw = CMatrix<double>::Zero(2, 3);
  raw(0, 1) = 1;  // X1 X2 in the first component
  PolySystem<double> f = monomial_to_weyl<double>(2, 2, raw);
  EXPECT_NEAR(bw_norm(f), 1 / std::sqrt(2.0), 1e-15);
}

TEST(BwInner, HermitianAndMismatch) {
  RngStream rng(1);
  auto f = gaussian_system<double>(rng, 3, 3), g = gaussian_system<double>(rng, 3, 3);
  EXPECT_LE(std::abs(bw_inner(f, g) - std::conj(bw_inner(g, f))), 1e-12);
  EXPECT_THROW(bw_inner(f, gaussian_system<double>(rng, 3, 2)), Error);
}

TEST(Evaluate, DiagonalExamples) {
  auto f = diagonal_squares();
  EXPECT_LE((evaluate(f, vec({1, 1})) - vec({1, 1})).norm(), 1e-15);
  EXPECT_LE((evaluate(f, vec({2, 3})) - vec({4, 9})).norm(), 1e-14);
  EXPECT_THROW(evaluate(f, vec({1, 2, 3})), Error);
}

TEST(Evaluate, MatchesTermByTermAndHomogeneity) {
  RngStream rng(2);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 4; ++d) {
      auto f = gaussian_system<double>(rng, n, d);
      CVector<double> x = gaussian_complex<double>(rng, n);
      EXPECT_LE((evaluate(f, x) - eval_raw(f, x)).norm(), 1e-12 * eval_raw(f, x).norm());
      CVector<double> f2x = evaluate(f, CVector<double>(2.0 * x));
      EXPECT_LE((f2x - std::pow(2.0, d) * evaluate(f, x)).norm(), 1e-12 * f2x.norm());
    }
  }
}

TEST(Evaluate, ComponentBoundedByNorm) {
  // |f_i(x)| <= ||f_i|| ||x||^d
  RngStream rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    auto f = gaussian_system<double>(rng, 3, 3);
    CVector<double> x = gaussian_complex<double>(rng, 3);
    CVector<double> y = evaluate(f, x);
    for (int i = 0; i < 3; ++i)
      EXPECT_LE(std::abs(y(i)), f.coeffs().row(i).norm() * std::pow(x.norm(), 3) * (1 + 1e-12));
  }
}

TEST(Jacobian, Diagonal) {
  CMatrix<double> J = jacobian(diagonal_squares(), vec({1, 1}));
  CMatrix<double> want(2, 2);
  want << 2, 0, 0, 2;
  EXPECT_LE((J - want).norm(), 1e-14);
}

TEST(Jacobian, EulerAndFiniteDifferences) {
  RngStream rng(4);
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 4; ++d) {
      auto f = gaussian_system<double>(rng, n, d);
      CVector<double> x = gaussian_complex<double>(rng, n);
      CMatrix<double> J = jacobian(f, x);
      CVector<double> fx = evaluate(f, x);
      EXPECT_LE((J * x - d * fx).norm(), 1e-12 * fx.norm() * d);
      CMatrix<double> fd = fd_jacobian([&](const CVector<double>& y) { return eval_raw(f, y); }, x);
      EXPECT_LE((J - fd).cwiseAbs().maxCoeff(), 1e-6 * std::max(1.0, J.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(FF, EvalExamples) {
  auto f = diagonal_squares();
  EXPECT_LE(ff_eval(f, EigenPairCandidate<double>(vec({1, 1}), 1.0)).norm(), 1e-15);
  EXPECT_LE(ff_eval(f, EigenPairCandidate<double>(vec({1, 0}), 1.0)).norm(), 1e-15);
  EXPECT_LE((ff_eval(f, EigenPairCandidate<double>(vec({1, 1}), 2.0)) - vec({-1, -1})).norm(), 1e-15);
}

TEST(FF, JacobianDiagonal) {
  CMatrix<double> J = ff_jacobian(diagonal_squares(), EigenPairCandidate<double>(vec({1, 1}), 1.0));
  CMatrix<double> want(2, 3);
  want << 1, 0, -1, 0, 1, -1;
  EXPECT_LE((J - want).norm(), 1e-14);
}

TEST(FF, JacobianKernelAtEigenpairAndFiniteDifferences) {
  auto f = diagonal_squares();
  EigenPairCandidate<double> c(vec({1, 1}), 1.0);
  CMatrix<double> J = ff_jacobian(f, c);
  EXPECT_LE((J * c.stacked()).norm(), 1e-12 * J.norm());

  RngStream rng(5);
  for (int d = 2; d <= 4; ++d) {
    auto g = gaussian_system<double>(rng, 3, d);
    EigenPairCandidate<double> p(gaussian_complex<double>(rng, 3), rng.complex_normal());
    auto F = [&](const CVector<double>& w) { return ff_eval(g, EigenPairCandidate<double>::from_stacked(w)); };
    CMatrix<double> fd = fd_jacobian(F, p.stacked());
    CMatrix<double> Jg = ff_jacobian(g, p);
    EXPECT_LE((Jg - fd).cwiseAbs().maxCoeff(), 1e-6 * std::max(1.0, Jg.cwiseAbs().maxCoeff()));
    // F(s v, s lambda) = s^d F(v, lambda)
    const cd s(0.7, -1.3);
    CVector<double> lhs = ff_eval(g, EigenPairCandidate<double>(s * p.v, s * p.lambda));
    EXPECT_LE((lhs - std::pow(s, d) * ff_eval(g, p)).norm(), 1e-12 * lhs.norm());
  }
}

TEST(MonomialConversion, Examples) {
  CMatrix<double> raw = CMatrix<double>::Zero(1, 4);
  raw(0, 0) = 1;  // X1^3
  EXPECT_EQ(monomial_to_weyl<double>(2, 3, raw).coeffs()(0, 0), cd(1));
  CMatrix<double> raw2 = CMatrix<double>::Zero(1, 3);
  raw2(0, 1) = 1;  // X1 X2
  EXPECT_NEAR(monomial_to_weyl<double>(2, 2, raw2).coeffs()(0, 1).real(), 1 / std::sqrt(2.0), 1e-16);
}

TEST(MonomialConversion, RoundTrip) {
  RngStream rng(6);
  auto f = gaussian_system<double>(rng, 3, 5);
  auto g = monomial_to_weyl<double>(3, 5, weyl_to_monomial(f));
  EXPECT_LE((g.coeffs() - f.coeffs()).norm(), 1e-14 * f.coeffs().norm());
}

TEST(UnitaryAction, PreservesNormAndConjugatesEvaluation) {
  RngStream rng(7);
  for (int n = 2; n <= 3; ++n) {
    auto f = gaussian_system<double>(rng, n, 3);
    CMatrix<double> U = haar_unitary<double>(rng, n);
    auto g = unitary_action(U, f);
    EXPECT_LE(std::abs(bw_norm(g) - bw_norm(f)), 1e-10 * bw_norm(f));
    CVector<double> x = gaussian_complex<double>(rng, n);
    // (U.f)(U x) = U f(x)
    EXPECT_LE((evaluate(g, CVector<double>(U * x)) - U * evaluate(f, x)).norm(), 1e-12 * evaluate(f, x).norm());
  }
}

TEST(LinearForms, IsometryOfLinearPart) {
  // ||sqrt(d) <X,x>^(d-1) a^T X|| = ||a|| for unit x and a^T x = 0
  RngStream rng(8);
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 4; ++d) {
      CVector<double> x = gaussian_complex<double>(rng, n).normalized();
      CVector<double> a = gaussian_complex<double>(rng, n);
      a -= x.conjugate() * (a.transpose() * x)(0);  // now a^T x = 0
      auto p = zeta_power_times_linear<double>(x, d - 1, a);
      EXPECT_NEAR(std::sqrt(double(d)) * bw_norm(p), a.norm(), 1e-12 * a.norm());
      EXPECT_NEAR(bw_norm(zeta_power<double>(x, d)), 1.0, 1e-12);
    }
  }
}

TEST(LongDouble, EvaluationAgrees) {
  RngStream rng(9);
  auto f = gaussian_system<double>(rng, 3, 3);
  CVector<double> x = gaussian_complex<double>(rng, 3);
  auto fl = f.cast<long double>();
  CVector<long double> xl = x.cast<std::complex<long double>>();
  CVector<long double> yl = evaluate(fl, xl);
  EXPECT_LE((yl.cast<std::complex<double>>() - evaluate(f, x)).norm(), 1e-13 * yl.norm());
  CMatrix<long double> Jl = jacobian(fl, xl);
  EXPECT_LE(static_cast<double>((Jl * xl - 3.0L * yl).norm()), 1e-15 * static_cast<double>(yl.norm()));
}
