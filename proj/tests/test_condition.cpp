#include <gtest/gtest.h>

#include <numbers>

#include <Eigen/Eigenvalues>

#include "test_util.hpp"

using namespace heigen;
using namespace testutil;

namespace {

// (X1^2, X2^2) / sqrt(2), unit norm, with its eigenpair on the diagonal
PolySystem<double> scaled_diagonal() {
  PolySystem<double> f = diagonal_squares();
  f.coeffs() /= std::sqrt(2.0);
  return f;
}

EigenPairCandidate<double> diagonal_pair() {
  const double r = 1 / std::sqrt(2.0);
  return EigenPairCandidate<double>(vec({r, r}), 0.5);
}

}  // namespace

TEST(Mu, DiagonalAgainstDirectLinearAlgebra) {
  auto f = scaled_diagonal();
  auto c = diagonal_pair();
  ASSERT_LE(ff_eval(f, c).norm(), 1e-15);
  // written out by hand: DF = [I - eta I | -v], eta = 1/2
  const double r = 1 / std::sqrt(2.0);
  CMatrix<double> DF(2, 3);
  DF << 0.5, 0, -r, 0, 0.5, -r;
  // at a zero DF (v, eta) = 0, so the restricted inverse is the pseudoinverse;
  // its norm is 1/sqrt(smallest eigenvalue of DF DF^H)
  Eigen::SelfAdjointEigenSolver<CMatrix<double>> es(DF * DF.adjoint());
  const double direct = 1 / std::sqrt(es.eigenvalues()(0));
  EXPECT_NEAR(direct, 2.0, 1e-14);
  EXPECT_NEAR(mu(f, c), direct, 1e-10 * direct);
  // mu_hat: DF on the orthonormal basis ((1,-1)/sqrt2, 0), e3 has
  // orthogonal columns of lengths 1/2 and 1
  EXPECT_NEAR(mu_hat(f, c), 2.0, 1e-10);
}

TEST(Mu, RepresentativeAndUnitaryInvariance) {
  RngStream rng(21);
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 3; ++d) {
      auto f = unit_system<double>(rng, n, d);
      EigenPairCandidate<double> c(gaussian_complex<double>(rng, n), rng.complex_normal());
      const double m = mu(f, c);
      const cd s(1, 2);
      EXPECT_NEAR(mu(f, EigenPairCandidate<double>(s * c.v, s * c.lambda)), m, 1e-9 * m);
      CMatrix<double> U = haar_unitary<double>(rng, n);
      EXPECT_NEAR(mu(unitary_action(U, f), EigenPairCandidate<double>(U * c.v, c.lambda)), m, 1e-9 * m);
    }
  }
}

TEST(MuHat, ScaleInvariance) {
  RngStream rng(22);
  for (int d = 2; d <= 4; ++d) {
    auto f = gaussian_system<double>(rng, 3, d);
    EigenPairCandidate<double> c(gaussian_complex<double>(rng, 3).normalized(), rng.complex_normal());
    const cd s = rng.complex_normal();
    PolySystem<double> g = std::pow(s, d - 1) * f;
    const double m = mu_hat(f, c);
    EXPECT_NEAR(mu_hat(g, EigenPairCandidate<double>(c.v, s * c.lambda)), m, 1e-9 * m);
  }
}

TEST(MuHat, SandwichAtOracleEigenpairs) {
  RngStream rng(23);
  for (int d = 2; d <= 4; ++d) {
    for (int rep = 0; rep < 10; ++rep) {
      auto f = unit_system<double>(rng, 2, d);
      for (const auto& h : oracle_eigenpairs_n2(f).h_pairs) {
        const double m = mu(f, h), mh = mu_hat(f, h);
        EXPECT_LE(mh / std::sqrt(2.0) - 1e-9, m);
        EXPECT_LE(m, mh + 1e-9);
        EXPECT_GE(2 * d * m, 1 - 1e-9);          // 1 <= 2 d mu
        EXPECT_LE(std::abs(h.lambda), 1 + 1e-9);  // |eta| <= 1 for unit f
      }
    }
  }
}

TEST(Mu, SingularIsInfinite) {
  PolySystem<double> zero(2, 3);
  EigenPairCandidate<double> c(vec({1, 0}), 0.0);
  EXPECT_TRUE(std::isinf(mu(zero, c)));
  EXPECT_TRUE(std::isinf(gamma_bound(zero, c)));
  // f = (X2^2, 0) at (e1, 0): DF = [[0,0,-1],[0,0,0]]
  PolySystem<double> g(2, 2);
  g.coeffs()(0, g.table().index_of({0, 2})) = 1;
  EXPECT_TRUE(std::isinf(mu_hat(g, EigenPairCandidate<double>(vec({1, 0}), 0.0))));
  EXPECT_TRUE(std::isinf(mu(g, EigenPairCandidate<double>(vec({1, 0}), 0.0))));
}

TEST(GammaBound, Arithmetic) {
  EXPECT_DOUBLE_EQ(gamma_bound_from_mu(1.0, 2, 2), 8.0);
  EXPECT_TRUE(std::isinf(gamma_bound_from_mu(infinity<double>(), 2, 2)));
  RngStream rng(24);
  auto f = unit_system<double>(rng, 2, 3);
  EigenPairCandidate<double> c(gaussian_complex<double>(rng, 2), 0.3);
  EXPECT_NEAR(gamma_bound(f, c), mu(f, c) * 9 * 2, 1e-12 * mu(f, c));
  double prev = 0;
  for (double m : {0.1, 1.0, 3.0, 10.0}) {
    EXPECT_GT(gamma_bound_from_mu(m, 3, 3), prev);
    prev = gamma_bound_from_mu(m, 3, 3);
  }
  auto rep = condition_report(f, c);
  EXPECT_EQ(rep.gamma_bound, gamma_bound(f, c));
}

TEST(DeltaU, Examples) {
  const double pi = std::numbers::pi;
  auto a = solve_delta_u(2 / pi);
  EXPECT_NEAR(a.delta, pi / 2, 1e-12);
  auto b = solve_delta_u(0.999933);
  EXPECT_NEAR(b.delta, 0.02, 1e-4);
  EXPECT_GT(b.u, 0.1);
  for (double r : {0.7, 0.9, 0.99, 0.999933}) {
    auto du = solve_delta_u(r);
    EXPECT_LE(std::abs(std::sin(du.delta) - r * du.delta), 1e-11);
    const double psi = (1 + std::cos(du.delta)) * (1 - du.u) * (1 - du.u) - 1;
    EXPECT_LE(std::abs(2 * du.u - r * psi), 1e-11);
    EXPECT_GT(du.delta, 0);
    EXPECT_GT(du.u, 0);
  }
  EXPECT_THROW(solve_delta_u(0.5), Error);
  EXPECT_THROW(solve_delta_u(1.0), Error);
}

TEST(Mu, LongDoubleAgrees) {
  RngStream rng(25);
  auto f = unit_system<double>(rng, 3, 2);
  EigenPairCandidate<double> c(gaussian_complex<double>(rng, 3), rng.complex_normal());
  EigenPairCandidate<long double> cl(c.v.cast<std::complex<long double>>(), c.lambda);
  const double m = mu(f, c);
  EXPECT_NEAR(static_cast<double>(mu(f.cast<long double>(), cl)), m, 1e-12 * m);
  EXPECT_NEAR(static_cast<double>(mu_hat(f.cast<long double>(), cl)), mu_hat(f, c), 1e-12 * mu_hat(f, c));
}
