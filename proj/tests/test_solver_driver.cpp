#include <gtest/gtest.h>

#include <set>

#include "heigen/parallel.hpp"
#include "test_util.hpp"

using namespace heigen;
using namespace testutil;

namespace {

// Direct check that (v, lambda) solves f(v) = lambda v.
double eig_residual(const PolySystem<double>& f, const CVector<double>& v, cd lambda) {
  return (eval_raw(f, v) - lambda * v).norm();
}

}  // namespace

TEST(Oracle, DiagonalSquares) {
  auto f = diagonal_squares();
  auto o = oracle_eigenpairs_n2(f);
  ASSERT_EQ(o.pairs.size(), 3u);
  ASSERT_EQ(o.h_pairs.size(), 3u);
  const double s = 1 / std::sqrt(2.0);
  std::vector<std::pair<CVector<double>, cd>> want = {
      {vec({1, 0}), 1.0}, {vec({0, 1}), 1.0}, {vec({s, s}), s}};
  for (auto& [v, l] : want) {
    double best = 1;
    for (auto& p : o.pairs) {
      EigenPairCandidate<double> a(p.v, p.lambda), b(v, l);
      best = std::min(best, d_proj(a, b));
    }
    EXPECT_LE(best, 1e-12);
  }
}

TEST(Oracle, CountsAndResiduals) {
  RngStream rng(31);
  for (int d = 2; d <= 5; ++d) {
    auto f = gaussian_system<double>(rng, 2, d);
    auto o = oracle_eigenpairs_n2(f);
    // d^n - 1 classes over d - 1 for generic systems
    EXPECT_EQ(o.pairs.size(), static_cast<size_t>(d + 1));
    EXPECT_EQ(o.h_pairs.size(), static_cast<size_t>((d + 1) * (d - 1)));
    for (auto& p : o.pairs) {
      EXPECT_NEAR(p.v.norm(), 1.0, 1e-14);
      EXPECT_LE(eig_residual(f, p.v, p.lambda), 1e-9 * bw_norm(f));
    }
    for (auto& h : o.h_pairs) EXPECT_LE(ff_eval(f, {h.v, h.lambda}).norm(), 1e-9 * bw_norm(f));
  }
}

TEST(Oracle, Degenerate) {
  // f = (X1 * l, X2 * l): every vector is an eigenvector
  PolySystem<double> f(2, 1);
  f.coeffs() = CMatrix<double>::Identity(2, 2);
  EXPECT_THROW(oracle_eigenpairs_n2(f), Error);
  PolySystem<double> g(3, 2);
  EXPECT_THROW(oracle_eigenpairs_n2(g), Error);
}

TEST(Driver, SolvesRandomSystemsToOraclePairs) {
  for (int d = 2; d <= 3; ++d) {
    RngStream frng(32 + d);
    for (int i = 0; i < 25; ++i) {
      auto f = gaussian_system<double>(frng, 2, d);
      RngStream rng(1000 + i, d);
      auto r = lv_ealh_star(f, rng);
      ASSERT_EQ(r.status, Status::Success) << d << " " << i;
      EXPECT_LE(r.residual, 1e-10);
      EXPECT_NEAR(r.cand.stacked().norm(), 1.0, 1e-12);
      PolySystem<double> fu = f;
      fu.coeffs() /= bw_norm(f);
      EXPECT_LE(oracle_distance(oracle_eigenpairs_n2(fu), r.cand), 1e-8);
      // homogeneous rescaling back to the input system
      const double sc = std::pow(bw_norm(f), 1.0 / (d - 1));
      EXPECT_LE(ff_eval(f, {r.cand.v, r.cand.lambda * sc}).norm(), 1e-9 * bw_norm(f));
    }
  }
}

TEST(Driver, DiagonalCoversAllClasses) {
  auto f = diagonal_squares();
  auto o = oracle_eigenpairs_n2(f);
  std::set<size_t> seen;
  for (std::uint64_t s = 0; s < 100; ++s) {
    RngStream rng(s, 0);
    auto r = lv_ealh_star(f, rng);
    ASSERT_EQ(r.status, Status::Success);
    size_t k = 0;
    PolySystem<double> fu = f;
    fu.coeffs() /= bw_norm(f);
    auto ou = oracle_eigenpairs_n2(fu);
    EXPECT_LE(oracle_distance(ou, r.cand, &k), 1e-8);
    seen.insert(k);
  }
  EXPECT_EQ(seen.size(), o.h_pairs.size());
}

TEST(Driver, StartIsReportedOnUnitSphere) {
  RngStream frng(35);
  auto f = gaussian_system<double>(frng, 3, 2);
  RngStream rng(36);
  StartTriple<double> st;
  auto r = lv_ealh_star(f, rng, {}, 3, &st);
  EXPECT_EQ(r.status, Status::Success);
  EXPECT_NEAR(bw_norm(st.g), 1.0, 1e-13);
  EXPECT_LE(ff_eval(st.g, {st.zeta, st.eta}).norm(), 1e-12);
}

TEST(Driver, Determinism) {
  RngStream frng(37);
  auto f = gaussian_system<double>(frng, 3, 3);
  RngStream a(5, 0), b(5, 0);
  auto r1 = lv_ealh_star(f, a);
  auto r2 = lv_ealh_star(f, b);
  EXPECT_EQ(r1.iterations, r2.iterations);
  EXPECT_EQ((r1.cand.v - r2.cand.v).norm(), 0.0);
  EXPECT_EQ(r1.cand.lambda, r2.cand.lambda);
}

TEST(Driver, RejectsBadInput) {
  RngStream rng(38);
  EXPECT_THROW(lv_ealh_star(PolySystem<double>(2, 2), rng), Error);
  EXPECT_THROW(lv_ealh_star(PolySystem<double>(3, 2, 2), rng), Error);
  EXPECT_THROW(lv_ealh_star(diagonal_squares(), rng, {}, -1), Error);
}

TEST(Parallel, RunsEveryIndexAndRethrows) {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; }, 4);
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) { if (i == 7) throw Error(ErrorKind::NonFinite, "x"); }, 2),
               Error);
}
