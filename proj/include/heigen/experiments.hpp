#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heigen/driver.hpp"

namespace heigen {

enum class Check {
  UpperMean,  // mean + 2 se <= bound
  LowerMean,  // mean + 2 se >= bound (not significantly below)
  Matches,    // |mean - bound| <= 2 se
  AtMost,     // mean <= bound
  AtLeast,    // mean >= bound
  Within,     // |mean - bound| <= tol
  RelWithin,  // |mean - bound| <= tol |bound|
};

const char* to_string(Check c);

struct Estimate {
  std::string statistic;  // which experiment produced it
  std::string name;       // what was measured
  int n = 0, d = 0;
  std::uint64_t samples = 0;
  double mean = 0, stderr_ = 0, bound = 0, tol = 0;
  Check kind = Check::AtMost;
  bool pass = false;
};

// Sets e.pass from kind, mean, stderr, bound and tol.
void judge(Estimate& e);

struct BenchReport {
  int n = 0, d = 0;
  std::uint64_t samples = 0, seed = 0;
  std::vector<Estimate> entries;
  bool all_pass() const;
};

// mean and standard error of the mean
struct MeanSe {
  double mean, se;
};
MeanSe mean_se(const std::vector<double>& xs);

std::uint64_t dim_H(int n, int d);  // N = n binom(n+d-1, n-1)

// Average over all h-eigenpairs of mu_hat^2, averaged over uniform q; n = 2.
Estimate estimate_mu_hat_sq_av(int n, int d, std::uint64_t samples, std::uint64_t seed,
                               std::uint64_t* skipped = nullptr);

struct RunRecord {
  Status status;
  std::uint64_t K;
  double alpha, mu_sq_int, residual, max_ratio;
  double oracle_dist;  // -1 when no oracle (n > 2)
  double bound_ratio;  // K / (246 d^2 sqrt(n) alpha C)
};

std::vector<RunRecord> run_solver_study(int n, int d, std::uint64_t samples, std::uint64_t seed,
                                        const EalhParams<double>& p = {}, int refine_steps = 3);

// success rate, mean K, mean C, worst K inequality ratio, oracle distances
std::vector<Estimate> estimate_iteration_bound(int n, int d, std::uint64_t samples,
                                               std::uint64_t seed,
                                               const EalhParams<double>& p = {},
                                               std::vector<RunRecord>* runs = nullptr);

// P(|eta| >= 1) for a uniform h-eigenpair of q ~ N(H); two entries: the
// closed form comparison and the e^-1 lower bound. n = 2.
std::vector<Estimate> eta_magnitude_stat(int n, int d, std::uint64_t samples, std::uint64_t seed);
double eta_magnitude_closed_form(int n, int d);

// Frequency of the step-count lower bound of generic linear homotopy
// exceeding (74/sqrt2)(n/sqrt d) 2^(2(d-1)); n = 2.
Estimate classical_alh_lower_bound(int n, int d, std::uint64_t samples, std::uint64_t seed,
                                   int nodes = 200);
double classical_alh_threshold(int n, int d);

std::vector<Estimate> verify_identities(std::uint64_t seed, std::uint64_t mc_draws = 100000);

Estimate sampler_acceptance(int n, int d, std::uint64_t attempts, std::uint64_t seed);
Estimate start_validity(int n, int d, std::uint64_t count, std::uint64_t seed);

// Condition sandwich, |eta| <= 1 and 2 d mu >= 1 at oracle eigenpairs of unit systems; n = 2.
std::vector<Estimate> eigenpair_invariants(int n, int d, std::uint64_t systems, std::uint64_t seed);

// Violation counts of the two Lipschitz estimates for mu.
Estimate lipschitz_system(int n, int d, std::uint64_t instances, std::uint64_t seed);
Estimate lipschitz_point(int n, int d, std::uint64_t instances, std::uint64_t seed);

// everything the `bench` command runs for one (n, d)
BenchReport run_bench(int n, int d, std::uint64_t samples, std::uint64_t seed,
                      const EalhParams<double>& p = {});

}  // namespace heigen
