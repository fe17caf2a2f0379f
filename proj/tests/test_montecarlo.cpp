#include <cmath>
#include <numbers>

#include "coe/montecarlo.hpp"
#include "coe/moments.hpp"
#include "doctest.h"

using namespace coe;

TEST_CASE("sampled matrices are unitary, orthogonal and symmetric") {
  Rng rng = make_rng({5, 0});
  for (int N : {1, 3, 6}) {
    const auto u = sample_haar_unitary(N, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(N, N)).norm() < 1e-10);
    const auto o = sample_haar_orthogonal(N, rng);
    CHECK((o.transpose() * o - Eigen::MatrixXd::Identity(N, N)).norm() < 1e-10);
    const auto v = sample_coe(N, rng);
    CHECK((v.adjoint() * v - Eigen::MatrixXcd::Identity(N, N)).norm() < 1e-10);
    CHECK((v - v.transpose()).norm() < 1e-10);
  }
}

TEST_CASE("phase of u_11 is uniform") {
  // Without the phase correction the argument concentrates; chi-square over 16 bins.
  Rng rng = make_rng({9, 0});
  const int bins = 16, draws = 100000;
  std::vector<int> count(bins, 0);
  for (int t = 0; t < draws; ++t) {
    const double arg = std::arg(sample_haar_unitary(3, rng)(0, 0));
    int b = static_cast<int>((arg + std::numbers::pi) / (2 * std::numbers::pi) * bins);
    count[static_cast<std::size_t>(std::clamp(b, 0, bins - 1))]++;
  }
  double chi2 = 0;
  const double expected = static_cast<double>(draws) / bins;
  for (int c : count) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 37.70);  // 15 degrees of freedom, p = 0.001
}

TEST_CASE("estimates are reproducible and independent of thread count") {
  MCOptions opts;
  opts.samples = 4000;
  opts.rng.seed = 42;
  const auto a = estimate_moment({1, 1}, {1, 1}, 3, opts);
  const auto b = estimate_moment({1, 1}, {1, 1}, 3, opts);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_re == b.stderr_re);
  opts.threads = 3;
  const auto c = estimate_moment({1, 1}, {1, 1}, 3, opts);
  CHECK(a.mean == c.mean);
  opts.rng.seed = 43;
  CHECK(estimate_moment({1, 1}, {1, 1}, 3, opts).mean != a.mean);
  CHECK(a.samples == 4000);
}

TEST_CASE("standard error halves when samples quadruple") {
  // Averaged over 10 seeds: one ratio from 32 batch means is itself noisy.
  double total = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    MCOptions opts;
    opts.rng.seed = seed;
    opts.samples = 4000;
    const double small = estimate_moment({1, 2}, {1, 2}, 3, opts).stderr_re;
    opts.samples = 16000;
    const double large = estimate_moment({1, 2}, {1, 2}, 3, opts).stderr_re;
    total += small / large;
  }
  const double mean_ratio = total / 10;
  CHECK(mean_ratio > 1.5);
  CHECK(mean_ratio < 2.5);
}

TEST_CASE("verification against exact values") {
  MCOptions opts;
  opts.samples = 40000;
  opts.rng.seed = 2011;
  const auto v = verify({1, 1}, {1, 1}, 3, opts);
  CHECK(v.verdict.exact == ratio(1, 2));
  CHECK(v.verdict.pass);
  CHECK(v.json().find("\"pass\":true") != std::string::npos);
  const auto w = verify({1, 2, 1, 2}, {1, 1, 2, 2}, 3, opts);
  CHECK(w.verdict.pass);
  const auto o = estimate_orthogonal_moment({1, 1}, {1, 1}, 4, opts);
  CHECK(compare(ratio(1, 4), o).pass);
}

TEST_CASE("comparison edge cases") {
  MCEstimate exact_zero;
  exact_zero.mean = {0.0, 0.0};
  CHECK(compare(0, exact_zero).pass);
  MCEstimate off;
  off.mean = {0.5, 0.0};
  CHECK_FALSE(compare(0, off).pass);
  MCEstimate noisy;
  noisy.mean = {0.51, 0.0};
  noisy.stderr_re = 0.01;
  noisy.stderr_im = 0.01;
  const auto v = compare(ratio(1, 2), noisy);
  CHECK(v.z_re == doctest::Approx(1.0));
  CHECK(v.pass);
  CHECK_FALSE(compare(ratio(1, 2), noisy, 0.5).pass);
}
