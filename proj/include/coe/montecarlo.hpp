#pragma once

// Monte Carlo side of the house: Haar unitary/orthogonal and COE sampling,
// batch-means moment estimation, and comparison against exact values.
// Double precision only; exact values always come from coe/moments.hpp.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "coe/moments.hpp"

namespace coe {

/// Pinned generator. Substream (seed, stream_id, batch) seeds a fresh engine
/// through std::seed_seq, so runs are reproducible bit-for-bit on one build.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64/seed_seq(seed,stream,batch)";

struct RngSpec {
  std::uint64_t seed = 1;
  std::uint64_t stream_id = 0;
};

Rng make_rng(const RngSpec& spec, std::uint64_t batch = 0);

/// Ginibre + QR with the R-diagonal phase correction.
Eigen::MatrixXcd sample_haar_unitary(int N, Rng& rng);
/// Real Ginibre + QR with the R-diagonal sign correction.
Eigen::MatrixXd sample_haar_orthogonal(int N, Rng& rng);
/// V = U^T U for a fresh Haar unitary U.
Eigen::MatrixXcd sample_coe(int N, Rng& rng);

struct MCEstimate {
  std::complex<double> mean;
  double stderr_re = 0;
  double stderr_im = 0;
  std::uint64_t samples = 0;
  int batches = 0;
};

struct MCOptions {
  std::uint64_t samples = 100'000;
  int batches = 32;
  RngSpec rng;
  /// Worker threads; 0 picks hardware concurrency. Results do not depend on it.
  int threads = 1;
};

/// Generic batch-means estimator. `draw` produces one sample from its own
/// generator; batch b uses make_rng(opts.rng, b). samples is rounded up to a
/// multiple of batches.
MCEstimate estimate(const std::function<std::complex<double>(Rng&)>& draw, const MCOptions& opts);

/// E[v_{i1 i2} ... v_{i_{2n-1} i_2n} conj(v_{j1 j2} ...)] over the COE.
MCEstimate estimate_moment(const IndexSeq& i, const IndexSeq& j, int N, const MCOptions& opts);
/// E[u_{i1 j1} ... conj(u_{i'1 j'1} ...)] over Haar U(N).
MCEstimate estimate_unitary_moment(const std::vector<int>& i, const std::vector<int>& j,
                                   const std::vector<int>& ip, const std::vector<int>& jp, int N,
                                   const MCOptions& opts);
/// E[o_{r1 c1} o_{r2 c2} ...] over Haar O(N).
MCEstimate estimate_orthogonal_moment(const std::vector<int>& rows, const std::vector<int>& cols, int N,
                                      const MCOptions& opts);

struct Verdict {
  std::string label;
  Rational exact;
  MCEstimate estimate;
  double z_re = 0;
  double z_im = 0;
  double k = 4;
  bool pass = false;
};

/// PASS iff both |z| components are below k.
Verdict compare(const Rational& exact, const MCEstimate& est, double k = 4.0);

struct MomentVerdict {
  IndexSeq i;
  IndexSeq j;
  int N = 0;
  std::uint64_t seed = 0;
  Verdict verdict;
  /// {i, j, N, samples, seed, exact, estimate, stderr, z, pass}
  std::string json() const;
};

MomentVerdict verify(const IndexSeq& i, const IndexSeq& j, int N, const MCOptions& opts, double k = 4.0,
                     const Limits& limits = default_limits());

}  // namespace coe
