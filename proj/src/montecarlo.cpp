#include "coe/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "json.hpp"

namespace coe {

Rng make_rng(const RngSpec& spec, std::uint64_t batch) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffu); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(spec.seed), hi(spec.seed), lo(spec.stream_id), hi(spec.stream_id), lo(batch), hi(batch)};
  return Rng(seq);
}

namespace {

void check_dimension(int N) {
  if (N < 1) throw DomainError("matrix dimension must be >= 1");
}

}  // namespace

Eigen::MatrixXcd sample_haar_unitary(int N, Rng& rng) {
  check_dimension(N);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd z(N, N);
  for (int c = 0; c < N; ++c)
    for (int r = 0; r < N; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(r, c) = {re, im};
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(N, N);
  const auto& packed = qr.matrixQR();
  // Without this rescaling the distribution is not Haar.
  for (int k = 0; k < N; ++k) {
    const std::complex<double> d = packed(k, k);
    const double mag = std::abs(d);
    if (mag > 0) q.col(k) *= d / mag;
  }
  return q;
}

Eigen::MatrixXd sample_haar_orthogonal(int N, Rng& rng) {
  check_dimension(N);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(N, N);
  for (int c = 0; c < N; ++c)
    for (int r = 0; r < N; ++r) g(r, c) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(N, N);
  const auto& packed = qr.matrixQR();
  for (int k = 0; k < N; ++k)
    if (packed(k, k) < 0) q.col(k) *= -1.0;
  return q;
}

Eigen::MatrixXcd sample_coe(int N, Rng& rng) {
  Eigen::MatrixXcd u = sample_haar_unitary(N, rng);
  return u.transpose() * u;
}

MCEstimate estimate(const std::function<std::complex<double>(Rng&)>& draw, const MCOptions& opts) {
  if (opts.batches < 2) throw DomainError("batch means need at least 2 batches");
  if (opts.samples == 0) throw DomainError("sample count must be positive");
  const auto batches = static_cast<std::uint64_t>(opts.batches);
  const std::uint64_t per_batch = (opts.samples + batches - 1) / batches;

  std::vector<std::complex<double>> means(batches);
  auto run_batch = [&](std::uint64_t b) {
    Rng rng = make_rng(opts.rng, b);
    std::complex<double> sum = 0;
    for (std::uint64_t s = 0; s < per_batch; ++s) sum += draw(rng);
    means[b] = sum / static_cast<double>(per_batch);
  };

  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : static_cast<unsigned>(std::max(1, opts.threads));
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, batches));
  if (threads <= 1) {
    for (std::uint64_t b = 0; b < batches; ++b) run_batch(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t b = t; b < batches; b += threads) run_batch(b);
      });
    for (auto& th : pool) th.join();
  }

  // Merge in batch order so the result is independent of scheduling.
  std::complex<double> total = 0;
  for (const auto& m : means) total += m;
  const double B = static_cast<double>(batches);
  const std::complex<double> mean = total / B;
  double var_re = 0;
  double var_im = 0;
  for (const auto& m : means) {
    var_re += (m.real() - mean.real()) * (m.real() - mean.real());
    var_im += (m.imag() - mean.imag()) * (m.imag() - mean.imag());
  }
  var_re /= (B - 1);
  var_im /= (B - 1);
  return MCEstimate{mean, std::sqrt(var_re / B), std::sqrt(var_im / B), per_batch * batches, opts.batches};
}

MCEstimate estimate_moment(const IndexSeq& i, const IndexSeq& j, int N, const MCOptions& opts) {
  check_dimension(N);
  if (i.max_index() > N || j.max_index() > N) throw DomainError("index exceeds N = " + std::to_string(N));
  const auto& a = i.indices();
  const auto& b = j.indices();
  return estimate(
      [&](Rng& rng) {
        const Eigen::MatrixXcd v = sample_coe(N, rng);
        std::complex<double> hol = 1;
        std::complex<double> anti = 1;
        for (std::size_t k = 0; k + 1 < a.size(); k += 2) hol *= v(a[k] - 1, a[k + 1] - 1);
        for (std::size_t k = 0; k + 1 < b.size(); k += 2) anti *= v(b[k] - 1, b[k + 1] - 1);
        return hol * std::conj(anti);
      },
      opts);
}

MCEstimate estimate_unitary_moment(const std::vector<int>& i, const std::vector<int>& j,
                                   const std::vector<int>& ip, const std::vector<int>& jp, int N,
                                   const MCOptions& opts) {
  check_dimension(N);
  if (i.size() != j.size() || ip.size() != jp.size()) throw DomainError("row and column sequences differ in length");
  auto in_range = [N](const std::vector<int>& v) {
    for (int x : v)
      if (x < 1 || x > N) throw DomainError("index outside 1..N");
  };
  in_range(i), in_range(j), in_range(ip), in_range(jp);
  return estimate(
      [&](Rng& rng) {
        const Eigen::MatrixXcd u = sample_haar_unitary(N, rng);
        std::complex<double> hol = 1;
        std::complex<double> anti = 1;
        for (std::size_t k = 0; k < i.size(); ++k) hol *= u(i[k] - 1, j[k] - 1);
        for (std::size_t k = 0; k < ip.size(); ++k) anti *= u(ip[k] - 1, jp[k] - 1);
        return hol * std::conj(anti);
      },
      opts);
}

MCEstimate estimate_orthogonal_moment(const std::vector<int>& rows, const std::vector<int>& cols, int N,
                                      const MCOptions& opts) {
  check_dimension(N);
  if (rows.size() != cols.size()) throw DomainError("row and column sequences differ in length");
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k] < 1 || rows[k] > N || cols[k] < 1 || cols[k] > N) throw DomainError("index outside 1..N");
  return estimate(
      [&](Rng& rng) {
        const Eigen::MatrixXd o = sample_haar_orthogonal(N, rng);
        double p = 1;
        for (std::size_t k = 0; k < rows.size(); ++k) p *= o(rows[k] - 1, cols[k] - 1);
        return std::complex<double>(p, 0.0);
      },
      opts);
}

namespace {

double z_score(double deviation, double stderr_) {
  if (stderr_ > 0) return deviation / stderr_;
  return std::abs(deviation) < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

Verdict compare(const Rational& exact, const MCEstimate& est, double k) {
  Verdict v;
  v.exact = exact;
  v.estimate = est;
  v.k = k;
  v.z_re = z_score(est.mean.real() - exact.get_d(), est.stderr_re);
  v.z_im = z_score(est.mean.imag(), est.stderr_im);
  v.pass = std::abs(v.z_re) < k && std::abs(v.z_im) < k;
  return v;
}

MomentVerdict verify(const IndexSeq& i, const IndexSeq& j, int N, const MCOptions& opts, double k,
                     const Limits& limits) {
  MomentVerdict out;
  out.i = i;
  out.j = j;
  out.N = N;
  out.seed = opts.rng.seed;
  const Rational exact = coe_moment(i, j, N, limits);
  out.verdict = compare(exact, estimate_moment(i, j, N, opts), k);
  return out;
}

std::string MomentVerdict::json() const {
  const auto& e = verdict.estimate;
  auto finite = [](double x) -> nlohmann::json {
    if (std::isfinite(x)) return x;
    return nullptr;
  };
  nlohmann::json doc = {
      {"i", i.indices()},
      {"j", j.indices()},
      {"N", N},
      {"samples", e.samples},
      {"seed", seed},
      {"exact", verdict.exact.get_str()},
      {"estimate", {e.mean.real(), e.mean.imag()}},
      {"stderr", {e.stderr_re, e.stderr_im}},
      {"z", {finite(verdict.z_re), finite(verdict.z_im)}},
      {"pass", verdict.pass},
  };
  return doc.dump();
}

}  // namespace coe
