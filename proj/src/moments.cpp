#include "coe/moments.hpp"

#include <algorithm>
#include <sstream>

#include "coe/weingarten.hpp"

namespace coe {

// ---------------------------------------------------------------- IndexSeq

IndexSeq::IndexSeq(std::vector<int> indices) : idx_(std::move(indices)) {
  if (idx_.size() < 2 || idx_.size() % 2 != 0)
    throw DomainError("index sequence must have even length >= 2, got " + std::to_string(idx_.size()));
  for (int v : idx_)
    if (v < 1) throw DomainError("indices are 1-based and must be >= 1");
}

IndexSeq IndexSeq::parse(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad index '" + item + "' in '" + text + "'");
    }
    if (used != item.size()) throw DomainError("bad index '" + item + "' in '" + text + "'");
    v.push_back(x);
  }
  return IndexSeq(std::move(v));
}

int IndexSeq::max_index() const { return *std::max_element(idx_.begin(), idx_.end()); }

IndexSeq IndexSeq::act(const Permutation& sigma) const {
  if (sigma.degree() != size()) throw DomainError("permutation degree does not match the index sequence");
  std::vector<int> out(idx_.size());
  for (int k = 1; k <= size(); ++k) out[static_cast<std::size_t>(k - 1)] = (*this)[sigma(k)];
  return IndexSeq(std::move(out));
}

IndexSeq IndexSeq::relabel(const std::vector<int>& relabel) const {
  std::vector<int> out;
  for (int v : idx_) {
    if (v > static_cast<int>(relabel.size())) throw DomainError("relabelling does not cover index " + std::to_string(v));
    out.push_back(relabel[static_cast<std::size_t>(v - 1)]);
  }
  return IndexSeq(std::move(out));
}

std::string IndexSeq::str() const {
  std::string s;
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(idx_[k]);
  }
  return s;
}

// ---------------------------------------------------------------- matchings

namespace {

struct Block {
  std::vector<int> targets;  // positions k (0-based) in j
  std::vector<int> sources;  // positions in i carrying the same value
};

std::optional<std::vector<Block>> value_blocks(std::span<const int> i, std::span<const int> j) {
  if (i.size() != j.size()) return std::nullopt;
  std::map<int, Block> by_value;
  for (std::size_t k = 0; k < i.size(); ++k) by_value[i[k]].sources.push_back(static_cast<int>(k));
  for (std::size_t k = 0; k < j.size(); ++k) by_value[j[k]].targets.push_back(static_cast<int>(k));
  std::vector<Block> blocks;
  for (auto& [v, b] : by_value) {
    if (b.sources.size() != b.targets.size()) return std::nullopt;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

bool all_equal(const IndexSeq& s) {
  const auto& v = s.indices();
  return std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
}

void check_half_degree(int n, const Limits& limits) {
  if (n > limits.n_max)
    throw ResourceError("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(limits.n_max));
}

}  // namespace

Integer matching_count(std::span<const int> i, std::span<const int> j) {
  auto blocks = value_blocks(i, j);
  if (!blocks) return 0;
  Integer c = 1;
  for (const auto& b : *blocks) c *= factorial(static_cast<int>(b.sources.size()));
  return c;
}

void for_each_matching(std::span<const int> i, std::span<const int> j,
                       const std::function<void(const Permutation&)>& visit, const Limits& limits) {
  auto blocks = value_blocks(i, j);
  if (!blocks) return;
  const Integer count = matching_count(i, j);
  if (count > limits.budget)
    throw ResourceError(count.get_str() + " matching permutations exceed the budget of " +
                        std::to_string(limits.budget) + "; use the closed-form `single` operations");

  std::vector<int> img(i.size());
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks->size()) {
      visit(Permutation::from_zero_based(img));
      return;
    }
    Block& blk = (*blocks)[b];
    // sources starts sorted, and next_permutation restores it on exit.
    do {
      for (std::size_t k = 0; k < blk.targets.size(); ++k)
        img[static_cast<std::size_t>(blk.targets[k])] = blk.sources[k];
      rec(b + 1);
    } while (std::next_permutation(blk.sources.begin(), blk.sources.end()));
  };
  rec(0);
}

std::vector<Permutation> matching_permutations(const IndexSeq& i, const IndexSeq& j, const Limits& limits) {
  std::vector<Permutation> out;
  for_each_matching(i.indices(), j.indices(), [&](const Permutation& s) { out.push_back(s); }, limits);
  return out;
}

std::map<Partition, Integer> coset_counts(const IndexSeq& i, const IndexSeq& j, const Limits& limits) {
  std::map<Partition, Integer> counts;
  if (i.size() != j.size()) return counts;
  const int n = i.half_degree();
  if (all_equal(i) && i == j) {
    // Every σ ∈ S_2n matches; the counts are the double coset sizes.
    for (const auto& mu : partitions_of(n)) counts[mu] = double_coset_size(mu);
    return counts;
  }
  std::map<Partition, std::uint64_t> raw;
  for_each_matching(i.indices(), j.indices(), [&](const Permutation& s) { ++raw[coset_type(s.zero_based())]; },
                    limits);
  for (const auto& [mu, c] : raw) counts[mu] = Integer(static_cast<unsigned long>(c));
  return counts;
}

// ---------------------------------------------------------------- engine

MomentResult coe_moment_symbolic(const IndexSeq& i, const IndexSeq& j, const Limits& limits) {
  MomentResult r;
  r.i = i;
  r.j = j;
  r.n = i.half_degree();
  if (coe_vanishes(i, j)) {
    r.match_count = 0;
    return r;
  }
  check_half_degree(r.n, limits);
  r.per_coset = coset_counts(i, j, limits);
  r.match_count = 0;
  const WgOTable& wg = wg_o_table(r.n, limits);
  for (const auto& [mu, c] : r.per_coset) {
    r.match_count += c;
    r.symbolic += wg.values.at(mu) * RatFunc(Rational(c));
  }
  return r;
}

MomentResult coe_moment_result(const IndexSeq& i, const IndexSeq& j, int N, const Limits& limits) {
  if (N < 1) throw DomainError("N must be >= 1");
  if (i.max_index() > N || j.max_index() > N)
    throw DomainError("index exceeds N = " + std::to_string(N));
  MomentResult r = coe_moment_symbolic(i, j, limits);
  r.N = N;
  try {
    r.value_at = eval_at(r.symbolic, Rational(N + 1));
  } catch (const PoleError&) {
    throw InternalError("reduced moment " + render(r.symbolic) + " has a pole at z = N+1 = " +
                        std::to_string(N + 1) + "; this contradicts the moment formula");
  }
  return r;
}

Rational coe_moment(const IndexSeq& i, const IndexSeq& j, int N, const Limits& limits) {
  return *coe_moment_result(i, j, N, limits).value_at;
}

bool coe_vanishes(const IndexSeq& i, const IndexSeq& j) {
  return i.size() != j.size() || matching_count(i.indices(), j.indices()) == 0;
}

// ---------------------------------------------------------------- closed forms

namespace {

RatFunc inv_linear(int shift) { return RatFunc(Poly::constant(1), Poly::linear(shift)); }

Integer double_factorial(int k) {
  Integer acc = 1;
  for (int x = k; x > 1; x -= 2) acc *= x;
  return acc;
}

void check_positive(int n) {
  if (n < 1) throw DomainError("moment degree n must be >= 1");
}

}  // namespace

RatFunc diagonal_moment_symbolic(int n) {
  check_positive(n);
  Integer hn = factorial(n);
  hn <<= static_cast<mp_bitcnt_t>(n);
  RatFunc f{Rational(hn)};
  for (int j = 1; j <= n; ++j) f *= inv_linear(2 * j - 1);
  return f;
}

Rational diagonal_moment(int n, int N) {
  if (N < 1) throw DomainError("N must be >= 1");
  return eval_at(diagonal_moment_symbolic(n), N);
}

RatFunc offdiagonal_moment_symbolic(int n) {
  check_positive(n);
  RatFunc f(Rational(factorial(n)));
  f *= inv_linear(2 * n - 1);
  for (int k = 0; k <= n - 2; ++k) f *= inv_linear(k);
  return f;
}

Rational offdiagonal_moment(int n, int N) {
  if (N < 2) throw DomainError("an off-diagonal entry needs N >= 2");
  return eval_at(offdiagonal_moment_symbolic(n), N);
}

RatFunc a_r_term(int n, int r) {
  check_positive(n);
  if (r < 0 || r > n / 2) throw DomainError("A_r needs 0 <= r <= floor(n/2)");
  RatFunc f(Rational(Integer(2 * n - 4 * r + 1), double_factorial(2 * r) * double_factorial(2 * n - 2 * r + 1)));
  for (int j = 1; j <= n - r; ++j) f *= inv_linear(2 * j - 1);
  for (int j = 0; j <= r - 1; ++j) f *= inv_linear(2 * j);
  return f;
}

RatFunc a_r_definition(int n, int r) {
  check_positive(n);
  if (r < 0 || r > n / 2) throw DomainError("A_r needs 0 <= r <= floor(n/2)");
  const Partition lambda = Partition::from_unsorted({n - r, r});
  const Poly cp = c_prime(lambda);
  return RatFunc(Poly::constant(cp(2) / Rational(hook_product(lambda.doubled()))), cp.shifted(1));
}

RatFunc a_partial_sum(int n, int k) {
  check_positive(n);
  if (k < 0 || k > n / 2) throw DomainError("partial sum needs 0 <= k <= floor(n/2)");
  RatFunc f(Rational(Integer(1), double_factorial(2 * k) * double_factorial(2 * (n - k) - 1)));
  f *= inv_linear(2 * n - 1);
  for (int j = 1; j <= n - k - 1; ++j) f *= inv_linear(2 * j - 1);
  for (int j = 0; j <= k - 1; ++j) f *= inv_linear(2 * j);
  return f;
}

namespace {

// Σ_{ℓ(λ) <= 2} f^{2λ} C'_λ(2) / C'_λ(N + offset)
RatFunc two_row_terms(int n, int offset) {
  RatFunc sum;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.length() > 2) continue;
    const Poly cp = c_prime(lambda);
    sum += RatFunc(Poly::constant(Rational(f_dim(lambda.doubled())) * cp(2)), cp.shifted(offset));
  }
  return sum;
}

}  // namespace

RatFunc two_row_sum(int n, const Limits& limits) {
  check_positive(n);
  check_half_degree(n, limits);
  const Integer nf = factorial(n);
  return two_row_terms(n, 1) * RatFunc(ratio(nf * nf, factorial(2 * n)));
}

RatFunc orthogonal_diagonal_pair_sum(int n) {
  check_positive(n);
  return two_row_terms(n, 0);
}

RatFunc orthogonal_diagonal_pair_closed_form(int n) {
  check_positive(n);
  RatFunc f(Rational(factorial(2 * n), factorial(n)));
  f *= inv_linear(2 * n - 2);
  for (int k = 0; k <= n - 2; ++k) f *= inv_linear(k - 1);
  return f;
}

// ---------------------------------------------------------------- oracles

RatFunc unitary_oracle(const IndexSeq& i, const IndexSeq& j, int max_n, const Limits& limits) {
  if (i.size() != j.size()) return {};
  const int n = i.half_degree();
  if (n > max_n)
    throw ResourceError("unitary oracle enumerates S_2n and is limited to n <= " + std::to_string(max_n));
  const int m = 2 * n;

  struct Tau {
    std::vector<int> inverse;
    int components;
  };
  std::vector<Tau> taus;
  for_each_permutation(
      m,
      [&](const Permutation& t) {
        auto inv = t.inverse();
        taus.push_back({std::vector<int>(inv.zero_based().begin(), inv.zero_based().end()),
                        coset_length(t.zero_based())});
      },
      limits);

  // Aggregate Σ_σ Σ_τ by (ℓ'(τ), cycle-type of τ^-1 σ) before touching rationals.
  std::map<std::pair<int, Partition>, std::uint64_t> counts;
  std::vector<int> prod(static_cast<std::size_t>(m));
  for_each_matching(
      i.indices(), j.indices(),
      [&](const Permutation& sigma) {
        auto s = sigma.zero_based();
        for (const auto& t : taus) {
          for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = t.inverse[static_cast<std::size_t>(s[k])];
          ++counts[{t.components, cycle_type(prod)}];
        }
      },
      limits);

  const WgUTable& wg = wg_u_table(m, limits);
  RatFunc total;
  for (const auto& [key, c] : counts) {
    const auto& [components, rho] = key;
    total += RatFunc(Poly::monomial(Rational(Integer(static_cast<unsigned long>(c))), components)) *
             wg.values.at(rho);
  }
  return total;
}

RatFunc haar_unitary_moment(std::span<const int> i, std::span<const int> j, std::span<const int> ip,
                            std::span<const int> jp, const Limits& limits) {
  if (i.size() != j.size() || ip.size() != jp.size()) throw DomainError("row and column sequences differ in length");
  if (i.size() != ip.size()) return {};
  std::vector<Permutation> rows;
  std::vector<Permutation> cols;
  for_each_matching(i, ip, [&](const Permutation& s) { rows.push_back(s); }, limits);
  for_each_matching(j, jp, [&](const Permutation& t) { cols.push_back(t); }, limits);
  if (rows.empty() || cols.empty()) return {};
  std::map<Partition, std::uint64_t> counts;
  for (const auto& s : rows) {
    const Permutation s_inv = s.inverse();
    for (const auto& t : cols) ++counts[cycle_type(s_inv * t)];
  }
  const WgUTable& wg = wg_u_table(static_cast<int>(i.size()), limits);
  RatFunc total;
  for (const auto& [rho, c] : counts) total += wg.values.at(rho) * RatFunc(Rational(Integer(static_cast<unsigned long>(c))));
  return total;
}

Integer count_tilde_solutions(const Permutation& tau, int N, const Limits& limits) {
  if (tau.degree() % 2 != 0) throw DomainError("τ must have even degree");
  if (N < 1) throw DomainError("N must be >= 1");
  const int n = tau.degree() / 2;
  Integer space;
  mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(N), 2ul * static_cast<unsigned long>(n));
  if (space > limits.budget)
    throw ResourceError("N^2n = " + space.get_str() + " pairs exceed the enumeration budget");

  const std::uint64_t side = space.get_ui();
  auto t = tau.zero_based();
  std::vector<int> k(static_cast<std::size_t>(n));
  std::vector<int> l(static_cast<std::size_t>(n));
  std::uint64_t hits = 0;
  for (std::uint64_t code = 0; code < side; ++code) {
    std::uint64_t c = code;
    for (int a = 0; a < n; ++a, c /= static_cast<std::uint64_t>(N)) k[static_cast<std::size_t>(a)] = static_cast<int>(c % static_cast<std::uint64_t>(N));
    for (int a = 0; a < n; ++a, c /= static_cast<std::uint64_t>(N)) l[static_cast<std::size_t>(a)] = static_cast<int>(c % static_cast<std::uint64_t>(N));
    // k~_p = k_{p/2}; require l~_q = k~_{τ(q)} for every position q.
    bool ok = true;
    for (int q = 0; q < 2 * n && ok; ++q)
      ok = l[static_cast<std::size_t>(q / 2)] == k[static_cast<std::size_t>(t[static_cast<std::size_t>(q)] / 2)];
    if (ok) ++hits;
  }
  return Integer(static_cast<unsigned long>(hits));
}

// ---------------------------------------------------------------- asymptotics

AsymptoticCounts asymptotic_counts(const IndexSeq& i, const IndexSeq& j, const Limits& limits) {
  AsymptoticCounts out;
  if (i.size() != j.size()) return out;
  const int n = i.half_degree();
  check_half_degree(n, limits);
  out.per_coset = coset_counts(i, j, limits);
  if (auto it = out.per_coset.find(Partition::ones(n)); it != out.per_coset.end()) out.s = it->second;
  if (n >= 2)
    if (auto it = out.per_coset.find(Partition::transposition_type(n)); it != out.per_coset.end())
      out.s_prime = it->second;
  return out;
}

LaurentSeries moment_expansion(const IndexSeq& i, const IndexSeq& j, int orders, const Limits& limits) {
  const MomentResult r = coe_moment_symbolic(i, j, limits);
  return series_from(shift(r.symbolic), -r.n, orders);
}

}  // namespace coe
