#include "coe/weingarten.hpp"

#include <memory>
#include <mutex>

namespace coe {

namespace {

struct WgCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<WgOTable>> orthogonal;
  std::map<int, std::unique_ptr<WgUTable>> unitary;
};

WgCache& wg_cache() {
  static WgCache c;
  return c;
}

WgOTable build_wg_o(int n, const Limits& limits) {
  const ZonalTable& omega = zonal_table(n, limits);
  Integer hn = factorial(n);
  hn <<= static_cast<mp_bitcnt_t>(n);
  const Rational prefactor = ratio(hn, factorial(2 * n));

  // One term per λ, shared across all μ.
  struct Term {
    Partition lambda;
    RatFunc weight;  // prefactor * f^{2λ} / C'_λ(z)
  };
  std::vector<Term> terms;
  for (const auto& lambda : partitions_of(n)) {
    Rational c = prefactor * Rational(f_dim(lambda.doubled()));
    terms.push_back({lambda, RatFunc(Poly::constant(c), c_prime(lambda))});
  }

  WgOTable table{n, {}};
  for (const auto& mu : partitions_of(n)) {
    RatFunc sum;
    for (const auto& t : terms) {
      const Rational& w = omega.at(t.lambda, mu);
      if (w != 0) sum += t.weight * RatFunc(w);
    }
    table.values.emplace(mu, std::move(sum));
  }
  return table;
}

WgUTable build_wg_u(int m, const Limits& limits) {
  const CharacterTable& chi = character_table(m, limits);
  const Rational inv_fact = ratio(1, factorial(m));
  WgUTable table{m, {}};
  std::vector<RatFunc> weights;
  for (const auto& lambda : chi.partitions())
    weights.emplace_back(Poly::constant(inv_fact * Rational(f_dim(lambda))), c_content(lambda));
  for (const auto& rho : chi.partitions()) {
    RatFunc sum;
    for (std::size_t a = 0; a < chi.partitions().size(); ++a) {
      const Integer& x = chi.at(static_cast<int>(a), chi.index_of(rho));
      if (x != 0) sum += weights[a] * RatFunc(Rational(x));
    }
    table.values.emplace(rho, std::move(sum));
  }
  return table;
}

}  // namespace

const WgOTable& wg_o_table(int n, const Limits& limits) {
  if (n < 1) throw DomainError("orthogonal Weingarten function needs n >= 1");
  if (n > limits.n_max)
    throw ResourceError("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(limits.n_max));
  auto& c = wg_cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.orthogonal.find(n); it != c.orthogonal.end()) return *it->second;
  }
  auto table = std::make_unique<WgOTable>(build_wg_o(n, limits));
  std::lock_guard lock(c.mutex);
  return *c.orthogonal.try_emplace(n, std::move(table)).first->second;
}

const WgUTable& wg_u_table(int m, const Limits& limits) {
  if (m < 1) throw DomainError("unitary Weingarten function needs m >= 1");
  if (m > 2 * limits.n_max)
    throw ResourceError("m = " + std::to_string(m) + " exceeds 2*n_max = " + std::to_string(2 * limits.n_max));
  auto& c = wg_cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.unitary.find(m); it != c.unitary.end()) return *it->second;
  }
  auto table = std::make_unique<WgUTable>(build_wg_u(m, limits));
  std::lock_guard lock(c.mutex);
  return *c.unitary.try_emplace(m, std::move(table)).first->second;
}

RatFunc wg_o(int n, const Partition& mu, const Limits& limits) {
  if (mu.weight() != n) throw DomainError("coset-type (" + mu.str() + ") is not a partition of " + std::to_string(n));
  return wg_o_table(n, limits).values.at(mu);
}

RatFunc wg_o(const Permutation& sigma, const Limits& limits) {
  const Partition mu = coset_type(sigma);
  return wg_o(mu.weight(), mu, limits);
}

Rational wg_o_at(int n, const Partition& mu, const Rational& N, const Limits& limits) {
  return eval_at(wg_o(n, mu, limits), N);
}

RatFunc wg_u(int m, const Partition& rho, const Limits& limits) {
  if (rho.weight() != m) throw DomainError("cycle-type (" + rho.str() + ") is not a partition of " + std::to_string(m));
  return wg_u_table(m, limits).values.at(rho);
}

RatFunc wg_u(const Permutation& sigma, const Limits& limits) {
  return wg_u(sigma.degree(), cycle_type(sigma), limits);
}

const char* to_string(WgRegime r) {
  switch (r) {
    case WgRegime::identity: return "identity";
    case WgRegime::transposition: return "transposition";
    case WgRegime::higher: return "higher";
  }
  return "?";
}

WgAsymptotics wg_o_asym(int n, const Partition& mu, const Limits& limits) {
  const RatFunc f = wg_o(n, mu, limits);
  WgAsymptotics out;
  if (mu == Partition::ones(n)) out.regime = WgRegime::identity;
  else if (n >= 2 && mu == Partition::transposition_type(n)) out.regime = WgRegime::transposition;
  out.leading_exponent = series_at_infinity(f, 1).top_exponent;
  const LaurentSeries s = series_from(f, -n, 3);
  out.at_n = s.at(-n);
  out.at_n1 = s.at(-n - 1);
  out.at_n2 = s.at(-n - 2);
  return out;
}

}  // namespace coe
