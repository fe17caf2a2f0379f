#pragma once

#include <map>

#include "coe/characters.hpp"
#include "coe/combinat.hpp"
#include "coe/qz.hpp"

namespace coe {

/// Wg^O_n(μ; z) for every coset-type μ ⊢ n.
struct WgOTable {
  int n = 0;
  std::map<Partition, RatFunc> values;
};

/// Wg^U_m(ρ; z) for every cycle-type ρ ⊢ m.
struct WgUTable {
  int m = 0;
  std::map<Partition, RatFunc> values;
};

/// Built from zonal spherical functions, f^{2λ} and C'_λ; cached per n.
const WgOTable& wg_o_table(int n, const Limits& limits = default_limits());
/// Built from characters, f^λ and C_λ; cached per m (m <= 2 n_max).
const WgUTable& wg_u_table(int m, const Limits& limits = default_limits());

/// Orthogonal Weingarten function on the double coset H_μ, n = |μ|.
RatFunc wg_o(int n, const Partition& mu, const Limits& limits = default_limits());
/// Orthogonal Weingarten function at σ ∈ S_2n.
RatFunc wg_o(const Permutation& sigma, const Limits& limits = default_limits());
/// [Wg^O_n(μ; z)]_{z=N}; throws PoleError at a genuine pole of the reduced form.
Rational wg_o_at(int n, const Partition& mu, const Rational& N, const Limits& limits = default_limits());

/// Unitary Weingarten function on the class of cycle-type ρ ⊢ m.
RatFunc wg_u(int m, const Partition& rho, const Limits& limits = default_limits());
RatFunc wg_u(const Permutation& sigma, const Limits& limits = default_limits());

enum class WgRegime {
  identity,      // μ = (1^n):         N^-n + O(N^-n-2)
  transposition, // μ = (2, 1^(n-2)):  -N^-n-1 + O(N^-n-2)
  higher,        // otherwise:          O(N^-n-2)
};

const char* to_string(WgRegime r);

struct WgAsymptotics {
  WgRegime regime = WgRegime::higher;
  /// Exponent of the first nonzero term of the expansion in 1/N.
  int leading_exponent = 0;
  /// Coefficients of N^-n, N^-n-1 and N^-n-2.
  Rational at_n;
  Rational at_n1;
  Rational at_n2;
};

WgAsymptotics wg_o_asym(int n, const Partition& mu, const Limits& limits = default_limits());

}  // namespace coe
