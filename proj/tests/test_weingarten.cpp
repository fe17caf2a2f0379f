#include "coe/weingarten.hpp"
#include "doctest.h"

using namespace coe;

TEST_CASE("orthogonal Weingarten table for n <= 3") {
  CHECK(render(wg_o(1, {1})) == "1/z");
  CHECK(render(wg_o(2, {2})) == "-1/(z(z+2)(z-1))");
  CHECK(render(wg_o(2, {1, 1})) == "(z+1)/(z(z+2)(z-1))");
  CHECK(render(wg_o(3, {3})) == "2/(z(z+2)(z+4)(z-1)(z-2))");
  CHECK(render(wg_o(3, {2, 1})) == "-1/(z(z+4)(z-1)(z-2))");
  CHECK(render(wg_o(3, {1, 1, 1})) == "(z^2+3z-2)/(z(z+2)(z+4)(z-1)(z-2))");
}

TEST_CASE("Wg^O depends only on the coset type") {
  const Permutation s{4, 1, 6, 5, 2, 8, 7, 3};
  CHECK(wg_o(s) == wg_o(4, {3, 1}));
  CHECK(wg_o(Permutation{2, 1}) == wg_o(1, {1}));
}

TEST_CASE("orthogonal Weingarten sums") {
  // Sum over S_2n equals 2^n n! / (z(z+2)...(z+2n-2)).
  for (int n = 1; n <= 4; ++n) {
    RatFunc s;
    for (const auto& mu : partitions_of(n)) s += wg_o(n, mu) * RatFunc(Rational(double_coset_size(mu)));
    Integer hn = factorial(n);
    hn <<= static_cast<mp_bitcnt_t>(n);
    Poly den = Poly::constant(1);
    for (int k = 0; k < n; ++k) den *= Poly::linear(2 * k);
    CHECK(s == RatFunc(Poly::constant(Rational(hn)), den));
  }
}

TEST_CASE("evaluation and poles") {
  CHECK(wg_o_at(2, {1, 1}, 3) == ratio(4, 3 * 5 * 2));
  CHECK_THROWS_AS(wg_o_at(3, {1, 1, 1}, 2), PoleError);
  CHECK_THROWS_AS(wg_o_at(3, {1, 1, 1}, 1), PoleError);
  CHECK_THROWS_AS(wg_o(2, {3}), DomainError);
  Limits small;
  small.n_max = 2;
  CHECK_THROWS_AS(wg_o(3, {3}, small), ResourceError);
}

TEST_CASE("unitary Weingarten function") {
  CHECK(wg_u(1, {1}) == parse_ratfunc("1/z"));
  CHECK(wg_u(2, {1, 1}) == parse_ratfunc("1/((z+1)(z-1))"));
  CHECK(wg_u(2, {2}) == parse_ratfunc("-1/(z(z+1)(z-1))"));
  CHECK(wg_u(3, {3}) == parse_ratfunc("2/(z(z+1)(z+2)(z-1)(z-2))"));
  // Sum over S_m is 1/(z(z+1)...(z+m-1)).
  for (int m = 1; m <= 5; ++m) {
    RatFunc s;
    for (const auto& rho : partitions_of(m)) s += wg_u(m, rho) * RatFunc(ratio(factorial(m), z_mu(rho)));
    Poly den = Poly::constant(1);
    for (int k = 0; k < m; ++k) den *= Poly::linear(k);
    CHECK(s == RatFunc(Poly::constant(1), den));
  }
}

TEST_CASE("asymptotic regimes") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : partitions_of(n)) {
      const auto a = wg_o_asym(n, mu);
      if (mu == Partition::ones(n)) {
        CHECK(a.regime == WgRegime::identity);
        CHECK(a.at_n == 1);
        CHECK(a.at_n1 == 0);
      } else if (mu == Partition::transposition_type(n)) {
        CHECK(a.regime == WgRegime::transposition);
        CHECK(a.at_n1 == -1);
      } else {
        CHECK(a.regime == WgRegime::higher);
        CHECK(a.leading_exponent <= -n - 2);
      }
    }
  CHECK(std::string(to_string(WgRegime::higher)) == "higher");
}
