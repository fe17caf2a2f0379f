#include <random>

#include "coe/errors.hpp"
#include "coe/qz.hpp"
#include "doctest.h"

using namespace coe;

namespace {

RatFunc random_ratfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> root(-6, 6);
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<Rational> num;
  for (int k = 0, d = deg(rng); k <= d; ++k) num.emplace_back(coeff(rng));
  if (Poly(num).is_zero()) num = {Rational(1)};
  Poly den = Poly::constant(1);
  for (int k = 0, d = deg(rng) + 1; k < d; ++k) den *= Poly::linear(root(rng));
  return RatFunc(Poly(num), den);
}

}  // namespace

TEST_CASE("polynomial arithmetic and division") {
  const Poly a({Rational(-1), Rational(0), Rational(1)});  // z^2 - 1
  const Poly b = Poly::linear(1);
  auto [q, r] = divmod(a, b);
  CHECK(q == Poly::linear(-1));
  CHECK(r.is_zero());
  CHECK(gcd(a, Poly::linear(-1) * Poly::linear(5)) == Poly::linear(-1));
  CHECK(pow(b, 3).degree() == 3);
  CHECK(a(Rational(3)) == 8);
  CHECK(a.shifted(1) == Poly({Rational(0), Rational(2), Rational(1)}));
  CHECK(Poly().degree() == -1);
  CHECK_THROWS_AS(divmod(a, Poly()), DomainError);
}

TEST_CASE("rational functions are reduced with monic denominators") {
  const RatFunc f(Poly::linear(1) * Poly::constant(2), Poly::linear(1) * Poly::linear(0) * Poly::constant(4));
  CHECK(f.num() == Poly::constant(ratio(1, 2)));
  CHECK(f.den() == Poly::linear(0));
  CHECK_THROWS_AS(RatFunc(Poly::constant(1), Poly()), DomainError);
}

TEST_CASE("example sum from the Weingarten tables") {
  const RatFunc got = parse_ratfunc("2/((z+1)(z-1))") + parse_ratfunc("-2/(z(z+1)(z-1))");
  CHECK(render(got) == "2/(z(z+1))");
}

TEST_CASE("evaluation and poles") {
  const RatFunc f = parse_ratfunc("48/(z(z+2)(z+4))");
  CHECK(eval_at(f, 2) == 1);
  CHECK_THROWS_AS(eval_at(f, 0), PoleError);
  try {
    (void)eval_at(f, -4);
  } catch (const PoleError& e) {
    CHECK(e.at() == "-4");
    CHECK(std::string(e.code()) == "pole_error");
  }
  // Removable singularity disappears on construction.
  const RatFunc g(Poly::linear(-1), Poly::linear(-1) * Poly::linear(2));
  CHECK(eval_at(g, 1) == ratio(1, 3));
}

TEST_CASE("shift and its inverse") {
  const RatFunc f = parse_ratfunc("1/z");
  CHECK(render(shift(f)) == "1/(z+1)");
  CHECK(shift_inverse(shift(f)) == f);
  CHECK(shift_by(f, ratio(1, 2)) == parse_ratfunc("2/(2z+1)"));
}

TEST_CASE("rendering styles") {
  const RatFunc f = parse_ratfunc("(z^2+3z-2)/(z(z+2)(z+4)(z-1)(z-2))");
  CHECK(render(f) == "(z^2+3z-2)/(z(z+2)(z+4)(z-1)(z-2))");
  CHECK(render(f, {.var = "z", .factored = true, .explicit_mul = true}) ==
        "(z^2+3*z-2)/(z*(z+2)*(z+4)*(z-1)*(z-2))");
  CHECK(render(shift(parse_ratfunc("48/(z(z+2)(z+4))")), {.var = "N"}) == "48/((N+1)(N+3)(N+5))");
  CHECK(render(RatFunc()) == "0");
  CHECK(render(RatFunc(Rational(-3, 4))) == "-3/4");
  CHECK(render(parse_ratfunc("1/(z^2+1)")) == "1/(z^2+1)");
  // Expanded denominator.
  CHECK(render(parse_ratfunc("1/(z(z+1))"), {.var = "z", .factored = false}) == "1/(z^2+z)");
}

TEST_CASE("integer form has coprime integer coefficients") {
  auto [num, den] = integer_form(parse_ratfunc("(z/2+1/3)/(z+1)"));
  CHECK(num == std::vector<Integer>{2, 3});
  CHECK(den == std::vector<Integer>{6, 6});
}

TEST_CASE("parser rejects malformed text") {
  CHECK_THROWS_AS(parse_ratfunc("(z+1"), DomainError);
  CHECK_THROWS_AS(parse_ratfunc("z+"), DomainError);
  CHECK_THROWS_AS(parse_ratfunc("x+1"), DomainError);
  CHECK_THROWS_AS(parse_ratfunc("1/(z-z)"), DomainError);
}

TEST_CASE("render and parse round trip on random functions") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const RatFunc f = random_ratfunc(rng);
    CHECK(parse_ratfunc(render(f)) == f);
    CHECK(parse_ratfunc(render(f, {.var = "N", .factored = false, .explicit_mul = true}), "N") == f);
    CHECK(shift_inverse(shift(f)) == f);
    CHECK((f - f).is_zero());
    if (!f.is_zero()) CHECK(f / f == RatFunc(Rational(1)));
  }
}

TEST_CASE("expansion at infinity") {
  const auto a = series_at_infinity(parse_ratfunc("(z+1)/(z(z+2)(z-1))"), 3);
  CHECK(a.top_exponent == -2);
  CHECK(a.coeffs[0] == 1);
  CHECK(a.coeffs[1] == 0);
  const auto b = series_at_infinity(parse_ratfunc("-1/(z(z+2)(z-1))"), 1);
  CHECK(b.top_exponent == -3);
  CHECK(b.coeffs[0] == -1);
  const auto c = series_from(parse_ratfunc("1/(z+1)"), -1, 3);
  CHECK(c.at(-1) == 1);
  CHECK(c.at(-2) == -1);
  CHECK(c.at(-3) == 1);
  CHECK(c.at(0) == 0);
  CHECK_THROWS_AS((void)c.at(-4), DomainError);
  CHECK_THROWS(series_from(parse_ratfunc("z"), -1, 2));
}
