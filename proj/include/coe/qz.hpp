#pragma once

// Exact univariate polynomials and rational functions over Q.
//
// The indeterminate is anonymous; "z" or "N" only appears when rendering.
// Every RatFunc is reduced on construction (gcd(num, den) = 1, den monic), so
// removable singularities never survive into evaluation.

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace coe {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms. mpq_class's two-argument constructor does not reduce.
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q);
std::string to_string(const Integer& q);

class Poly {
 public:
  Poly() = default;
  /// coeffs[k] is the coefficient of z^k; trailing zeros are trimmed.
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// The monic linear polynomial z + shift.
  static Poly linear(const Rational& shift);
  static Poly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& q) const;
  /// p(z + a)
  Poly shifted(const Rational& a) const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DomainError when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly pow(const Poly& p, int e);

/// Leading exponent plus coefficients of a Laurent expansion in 1/N as N -> oo.
/// coeffs[k] multiplies N^(top_exponent - k).
struct LaurentSeries {
  int top_exponent = 0;
  std::vector<Rational> coeffs;

  /// Coefficient of N^exponent; zero outside the computed window above it,
  /// throws DomainError if the exponent lies below the computed window.
  Rational at(int exponent) const;
};

class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p);      // NOLINT(google-explicit-constructor)
  /// Reduces num/den; throws DomainError if den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc z() { return RatFunc(Poly::linear(0)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value at q; throws PoleError iff the reduced denominator vanishes.
  Rational operator()(const Rational& q) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

RatFunc add(const RatFunc& a, const RatFunc& b);
RatFunc sub(const RatFunc& a, const RatFunc& b);
RatFunc mul(const RatFunc& a, const RatFunc& b);
RatFunc div(const RatFunc& a, const RatFunc& b);
RatFunc pow(const RatFunc& f, int e);

Rational eval_at(const RatFunc& f, const Rational& q);
/// f(z + 1)
RatFunc shift(const RatFunc& f);
/// f(z - 1)
RatFunc shift_inverse(const RatFunc& f);
/// f(z + a) for any rational a.
RatFunc shift_by(const RatFunc& f, const Rational& a);

/// First `order` coefficients starting at the true leading exponent.
/// For the zero function the exponent is 0 and all coefficients are zero.
LaurentSeries series_at_infinity(const RatFunc& f, int order);
/// Coefficients of N^top, N^(top-1), ... regardless of where the leading term is.
LaurentSeries series_from(const RatFunc& f, int top_exponent, int order);

struct RenderOptions {
  std::string var = "z";
  /// Denominator as a product of (var+k) factors when integer trial roots
  /// in [-root_bound, root_bound] exhaust it.
  bool factored = true;
  /// "z*(z+2)" and "3*z" rather than "z(z+2)" and "3z".
  bool explicit_mul = false;
  int root_bound = 12;
};

/// Canonical text form `num/den`, integer coefficients, positive leading
/// denominator coefficient. Factors are ordered var, (var+1), (var+2), ...,
/// then (var-1), (var-2), ...
std::string render(const RatFunc& f, const RenderOptions& opts = {});
std::string render(const Poly& p, const RenderOptions& opts = {});

/// Integer display form: f = num/den with coprime integer coefficient
/// vectors (ascending degree) and positive leading den coefficient.
std::pair<std::vector<Integer>, std::vector<Integer>> integer_form(const RatFunc& f);

/// Parses expressions such as "(z^2+3z-2)/(z(z+2)(z+4)(z-1)(z-2))" or
/// "4(N+2)/((N+1)N(N+3))": integers, the variable, + - * / ^, parentheses and
/// juxtaposition. Throws DomainError on malformed text.
RatFunc parse_ratfunc(const std::string& text, const std::string& var = "z");

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace coe
