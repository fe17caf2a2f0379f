#include "coe/qz.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "coe/errors.hpp"

namespace coe {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& q) { return q.get_str(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::linear(const Rational& shift) {
  return Poly(std::vector<Rational>{shift, Rational(1)});
}

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Poly Poly::shifted(const Rational& a) const {
  // Horner in the ring Q[z]: p(z+a) = (...(c_d (z+a) + c_{d-1})(z+a) + ...).
  Poly acc;
  const Poly step = Poly::linear(a);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = 1 / b.leading();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= q * bc[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw DomainError("negative polynomial power");
  Poly acc = Poly::constant(1);
  for (int k = 0; k < e; ++k) acc *= p;
  return acc;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}

RatFunc::RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Rational inv = 1 / den_.leading();
  num_ *= inv;
  den_ *= inv;
}

Rational RatFunc::operator()(const Rational& q) const {
  Rational d = den_(q);
  if (d == 0) throw PoleError(q.get_str(), "pole at " + q.get_str());
  return num_(q) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFunc add(const RatFunc& a, const RatFunc& b) { return a + b; }
RatFunc sub(const RatFunc& a, const RatFunc& b) { return a - b; }
RatFunc mul(const RatFunc& a, const RatFunc& b) { return a * b; }
RatFunc div(const RatFunc& a, const RatFunc& b) { return a / b; }

RatFunc pow(const RatFunc& f, int e) {
  if (e >= 0) return RatFunc(pow(f.num(), e), pow(f.den(), e));
  return RatFunc(1) / pow(f, -e);
}

Rational eval_at(const RatFunc& f, const Rational& q) { return f(q); }

RatFunc shift_by(const RatFunc& f, const Rational& a) {
  return RatFunc(f.num().shifted(a), f.den().shifted(a));
}
RatFunc shift(const RatFunc& f) { return shift_by(f, 1); }
RatFunc shift_inverse(const RatFunc& f) { return shift_by(f, -1); }

// ---------------------------------------------------------------- series

Rational LaurentSeries::at(int exponent) const {
  const int k = top_exponent - exponent;
  if (k < 0) return 0;
  if (k >= static_cast<int>(coeffs.size()))
    throw DomainError("exponent " + std::to_string(exponent) + " lies below the computed expansion");
  return coeffs[static_cast<std::size_t>(k)];
}

LaurentSeries series_from(const RatFunc& f, int top_exponent, int order) {
  if (order < 0) throw DomainError("negative expansion order");
  LaurentSeries out{top_exponent, std::vector<Rational>(static_cast<std::size_t>(order))};
  if (f.is_zero()) return out;
  const int dn = f.num().degree();
  const int dd = f.den().degree();
  const int lead = dn - dd;
  if (lead > top_exponent)
    throw DomainError("expansion window starts below the leading exponent " + std::to_string(lead));
  const int skip = top_exponent - lead;
  // In t = 1/N: num = N^dn A(t), den = N^dd B(t), A and B read coefficients top-down.
  auto a = [&](int k) { return k > dn ? Rational(0) : f.num().coeff(dn - k); };
  auto b = [&](int k) { return k > dd ? Rational(0) : f.den().coeff(dd - k); };
  const int terms = order - skip;
  std::vector<Rational> q(static_cast<std::size_t>(std::max(terms, 0)));
  const Rational b0 = b(0);
  for (int k = 0; k < terms; ++k) {
    Rational acc = a(k);
    for (int i = 1; i <= std::min(k, dd); ++i) acc -= b(i) * q[static_cast<std::size_t>(k - i)];
    q[static_cast<std::size_t>(k)] = acc / b0;
  }
  for (int k = 0; k < terms; ++k) out.coeffs[static_cast<std::size_t>(k + skip)] = q[static_cast<std::size_t>(k)];
  return out;
}

LaurentSeries series_at_infinity(const RatFunc& f, int order) {
  if (f.is_zero()) return series_from(f, 0, order);
  return series_from(f, f.num().degree() - f.den().degree(), order);
}

// ---------------------------------------------------------------- rendering

namespace {

using IntPoly = std::vector<Integer>;  // ascending degree

Integer lcm_of_denominators(const Poly& p, Integer acc) {
  for (const auto& c : p.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  return acc;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly scaled(const Poly& p, const Integer& m) {
  IntPoly out;
  for (const auto& c : p.coeffs()) {
    Rational v = c * m;
    out.push_back(v.get_num());
  }
  return out;
}

Integer eval_int(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divide by (z - r), assuming r is a root.
IntPoly deflate(const IntPoly& p, const Integer& r) {
  const std::size_t d = p.size() - 1;
  IntPoly q(d);
  Integer carry = 0;
  for (std::size_t k = d; k >= 1; --k) {
    carry = p[k] + carry * r;
    q[k - 1] = carry;
  }
  return q;
}

std::string int_poly_text(const IntPoly& p, const RenderOptions& o) {
  std::string s;
  bool first = true;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    const Integer& c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) s += "-";
    else if (!first) s += "+";
    first = false;
    if (k == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) {
      s += mag.get_str();
      if (o.explicit_mul) s += "*";
    }
    s += o.var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return first ? "0" : s;
}

int term_count(const IntPoly& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](const Integer& c) { return c != 0; }));
}

std::string linear_factor(int root, const RenderOptions& o) {
  if (root == 0) return o.var;
  std::string s = "(" + o.var;
  s += root < 0 ? "+" + std::to_string(-root) : "-" + std::to_string(root);
  return s + ")";
}

std::string with_power(const std::string& base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string join_factors(const std::vector<std::string>& fs, const RenderOptions& o) {
  std::string s;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k > 0 && o.explicit_mul) s += "*";
    s += fs[k];
  }
  return s;
}

// Numerator as content times primitive part, e.g. "-1", "(z+1)", "4(z+2)", "3z".
std::string numerator_text(const IntPoly& num, const RenderOptions& o) {
  if (num.size() <= 1) return num.empty() ? "0" : num[0].get_str();
  Integer c = content(num);
  if (num.back() < 0) c = -c;
  IntPoly prim;
  for (const auto& x : num) prim.push_back(x / c);
  std::string body = int_poly_text(prim, o);
  if (term_count(prim) > 1) body = "(" + body + ")";
  if (c == 1) return body;
  if (c == -1) return "-" + body;
  return c.get_str() + (o.explicit_mul ? "*" : "") + body;
}

}  // namespace

std::pair<std::vector<Integer>, std::vector<Integer>> integer_form(const RatFunc& f) {
  Integer m = lcm_of_denominators(f.den(), lcm_of_denominators(f.num(), 1));
  IntPoly num = scaled(f.num(), m);
  IntPoly den = scaled(f.den(), m);
  Integer g = content(den);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), content(num).get_mpz_t());
  for (auto& c : num) c /= g;
  for (auto& c : den) c /= g;
  return {num, den};
}

std::string render(const Poly& p, const RenderOptions& opts) {
  return render(RatFunc(p), opts);
}

std::string render(const RatFunc& f, const RenderOptions& opts) {
  auto [num, den] = integer_form(f);
  if (num.empty()) return "0";
  if (den.size() == 1 && den[0] == 1) return int_poly_text(num, opts);

  std::string num_text = numerator_text(num, opts);
  if (!opts.factored) {
    std::string d = int_poly_text(den, opts);
    if (term_count(den) > 1 || (den.size() > 1 && den.back() != 1)) d = "(" + d + ")";
    return num_text + "/" + d;
  }

  std::vector<std::pair<int, int>> roots;  // (root, multiplicity)
  IntPoly rest = den;
  auto take = [&](int r) {
    int mult = 0;
    while (rest.size() > 1 && eval_int(rest, r) == 0) {
      rest = deflate(rest, r);
      ++mult;
    }
    if (mult > 0) roots.emplace_back(r, mult);
  };
  take(0);
  for (int k = 1; k <= opts.root_bound; ++k) take(-k);
  for (int k = 1; k <= opts.root_bound; ++k) take(k);

  std::vector<std::string> factors;
  Integer lead = rest.size() == 1 ? rest[0] : Integer(1);
  if (rest.size() > 1) {
    // Leftover irreducible-over-trial-roots part; keep its content in front.
    lead = content(rest);
    IntPoly prim;
    for (const auto& x : rest) prim.push_back(x / lead);
    rest = prim;
  }
  if (lead != 1) factors.push_back(lead.get_str());
  for (auto [r, e] : roots) {
    std::string lf = linear_factor(r, opts);
    factors.push_back(with_power(lf, e));
  }
  if (rest.size() > 1) factors.push_back("(" + int_poly_text(rest, opts) + ")");

  std::string d = join_factors(factors, opts);
  if (factors.size() > 1) d = "(" + d + ")";
  return num_text + "/" + d;
}

// ---------------------------------------------------------------- parsing

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const std::string& var) : text_(text), var_(var) {}

  RatFunc parse() {
    RatFunc f = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool at_var() {
    skip();
    return text_.compare(pos_, var_.size(), var_) == 0;
  }
  bool at_atom_start() {
    skip();
    return pos_ < text_.size() &&
           (text_[pos_] == '(' || std::isdigit(static_cast<unsigned char>(text_[pos_])) || at_var());
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (at_atom_start()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      return pow(base, std::stoi(text_.substr(start, pos_ - start)));
    }
    return base;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(text_.substr(start, pos_ - start))));
    }
    if (at_var()) {
      pos_ += var_.size();
      return RatFunc::z();
    }
    fail("expected a number, '" + var_ + "' or '('");
  }

  const std::string& text_;
  const std::string& var_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
  return ExprParser(text, var).parse();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << render(p); }
std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << render(f); }

}  // namespace coe
