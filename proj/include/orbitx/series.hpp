/*
   Copyright 2026 The orbitx Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ORBITX_SERIES_HPP
#define ORBITX_SERIES_HPP

#include <map>
#include <optional>
#include <string>

#include "orbitx/constant_expr.hpp"

namespace orbitx {

/// Element r + l*lambda of Q + Q*lambda, where lambda is the session's
/// exponent generator.
struct Exponent {
  Rational r;
  Rational l;

  Exponent() = default;
  Exponent(const Rational& rat) : r(rat) { r.canonicalize(); }  // NOLINT
  Exponent(long v) : r(v) {}  // NOLINT
  Exponent(int v) : r(v) {}  // NOLINT
  Exponent(const Rational& rat, const Rational& lam) : r(rat), l(lam) {
    r.canonicalize();
    l.canonicalize();
  }

  static Exponent lambda() { return Exponent(0, 1); }

  bool is_rational() const { return l == 0; }
  bool is_zero() const { return r == 0 && l == 0; }
  Num value() const;
  // Greatest rational known to be <= the value (exact when rational).
  Rational lower() const;
  int sign() const;

  Exponent operator-() const { return Exponent(-r, -l); }
  friend Exponent operator+(const Exponent& a, const Exponent& b) { return Exponent(a.r + b.r, a.l + b.l); }
  friend Exponent operator-(const Exponent& a, const Exponent& b) { return Exponent(a.r - b.r, a.l - b.l); }
  // Throws UnsupportedTower when both factors involve lambda.
  friend Exponent operator*(const Exponent& a, const Exponent& b);
  friend Exponent operator/(const Exponent& a, const Rational& q) { return Exponent(a.r / q, a.l / q); }
  friend bool operator==(const Exponent& a, const Exponent& b) { return a.r == b.r && a.l == b.l; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
  friend bool operator<(const Exponent& a, const Exponent& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Exponent& a, const Exponent& b) { return b < a; }
  friend bool operator>=(const Exponent& a, const Exponent& b) { return b <= a; }

  // "3/2", "lam", "1/2 + 2*lam", "-lam"
  std::string to_string() const;
};

Exponent min(const Exponent& a, const Exponent& b);

/// The session's lambda as a number; throws Internal when unset.
Num lambda_value();

/// Writes v as an Exponent, adopting v as lambda when the session has none.
/// Throws UnsupportedTower when v is outside Q + Q*lambda.
Exponent exponent_of(const Num& v);

/// Exponents of x^alpha l^beta (ln l)^gamma.
struct MonoKey {
  Exponent alpha;
  Exponent beta;
  int gamma = 0;
};

/// Dominance order: (alpha, beta, -gamma) ascending, most dominant first.
struct DominanceLess {
  bool operator()(const MonoKey& a, const MonoKey& b) const;
};

/// Truncation valuation alpha + w*beta with w the session's l-weight.
Exponent weight(const MonoKey& k);

using TermMap = std::map<MonoKey, ConstantExpr, DominanceLess>;

/// Truncated power-log series in x with l = -1/ln x. Every omitted monomial
/// has weight >= order(); an exact series has no order.
class Series {
 public:
  Series() = default;
  Series(const ConstantExpr& c);  // NOLINT
  Series(long c) : Series(ConstantExpr(c)) {}  // NOLINT
  static Series monomial(const ConstantExpr& c, const Exponent& alpha, const Exponent& beta = 0, int gamma = 0);
  static Series x() { return monomial(1, 1); }
  // -l^{-1}
  static Series ln_x() { return monomial(-1, 0, -1); }
  static Series big_o(const Exponent& order);

  const TermMap& terms() const { return terms_; }
  const std::optional<Exponent>& order() const { return order_; }
  bool is_exact() const { return !order_.has_value(); }
  bool is_zero() const { return terms_.empty(); }
  bool has_free_constants() const;
  bool has_logs() const;  // any beta != 0 or gamma != 0

  const MonoKey& lead_key() const;  // requires !is_zero()
  const ConstantExpr& lead_coeff() const;
  // Least weight over the stored terms, or the order when there are none.
  std::optional<Exponent> valuation() const;
  // Greatest rational lower bound of the stored alphas, or nullopt.
  std::optional<Rational> min_alpha() const;
  std::optional<Rational> min_beta() const;

  Series truncated(const Exponent& order) const;
  Series without_order() const;
  void add_term(const MonoKey& k, const ConstantExpr& c);

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b);
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }
  Series scaled(const ConstantExpr& c) const;
  Series times_monomial(const Exponent& alpha, const Exponent& beta = 0, int gamma = 0) const;

  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // Literal form "(coef) * x^(a) * l^(b) * lnl^(g) + ... + O(x^(r))".
  std::string to_string() const;

 private:
  void clip();
  TermMap terms_;
  std::optional<Exponent> order_;
};

Series derivative(const Series& a);

/// a^n for integer n >= 0 (exact on exact input).
Series pow(const Series& a, long n);
/// a^e for a with certified positive leading coefficient; the result carries
/// order at most `cap`.
Series pow(const Series& a, const Exponent& e, const Exponent& cap);
Series inverse(const Series& a, const Exponent& cap);

/// ln a, l(a) = -1/ln a and ln l(a) for a with positive leading coefficient.
Series ln_of(const Series& a, const Exponent& cap);
Series ell_of(const Series& a, const Exponent& cap);
Series lnell_of(const Series& a, const Exponent& cap);

enum class PowerDirection { ToPower, ToRoot };  // x -> t^n, x -> x^{1/n}
Series substitute_power(const Series& a, long n, PowerDirection dir);

/// outer(inner(x)) for inner of positive valuation.
Series compose(const Series& outer, const Series& inner, const Exponent& cap);

}  // namespace orbitx

#endif  // ORBITX_SERIES_HPP
