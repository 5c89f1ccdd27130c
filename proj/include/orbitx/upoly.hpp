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

#ifndef ORBITX_UPOLY_HPP
#define ORBITX_UPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace orbitx {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense univariate polynomial over Q, coefficients stored low degree first.
// The zero polynomial has no coefficients; the leading coefficient is never 0.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);
  // t - r
  static UPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& lc() const { return c_.back(); }

  Rational eval(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;
  // Scaled to integer coefficients with content 1 and positive leading coefficient.
  UPoly primitive() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Euclidean division; b must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  // Monic gcd (zero if both zero).
  static UPoly gcd(const UPoly& a, const UPoly& b);
  UPoly squarefree_part() const;
  // p(t + shift)
  UPoly shifted(const Rational& shift) const;
  // p(s * t)
  UPoly scaled(const Rational& s) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// Number of distinct real roots in the half-open interval (lo, hi] via Sturm sequences.
int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi);
// Cauchy bound: every real root has |root| < bound.
Rational root_bound(const UPoly& p);
// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly& p);
// Exact rational interval image of p over [lo, hi].
std::pair<Rational, Rational> interval_eval(const UPoly& p, const Rational& lo, const Rational& hi);

}  // namespace orbitx

#endif  // ORBITX_UPOLY_HPP
