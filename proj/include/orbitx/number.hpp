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

#ifndef ORBITX_NUMBER_HPP
#define ORBITX_NUMBER_HPP

#include <string>
#include <vector>

#include "orbitx/real_algebraic.hpp"
#include "orbitx/session.hpp"

namespace orbitx {

/// Element of Q(theta) for the current session's generator, stored as
/// coordinates in the power basis 1, theta, ..., theta^{d-1}. Without a
/// generator every Num is rational.
class Num {
 public:
  Num() = default;
  Num(const Rational& r);  // NOLINT
  Num(long v) : Num(Rational(v)) {}  // NOLINT
  Num(int v) : Num(Rational(v)) {}  // NOLINT
  explicit Num(std::vector<Rational> coords);

  static Num theta();

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational() const;  // requires is_rational()
  const std::vector<Rational>& coords() const { return c_; }
  UPoly as_poly() const { return UPoly(c_); }

  int sign() const;
  Num inverse() const;
  Num pow(long e) const;
  double to_double() const;
  // Minimal polynomial and isolating interval of this value.
  RealAlgebraic to_real_algebraic() const;

  Num operator-() const;
  friend Num operator+(const Num& a, const Num& b);
  friend Num operator-(const Num& a, const Num& b) { return a + (-b); }
  friend Num operator*(const Num& a, const Num& b);
  friend Num operator/(const Num& a, const Num& b) { return a * b.inverse(); }
  Num& operator+=(const Num& b) { return *this = *this + b; }
  Num& operator-=(const Num& b) { return *this = *this - b; }
  Num& operator*=(const Num& b) { return *this = *this * b; }
  friend bool operator==(const Num& a, const Num& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Num& a, const Num& b) { return !(a == b); }
  friend bool operator<(const Num& a, const Num& b) { return (a - b).sign() < 0; }

  // Canonical text: "3/2", "theta", "-1/2*theta", "(1 + 2*theta^2)".
  std::string to_string() const;
  bool needs_parens() const;

 private:
  void reduce();
  std::vector<Rational> c_;
};

/// Polynomial in one variable over Q(theta), coefficients low degree first.
using NumPoly = std::vector<Num>;

Num eval(const NumPoly& p, const Num& t);
void trim(NumPoly& p);

/// Monic gcd over Q(theta); empty when both are zero.
NumPoly poly_gcd(const NumPoly& a, const NumPoly& b);

/// Norm of p down to Q[t]: product of all conjugates of p over Q(theta).
UPoly norm_poly(const NumPoly& p);

/// Distinct real roots of p (p over Q(theta)), ascending.
std::vector<RealAlgebraic> real_roots(const NumPoly& p);

/// Express a real algebraic number as an element of Q(theta). If the session
/// has no generator yet and `beta` is irrational, beta becomes theta.
/// Throws UnsupportedTower when beta lies outside Q(theta).
Num embed(const RealAlgebraic& beta);

/// Positive real k-th root of a positive element.
Num nth_root(const Num& c, long k);

/// c^(p/q) for positive c.
Num rational_power(const Num& c, const Rational& e);

}  // namespace orbitx

#endif  // ORBITX_NUMBER_HPP
