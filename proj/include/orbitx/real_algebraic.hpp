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

#ifndef ORBITX_REAL_ALGEBRAIC_HPP
#define ORBITX_REAL_ALGEBRAIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "orbitx/upoly.hpp"

namespace orbitx {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// A real algebraic number: the unique root of an irreducible monic polynomial
/// inside an isolating interval (lo, hi]. Rational values have a linear
/// minimal polynomial and lo == hi.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  RealAlgebraic(const Rational& r);  // NOLINT: rationals embed implicitly
  // `minpoly` must be irreducible over Q with exactly one root in (lo, hi].
  RealAlgebraic(UPoly minpoly, Rational lo, Rational hi);

  const UPoly& minimal_polynomial() const { return minpoly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return minpoly_.degree() == 1; }
  Rational rational_value() const;  // requires is_rational()

  // Same root, interval width <= width.
  RealAlgebraic refined(const Rational& width) const;
  // Sign of q at this number, decided exactly.
  int sign_of(const UPoly& q) const;
  int sign() const { return sign_of(UPoly::linear_root(0)); }
  double to_double() const;

  std::string to_string() const;

 private:
  UPoly minpoly_;
  Rational lo_, hi_;
};

Ordering alg_compare(const RealAlgebraic& a, const RealAlgebraic& b);
inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return alg_compare(a, b) == Ordering::EQ; }
inline bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) { return alg_compare(a, b) == Ordering::LT; }

RealAlgebraic alg_refine(const RealAlgebraic& a, const Rational& width);

/// Distinct monic irreducible factors over Q of a nonzero polynomial
/// (multiplicities dropped), sorted by degree then coefficients.
std::vector<UPoly> irreducible_factors(const UPoly& p);

/// Approximate complex roots (Durand-Kerner); used to guide exact searches.
std::vector<std::complex<long double>> numeric_complex_roots(const UPoly& p);

/// Continued-fraction rational approximation with bounded denominator.
Rational rationalize(long double v, long max_den = 1000000);

/// All distinct real roots of p, ascending. Throws ZeroPolynomial for p == 0.
std::vector<RealAlgebraic> real_root_isolate(const UPoly& p);

}  // namespace orbitx

#endif  // ORBITX_REAL_ALGEBRAIC_HPP
