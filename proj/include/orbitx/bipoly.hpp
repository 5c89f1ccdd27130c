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

#ifndef ORBITX_BIPOLY_HPP
#define ORBITX_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitx/series.hpp"

namespace orbitx {

/// Polynomial in x, y with ConstantExpr coefficients; only nonzero terms are
/// stored, keyed by (power of x, power of y).
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(const ConstantExpr& c);  // NOLINT
  BiPoly(long c) : BiPoly(ConstantExpr(c)) {}  // NOLINT
  static BiPoly monomial(const ConstantExpr& c, int i, int j);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  const std::map<Key, ConstantExpr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ConstantExpr coeff(int i, int j) const;
  bool has_symbols() const;
  int degree() const;      // total degree; -1 for zero
  int low_degree() const;  // least total degree; -1 for zero
  int degree_y() const;
  int x_order() const;     // largest k with x^k dividing; -1 for zero
  int y_order() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly dx() const;
  BiPoly dy() const;
  // P(px, py)
  BiPoly substitute(const BiPoly& px, const BiPoly& py) const;
  BiPoly divide_x_power(int k) const;
  BiPoly divide_y_power(int k) const;
  BiPoly homogeneous_part(int d) const;
  BiPoly swap_xy() const;
  BiPoly reflect_x() const;  // P(-x, y)
  BiPoly reflect_y() const;  // P(x, -y)

  // P(0, y) and P(x, 0) as polynomials over Q(theta); require no symbols.
  NumPoly at_x0() const;
  NumPoly at_y0() const;
  ConstantExpr eval(const ConstantExpr& xv, const ConstantExpr& yv) const;
  Series eval(const Series& xs, const Series& ys) const;

  std::string to_string() const;

 private:
  void add_term(const Key& k, const ConstantExpr& c);
  std::map<Key, ConstantExpr> terms_;
};

/// Square-free part in y of a polynomial without symbols.
BiPoly squarefree_in_y(const BiPoly& f);

/// f = prod g_k^k up to factors free of y; returns the nonconstant (g_k, k).
std::vector<std::pair<BiPoly, int>> squarefree_decomposition_in_y(const BiPoly& f);

/// Greatest common divisor of two polynomials without symbols, up to a
/// constant factor; the other argument when one is zero.
BiPoly common_factor(const BiPoly& a, const BiPoly& b);

/// Planar vector field X d/dx + Y d/dy.
struct VectorField {
  BiPoly X;
  BiPoly Y;
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.X == b.X && a.Y == b.Y; }
};

}  // namespace orbitx

#endif  // ORBITX_BIPOLY_HPP
