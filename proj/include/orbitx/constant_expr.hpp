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

#ifndef ORBITX_CONSTANT_EXPR_HPP
#define ORBITX_CONSTANT_EXPR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbitx/number.hpp"

namespace orbitx {

/// Product of named symbols with positive exponents, sorted by name. Symbols
/// are free orbit constants ("c1", "c2", ...) or logarithms of positive
/// constants ("log(2)", "log(1 + theta)").
using SymbolMonomial = std::vector<std::pair<std::string, int>>;

bool is_log_symbol(const std::string& name);

/// Polynomial in symbols with coefficients in Q(theta), kept in expanded
/// canonical form so that equality is structural.
class ConstantExpr {
 public:
  ConstantExpr() = default;
  ConstantExpr(const Num& n);       // NOLINT
  ConstantExpr(const Rational& r);  // NOLINT
  ConstantExpr(long v) : ConstantExpr(Num(v)) {}  // NOLINT
  ConstantExpr(int v) : ConstantExpr(Num(v)) {}  // NOLINT
  static ConstantExpr symbol(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;          // no symbols at all
  bool has_free_constants() const;   // any non-log symbol
  Num constant_value() const;        // requires is_constant()
  const std::map<SymbolMonomial, Num>& terms() const { return terms_; }
  std::vector<std::string> symbols() const;

  ConstantExpr operator-() const;
  friend ConstantExpr operator+(const ConstantExpr& a, const ConstantExpr& b);
  friend ConstantExpr operator-(const ConstantExpr& a, const ConstantExpr& b) { return a + (-b); }
  friend ConstantExpr operator*(const ConstantExpr& a, const ConstantExpr& b);
  // Throws NonConstantDivisor when b involves symbols.
  friend ConstantExpr operator/(const ConstantExpr& a, const ConstantExpr& b);
  ConstantExpr& operator+=(const ConstantExpr& b) { return *this = *this + b; }
  ConstantExpr& operator*=(const ConstantExpr& b) { return *this = *this * b; }
  friend bool operator==(const ConstantExpr& a, const ConstantExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ConstantExpr& a, const ConstantExpr& b) { return !(a == b); }

  // Sign when it can be certified: constant values, and log symbols of
  // arguments > 1 combined with positive rational weights. 0 if undecided.
  int certified_sign() const;

  std::string to_string() const;
  bool needs_parens() const;

 private:
  void add_term(const SymbolMonomial& m, const Num& c);
  std::map<SymbolMonomial, Num> terms_;
};

/// ln(c) for positive c, expressed through canonical logarithm symbols.
ConstantExpr log_constant(const Num& c);

/// Numeric argument of a log symbol.
Num log_symbol_argument(const std::string& name);

}  // namespace orbitx

#endif  // ORBITX_CONSTANT_EXPR_HPP
