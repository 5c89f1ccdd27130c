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

#include "orbitx/constant_expr.hpp"

#include <algorithm>
#include <sstream>

#include "orbitx/errors.hpp"

namespace orbitx {

bool is_log_symbol(const std::string& name) { return name.rfind("log(", 0) == 0; }

ConstantExpr::ConstantExpr(const Num& n) {
  if (!n.is_zero()) terms_[{}] = n;
}

ConstantExpr::ConstantExpr(const Rational& r) : ConstantExpr(Num(r)) {}

ConstantExpr ConstantExpr::symbol(const std::string& name) {
  ConstantExpr e;
  e.terms_[{{name, 1}}] = Num(1);
  return e;
}

bool ConstantExpr::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

bool ConstantExpr::has_free_constants() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m)
      if (!is_log_symbol(s)) return true;
  return false;
}

Num ConstantExpr::constant_value() const {
  if (!is_constant()) fail(ErrorCode::NonConstantDivisor, "expression " + to_string() + " is not a constant");
  return terms_.empty() ? Num() : terms_.begin()->second;
}

std::vector<std::string> ConstantExpr::symbols() const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ConstantExpr::add_term(const SymbolMonomial& m, const Num& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ConstantExpr ConstantExpr::operator-() const {
  ConstantExpr r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ConstantExpr operator+(const ConstantExpr& a, const ConstantExpr& b) {
  ConstantExpr r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

namespace {

SymbolMonomial mul_monomials(const SymbolMonomial& a, const SymbolMonomial& b) {
  SymbolMonomial out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ConstantExpr operator*(const ConstantExpr& a, const ConstantExpr& b) {
  ConstantExpr r;
  if (a.is_constant() && b.is_constant()) {
    Num v = a.constant_value() * b.constant_value();
    return ConstantExpr(v);
  }
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mul_monomials(ma, mb), ca * cb);
  return r;
}

ConstantExpr operator/(const ConstantExpr& a, const ConstantExpr& b) {
  if (!b.is_constant()) fail(ErrorCode::NonConstantDivisor, "division by " + b.to_string());
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division of " + a.to_string() + " by zero");
  return a * ConstantExpr(b.constant_value().inverse());
}

int ConstantExpr::certified_sign() const {
  if (is_constant()) return terms_.empty() ? 0 : terms_.begin()->second.sign();
  if (has_free_constants()) return 0;
  int sign = 0;
  for (const auto& [m, c] : terms_) {
    int s = c.sign();
    for (const auto& [name, e] : m) {
      int as = (log_symbol_argument(name) - Num(1)).sign();
      if (e % 2 == 1) s *= as;
    }
    if (sign == 0) sign = s;
    else if (s != sign) return 0;
  }
  return sign;
}

bool ConstantExpr::needs_parens() const {
  if (terms_.size() > 1) return true;
  return terms_.size() == 1 && terms_.begin()->second.needs_parens() && terms_.begin()->first.empty();
}

std::string ConstantExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = !c.needs_parens() && c.to_string().front() == '-';
    Num a = negative ? -c : c;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (m.empty()) {
      os << (a.needs_parens() ? "(" + a.to_string() + ")" : a.to_string());
      continue;
    }
    if (a != Num(1)) os << (a.needs_parens() ? "(" + a.to_string() + ")" : a.to_string()) << "*";
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) os << "*";
      os << m[i].first;
      if (m[i].second != 1) os << "^" << m[i].second;
    }
  }
  return os.str();
}

namespace {

// Trial-division factorization; a cofactor without small factors is kept whole.
std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  for (Integer p = 2; p * p <= n && p < 1000000; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

ConstantExpr log_rational(const Rational& r) {
  ConstantExpr acc;
  for (const auto& [p, e] : factor_integer(r.get_num())) acc += ConstantExpr(Rational(e)) * ConstantExpr::symbol("log(" + p.get_str() + ")");
  for (const auto& [p, e] : factor_integer(r.get_den())) acc += ConstantExpr(Rational(-e)) * ConstantExpr::symbol("log(" + p.get_str() + ")");
  return acc;
}

}  // namespace

ConstantExpr log_constant(const Num& c) {
  if (c.sign() <= 0) fail(ErrorCode::NonPositiveLead, "logarithm of non-positive constant " + c.to_string());
  if (c.is_rational()) return log_rational(c.rational());
  const int d = current_session().theta->degree();
  Num pw = c;
  for (int k = 1; k <= 2 * d; ++k, pw = pw * c) {
    if (pw.is_rational()) return ConstantExpr(Rational(1, k)) * log_rational(pw.rational());
  }
  std::string name = "log(" + c.to_string() + ")";
  current_session().log_symbols[name] = c.coords();
  return ConstantExpr::symbol(name);
}

Num log_symbol_argument(const std::string& name) {
  if (!is_log_symbol(name)) fail(ErrorCode::Internal, name + " is not a log symbol");
  std::string arg = name.substr(4, name.size() - 5);
  if (!arg.empty() && std::all_of(arg.begin(), arg.end(), ::isdigit)) return Num(Rational(Integer(arg)));
  auto& table = current_session().log_symbols;
  auto it = table.find(name);
  if (it == table.end()) fail(ErrorCode::UnassignedConstant, "unknown log symbol " + name);
  return Num(it->second);
}

}  // namespace orbitx
