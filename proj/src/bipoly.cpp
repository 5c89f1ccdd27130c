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

#include "orbitx/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "orbitx/errors.hpp"

namespace orbitx {

BiPoly::BiPoly(const ConstantExpr& c) {
  if (!c.is_zero()) terms_[{0, 0}] = c;
}

BiPoly BiPoly::monomial(const ConstantExpr& c, int i, int j) {
  BiPoly p;
  if (!c.is_zero()) p.terms_[{i, j}] = c;
  return p;
}

void BiPoly::add_term(const Key& k, const ConstantExpr& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ConstantExpr BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? ConstantExpr() : it->second;
}

bool BiPoly::has_symbols() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_constant()) return true;
  return false;
}

int BiPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

int BiPoly::low_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    if (d < 0 || k.first + k.second < d) d = k.first + k.second;
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BiPoly::x_order() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    if (d < 0 || k.first < d) d = k.first;
  return d;
}

int BiPoly::y_order() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    if (d < 0 || k.second < d) d = k.second;
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly p = *this;
  for (auto& [k, c] : p.terms_) c = -c;
  return p;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly p = a;
  for (const auto& [k, c] : b.terms_) p.add_term(k, c);
  return p;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly p;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) p.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return p;
}

BiPoly BiPoly::dx() const {
  BiPoly p;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) p.add_term({k.first - 1, k.second}, c * ConstantExpr(k.first));
  return p;
}

BiPoly BiPoly::dy() const {
  BiPoly p;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) p.add_term({k.first, k.second - 1}, c * ConstantExpr(k.second));
  return p;
}

BiPoly BiPoly::substitute(const BiPoly& px, const BiPoly& py) const {
  std::vector<BiPoly> xp{BiPoly(1)}, yp{BiPoly(1)};
  BiPoly out;
  for (const auto& [k, c] : terms_) {
    while (static_cast<int>(xp.size()) <= k.first) xp.push_back(xp.back() * px);
    while (static_cast<int>(yp.size()) <= k.second) yp.push_back(yp.back() * py);
    out += BiPoly(c) * xp[k.first] * yp[k.second];
  }
  return out;
}

BiPoly BiPoly::divide_x_power(int k) const {
  BiPoly p;
  for (const auto& [key, c] : terms_) {
    if (key.first < k) fail(ErrorCode::Internal, "x^" + std::to_string(k) + " does not divide " + to_string());
    p.terms_[{key.first - k, key.second}] = c;
  }
  return p;
}

BiPoly BiPoly::divide_y_power(int k) const { return swap_xy().divide_x_power(k).swap_xy(); }

BiPoly BiPoly::homogeneous_part(int d) const {
  BiPoly p;
  for (const auto& [k, c] : terms_)
    if (k.first + k.second == d) p.terms_[k] = c;
  return p;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly p;
  for (const auto& [k, c] : terms_) p.terms_[{k.second, k.first}] = c;
  return p;
}

BiPoly BiPoly::reflect_x() const {
  BiPoly p = *this;
  for (auto& [k, c] : p.terms_)
    if (k.first % 2) c = -c;
  return p;
}

BiPoly BiPoly::reflect_y() const {
  BiPoly p = *this;
  for (auto& [k, c] : p.terms_)
    if (k.second % 2) c = -c;
  return p;
}

NumPoly BiPoly::at_x0() const {
  NumPoly p;
  for (const auto& [k, c] : terms_) {
    if (k.first != 0) continue;
    if (!c.is_constant()) fail(ErrorCode::NonConstantDivisor, "coefficient " + c.to_string() + " is symbolic");
    if (static_cast<int>(p.size()) <= k.second) p.resize(k.second + 1);
    p[k.second] = c.constant_value();
  }
  trim(p);
  return p;
}

NumPoly BiPoly::at_y0() const { return swap_xy().at_x0(); }

ConstantExpr BiPoly::eval(const ConstantExpr& xv, const ConstantExpr& yv) const {
  ConstantExpr out;
  for (const auto& [k, c] : terms_) {
    ConstantExpr t = c;
    for (int i = 0; i < k.first; ++i) t = t * xv;
    for (int j = 0; j < k.second; ++j) t = t * yv;
    out += t;
  }
  return out;
}

Series BiPoly::eval(const Series& xs, const Series& ys) const {
  int dy = degree_y();
  if (dy < 0) return Series();
  std::vector<Series> xpow{Series(1)};
  std::vector<Series> rows(dy + 1);
  for (const auto& [k, c] : terms_) {
    while (static_cast<int>(xpow.size()) <= k.first) xpow.push_back(xpow.back() * xs);
    rows[k.second] += xpow[k.first].scaled(c);
  }
  Series out = rows[dy];
  for (int j = dy - 1; j >= 0; --j) out = out * ys + rows[j];
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, ConstantExpr>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    std::string cs = c.to_string();
    bool negative = !c.needs_parens() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    bool unit = cs == "1";
    std::string body;
    auto var = [](const char* name, int e) { return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e); };
    if (k.first) body = var("x", k.first);
    if (k.second) body += (body.empty() ? "" : "*") + var("y", k.second);
    if (body.empty()) os << (c.needs_parens() ? "(" + cs + ")" : cs);
    else if (unit) os << body;
    else os << (c.needs_parens() ? "(" + cs + ")" : cs) << "*" << body;
  }
  return os.str();
}

namespace {

// Univariate polynomials in x over Q(theta) and polynomials in y over them.
using XPoly = NumPoly;
using YPoly = std::vector<XPoly>;

XPoly xp_add(const XPoly& a, const XPoly& b) {
  XPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

XPoly xp_mul(const XPoly& a, const XPoly& b) {
  if (a.empty() || b.empty()) return {};
  XPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

XPoly xp_neg(XPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

// Quotient and remainder over the field.
std::pair<XPoly, XPoly> xp_divmod(XPoly a, const XPoly& b) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  XPoly q;
  Num inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Num f = a.back() * inv;
    if (q.size() <= shift) q.resize(shift + 1);
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

XPoly xp_gcd(XPoly a, XPoly b) {
  while (!b.empty()) {
    XPoly r = xp_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Num inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

void yp_trim(YPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

XPoly yp_content(const YPoly& p) {
  XPoly g;
  for (const auto& c : p) g = xp_gcd(g, c);
  return g;
}

YPoly yp_primitive(const YPoly& p) {
  XPoly g = yp_content(p);
  if (g.empty()) return p;
  YPoly r;
  for (const auto& c : p) r.push_back(xp_divmod(c, g).first);
  return r;
}

// Pseudo-remainder of a by b in y.
YPoly yp_prem(YPoly a, const YPoly& b) {
  const XPoly& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    XPoly la = a.back();
    for (auto& c : a) c = xp_mul(c, lb);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] = xp_add(a[i + shift], xp_neg(xp_mul(la, b[i])));
    yp_trim(a);
  }
  return a;
}

YPoly yp_gcd(YPoly a, YPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  a = yp_primitive(a);
  b = yp_primitive(b);
  while (!b.empty()) {
    YPoly r = yp_prem(a, b);
    a = std::move(b);
    b = r.empty() ? r : yp_primitive(r);
  }
  return a;
}

// Exact quotient a / b in Q(theta)[x][y].
YPoly yp_divexact(YPoly a, const YPoly& b) {
  YPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    auto [f, rem] = xp_divmod(a.back(), b.back());
    if (!rem.empty()) fail(ErrorCode::Internal, "inexact division in square-free reduction");
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] = xp_add(a[i + shift], xp_neg(xp_mul(f, b[i])));
    yp_trim(a);
  }
  if (!a.empty()) fail(ErrorCode::Internal, "inexact division in square-free reduction");
  return q;
}

YPoly to_ypoly(const BiPoly& f) {
  YPoly p(std::max(0, f.degree_y() + 1));
  for (const auto& [k, c] : f.terms()) {
    if (!c.is_constant()) fail(ErrorCode::NonConstantDivisor, "coefficient " + c.to_string() + " is symbolic");
    XPoly& row = p[k.second];
    if (static_cast<int>(row.size()) <= k.first) row.resize(k.first + 1);
    row[k.first] = c.constant_value();
  }
  return p;
}

BiPoly from_ypoly(const YPoly& p) {
  BiPoly f;
  for (size_t j = 0; j < p.size(); ++j)
    for (size_t i = 0; i < p[j].size(); ++i)
      f += BiPoly::monomial(ConstantExpr(p[j][i]), static_cast<int>(i), static_cast<int>(j));
  return f;
}

}  // namespace

BiPoly squarefree_in_y(const BiPoly& f) {
  if (f.degree_y() <= 0) return f;
  YPoly p = to_ypoly(f);
  YPoly g = yp_gcd(p, to_ypoly(f.dy()));
  if (g.size() <= 1) return f;
  return from_ypoly(yp_divexact(p, g));
}

std::vector<std::pair<BiPoly, int>> squarefree_decomposition_in_y(const BiPoly& f) {
  std::vector<std::pair<BiPoly, int>> out;
  if (f.degree_y() <= 0) return out;
  // g_k collects the factors of multiplicity >= k, each reduced by k - 1.
  std::vector<YPoly> s;
  YPoly g = to_ypoly(f);
  while (g.size() > 1) {
    YPoly d(g.size() - 1);
    for (size_t j = 1; j < g.size(); ++j) d[j - 1] = xp_mul(g[j], XPoly{Num(static_cast<long>(j))});
    YPoly h = yp_gcd(g, d);
    s.push_back(h.size() > 1 ? yp_divexact(g, h) : yp_primitive(g));
    g = h;
  }
  for (size_t k = 0; k < s.size(); ++k) {
    YPoly part = k + 1 < s.size() ? yp_divexact(yp_primitive(s[k]), yp_primitive(s[k + 1])) : s[k];
    if (part.size() > 1) out.emplace_back(from_ypoly(yp_primitive(part)), static_cast<int>(k + 1));
  }
  return out;
}

NumPoly poly_gcd(const NumPoly& a, const NumPoly& b) { return xp_gcd(a, b); }

BiPoly common_factor(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  YPoly pa = to_ypoly(a), pb = to_ypoly(b);
  XPoly content = xp_gcd(yp_content(pa), yp_content(pb));
  YPoly g = pa.size() > 1 && pb.size() > 1 ? yp_gcd(pa, pb) : YPoly{XPoly{Num(1)}};
  if (g.size() <= 1) g = YPoly{XPoly{Num(1)}};
  for (auto& c : g) c = xp_mul(c, content);
  return from_ypoly(g);
}

}  // namespace orbitx
