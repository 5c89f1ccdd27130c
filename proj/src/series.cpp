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

#include "orbitx/series.hpp"

#include <cmath>
#include <sstream>

#include "orbitx/errors.hpp"

namespace orbitx {

Num lambda_value() {
  const Session& s = current_session();
  if (!s.lambda) fail(ErrorCode::Internal, "exponent generator lambda is not set");
  return Num(*s.lambda);
}

Num Exponent::value() const {
  if (l == 0) return Num(r);
  return Num(r) + Num(l) * lambda_value();
}

Rational Exponent::lower() const {
  if (l == 0) return r;
  double d = r.get_d() + l.get_d() * current_session().lambda_approx;
  double slack = 1e-9 * (1 + std::fabs(r.get_d()) + std::fabs(l.get_d()));
  return Rational(d - slack);
}

int Exponent::sign() const {
  if (l == 0) return sgn(r);
  double d = r.get_d() + l.get_d() * current_session().lambda_approx;
  if (std::fabs(d) > 1e-9 * (1 + std::fabs(r.get_d()) + std::fabs(l.get_d()))) return d > 0 ? 1 : -1;
  return value().sign();
}

Exponent operator*(const Exponent& a, const Exponent& b) {
  if (a.l != 0 && b.l != 0) fail(ErrorCode::UnsupportedTower, "exponent " + a.to_string() + " * " + b.to_string() + " leaves Q + Q*lam");
  return Exponent(a.r * b.r, a.r * b.l + a.l * b.r);
}

std::string Exponent::to_string() const {
  auto lam = [](const Rational& q) {
    if (q == 1) return std::string("lam");
    if (q == -1) return std::string("-lam");
    return q.get_str() + "*lam";
  };
  if (l == 0) return r.get_str();
  if (r == 0) return lam(l);
  std::string out = r.get_str();
  out += l < 0 ? " - " + lam(-l) : " + " + lam(l);
  return out;
}

Exponent min(const Exponent& a, const Exponent& b) { return b < a ? b : a; }

Exponent exponent_of(const Num& v) {
  if (v.is_rational()) return Exponent(v.rational());
  Session& s = current_session();
  if (!s.lambda) {
    s.lambda = v.coords();
    s.lambda_approx = v.to_double();
    return Exponent::lambda();
  }
  const std::vector<Rational>& lc = *s.lambda;
  const std::vector<Rational>& vc = v.coords();
  size_t pivot = 1;
  while (pivot < lc.size() && lc[pivot] == 0) ++pivot;
  if (pivot < lc.size()) {
    Rational q = (pivot < vc.size() ? vc[pivot] : Rational(0)) / lc[pivot];
    Rational p = vc[0] - q * lc[0];
    Exponent e(p, q);
    if (e.value() == v) return e;
  }
  fail(ErrorCode::UnsupportedTower, "exponent " + v.to_string() + " is outside Q + Q*lam");
}

bool DominanceLess::operator()(const MonoKey& a, const MonoKey& b) const {
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.beta != b.beta) return a.beta < b.beta;
  return a.gamma > b.gamma;
}

Exponent weight(const MonoKey& k) {
  const Rational& w = current_session().ell_weight;
  return k.alpha + Exponent(k.beta.r * w, k.beta.l * w);
}

namespace {

MonoKey key_add(const MonoKey& a, const MonoKey& b) { return {a.alpha + b.alpha, a.beta + b.beta, a.gamma + b.gamma}; }

}  // namespace

Series::Series(const ConstantExpr& c) {
  if (!c.is_zero()) terms_.emplace(MonoKey{}, c);
}

Series Series::monomial(const ConstantExpr& c, const Exponent& alpha, const Exponent& beta, int gamma) {
  if (gamma < 0) fail(ErrorCode::Internal, "negative power of ln l");
  Series s;
  if (!c.is_zero()) s.terms_.emplace(MonoKey{alpha, beta, gamma}, c);
  return s;
}

Series Series::big_o(const Exponent& order) {
  Series s;
  s.order_ = order;
  return s;
}

bool Series::has_free_constants() const {
  for (const auto& [k, c] : terms_)
    if (c.has_free_constants()) return true;
  return false;
}

bool Series::has_logs() const {
  for (const auto& [k, c] : terms_)
    if (!k.beta.is_zero() || k.gamma != 0) return true;
  return false;
}

const MonoKey& Series::lead_key() const {
  if (terms_.empty()) fail(ErrorCode::TruncationExhausted, "series has no reliable terms");
  return terms_.begin()->first;
}

const ConstantExpr& Series::lead_coeff() const {
  if (terms_.empty()) fail(ErrorCode::TruncationExhausted, "series has no reliable terms");
  return terms_.begin()->second;
}

std::optional<Exponent> Series::valuation() const {
  std::optional<Exponent> v;
  for (const auto& [k, c] : terms_) {
    Exponent w = weight(k);
    if (!v || w < *v) v = w;
  }
  return v ? v : order_;
}

std::optional<Rational> Series::min_alpha() const {
  std::optional<Rational> m;
  for (const auto& [k, c] : terms_) {
    Rational a = k.alpha.lower();
    if (!m || a < *m) m = a;
  }
  return m;
}

std::optional<Rational> Series::min_beta() const {
  std::optional<Rational> m;
  for (const auto& [k, c] : terms_) {
    Rational b = k.beta.lower();
    if (!m || b < *m) m = b;
  }
  return m;
}

void Series::clip() {
  if (!order_) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (weight(it->first) >= *order_) it = terms_.erase(it);
    else ++it;
  }
}

Series Series::truncated(const Exponent& order) const {
  Series s = *this;
  s.order_ = order_ ? min(*order_, order) : order;
  s.clip();
  return s;
}

Series Series::without_order() const {
  Series s = *this;
  s.order_.reset();
  return s;
}

void Series::add_term(const MonoKey& k, const ConstantExpr& c) {
  if (c.is_zero()) return;
  if (order_ && weight(k) >= *order_) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& [k, c] : s.terms_) c = -c;
  return s;
}

Series operator+(const Series& a, const Series& b) {
  Series s = a;
  if (b.order_) s.order_ = a.order_ ? min(*a.order_, *b.order_) : *b.order_;
  s.clip();
  for (const auto& [k, c] : b.terms_) s.add_term(k, c);
  return s;
}

Series operator*(const Series& a, const Series& b) {
  Series s;
  auto va = a.valuation(), vb = b.valuation();
  if (a.order_ && vb) s.order_ = *a.order_ + *vb;
  if (b.order_ && va) {
    Exponent o = *b.order_ + *va;
    s.order_ = s.order_ ? min(*s.order_, o) : o;
  }
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) s.add_term(key_add(ka, kb), ca * cb);
  return s;
}

Series Series::scaled(const ConstantExpr& c) const {
  if (c.is_zero()) {
    Series z;
    z.order_ = order_;
    return z;
  }
  Series s = *this;
  for (auto& [k, v] : s.terms_) v = v * c;
  return s;
}

Series Series::times_monomial(const Exponent& alpha, const Exponent& beta, int gamma) const {
  MonoKey m{alpha, beta, gamma};
  Series s;
  if (order_) s.order_ = *order_ + weight(m);
  for (const auto& [k, c] : terms_) s.terms_.emplace(key_add(k, m), c);
  return s;
}

bool operator==(const Series& a, const Series& b) {
  if (a.order_ != b.order_ || a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j) {
    if (i->first.alpha != j->first.alpha || i->first.beta != j->first.beta || i->first.gamma != j->first.gamma)
      return false;
    if (i->second != j->second) return false;
  }
  return true;
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (!k.alpha.is_zero()) os << " * x^(" << k.alpha.to_string() << ")";
    if (!k.beta.is_zero()) os << " * l^(" << k.beta.to_string() << ")";
    if (k.gamma != 0) os << " * lnl^(" << k.gamma << ")";
  }
  if (order_) {
    if (!first) os << " + ";
    os << "O(x^(" << order_->to_string() << "))";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

Series derivative(const Series& a) {
  Series d = a.order() ? Series::big_o(*a.order() - 1) : Series();
  for (const auto& [k, c] : a.terms()) {
    Exponent am1 = k.alpha - 1;
    if (!k.alpha.is_zero()) d.add_term({am1, k.beta, k.gamma}, c * ConstantExpr(k.alpha.value()));
    if (!k.beta.is_zero()) d.add_term({am1, k.beta + 1, k.gamma}, c * ConstantExpr(k.beta.value()));
    if (k.gamma != 0) d.add_term({am1, k.beta + 1, k.gamma - 1}, c * ConstantExpr(k.gamma));
  }
  return d;
}

Series pow(const Series& a, long n) {
  if (n < 0) fail(ErrorCode::Internal, "negative integer power needs a cap");
  Series result(1), base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace orbitx
