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

#include <functional>

#include "orbitx/errors.hpp"
#include "orbitx/series.hpp"

namespace orbitx {

namespace {

// a = c * m * (1 + s) with m the dominant monomial and c its coefficient.
struct Factored {
  MonoKey lead;
  Num coeff;
  Series unit;  // s
};

Factored factor_lead(const Series& a, ErrorCode on_symbolic) {
  const MonoKey& m = a.lead_key();
  const ConstantExpr& c = a.lead_coeff();
  if (!c.is_constant()) fail(on_symbolic, "leading coefficient " + c.to_string() + " involves symbols");
  if (m.gamma != 0) fail(ErrorCode::LnLnOverflow, "leading monomial carries ln l");
  Num cv = c.constant_value();
  Series s = a.scaled(ConstantExpr(cv.inverse())).times_monomial(-m.alpha, -m.beta) - Series(1);
  return {m, cv, s};
}

// sum_k coef(k) s^k, accurate to weight `target`.
Series power_sum(const Series& s, const std::function<Num(long)>& coef, const Exponent& target) {
  Series result = Series(ConstantExpr(coef(0))).truncated(target);
  auto vs = s.valuation();
  if (!vs) return result;
  if (s.is_zero()) return result + s.scaled(ConstantExpr(coef(1)));
  if (vs->sign() <= 0) fail(ErrorCode::TruncationExhausted, "expansion variable has non-positive valuation");
  Rational step = vs->lower();
  if (step <= 0) step = Rational(1, 1000000000);
  Series p = Series(1);
  for (long k = 1; Rational(k) * step < target.lower() + step; ++k) {
    p = (p * s).truncated(target);
    Num ck = coef(k);
    if (!ck.is_zero()) result += p.scaled(ConstantExpr(ck));
    if (p.is_zero() && p.order() && *p.order() >= target) break;
  }
  return result.truncated(target);
}

Num binomial(const Num& e, long k) {
  Num b = 1;
  for (long j = 0; j < k; ++j) b = b * (e - Num(j)) / Num(j + 1);
  return b;
}

Num coeff_power(const Num& c, const Exponent& e) {
  if (e.is_rational()) {
    const Rational& q = e.r;
    if (q.get_den() == 1 && q < 0 && c.sign() != 0) return c.inverse().pow(-q.get_num().get_si());
    if (q.get_den() == 1) return c.pow(q.get_num().get_si());
    if (c.sign() <= 0) fail(ErrorCode::NegativeLeadCoefficient, "fractional power of a non-positive coefficient");
    return rational_power(c, q);
  }
  if (c == Num(1)) return c;
  fail(ErrorCode::UnsupportedTower, "coefficient " + c.to_string() + " raised to an irrational power");
}

ConstantExpr as_const(const Exponent& e) { return ConstantExpr(e.value()); }

}  // namespace

Series pow(const Series& a, const Exponent& e, const Exponent& cap) {
  if (e.is_rational() && e.r.get_den() == 1 && e.r >= 0) return pow(a, e.r.get_num().get_si()).truncated(cap);
  Factored f = factor_lead(a, ErrorCode::NonConstantDivisor);
  MonoKey lead{f.lead.alpha * e, f.lead.beta * e, 0};
  Exponent shift = weight(lead);
  Num ev = e.value();
  Series unit = power_sum(f.unit, [&](long k) { return binomial(ev, k); }, cap - shift);
  return unit.scaled(ConstantExpr(coeff_power(f.coeff, e))).times_monomial(lead.alpha, lead.beta).truncated(cap);
}

Series inverse(const Series& a, const Exponent& cap) { return pow(a, Exponent(-1), cap); }

Series ln_of(const Series& a, const Exponent& cap) {
  const MonoKey& m = a.lead_key();
  if (m.gamma != 0) fail(ErrorCode::LnLnOverflow, "logarithm of ln l would need ln ln l");
  const ConstantExpr& c = a.lead_coeff();
  if (!c.is_constant() || c.constant_value().sign() <= 0)
    fail(ErrorCode::NonPositiveLead, "leading coefficient " + c.to_string() + " is not certified positive");
  Factored f = factor_lead(a, ErrorCode::NonPositiveLead);
  Series log1p = power_sum(
      f.unit,
      [](long k) { return k == 0 ? Num(0) : Num(Rational(k % 2 ? 1 : -1, k)); },
      cap);
  Series head = Series(log_constant(f.coeff));
  head += Series::monomial(-as_const(m.alpha), 0, -1);
  head += Series::monomial(as_const(m.beta), 0, 0, 1);
  return (head + log1p).truncated(cap);
}

Series ell_of(const Series& a, const Exponent& cap) {
  const MonoKey& m = a.lead_key();
  if (m.alpha.sign() <= 0) fail(ErrorCode::NonPositiveValuation, "l of a series without positive valuation");
  const Rational& w = current_session().ell_weight;
  // ln a = -alpha/l + R, so l(a) = (l/alpha) / (1 - l R / alpha)
  Series rest = ln_of(a, cap - w) + Series::monomial(as_const(m.alpha), 0, -1);
  ConstantExpr inv_alpha(m.alpha.value().inverse());
  Series t = rest.times_monomial(0, 1).scaled(inv_alpha);
  Series geo = power_sum(t, [](long) { return Num(1); }, cap - w);
  return geo.times_monomial(0, 1).scaled(inv_alpha).truncated(cap);
}

Series lnell_of(const Series& a, const Exponent& cap) {
  const Rational& w = current_session().ell_weight;
  return ln_of(ell_of(a, cap + w), cap);
}

namespace {

// Weight bound for the image of the region {weight >= r} under a map that
// sends x^alpha to weight s*alpha and leaves l-weight unchanged.
Exponent image_order(const Exponent& r, const Rational& s, const Series& src, bool log_free) {
  if (log_free) return Exponent(r.lower() * s);
  const Rational& w = current_session().ell_weight;
  if (s >= 1) {
    Rational alo = std::min(src.min_alpha().value_or(r.lower()), r.lower());
    if (alo < 0) alo = 0;
    return Exponent(r.lower() + (s - 1) * alo);
  }
  Rational blo = std::min(src.min_beta().value_or(Rational(0)), Rational(0));
  return Exponent(s * r.lower() + w * (1 - s) * blo);
}

}  // namespace

Series substitute_power(const Series& a, long n, PowerDirection dir) {
  if (n <= 0) fail(ErrorCode::DomainError, "substitution index must be positive");
  Rational m = dir == PowerDirection::ToPower ? Rational(n) : Rational(1, n);
  ConstantExpr lnm = log_constant(Num(m));
  Series out;
  for (const auto& [k, c] : a.terms()) {
    // x^a l^b L^g -> t^{m a} m^{-b} l^b (L - ln m)^g
    Num scale = coeff_power(Num(m), -k.beta);
    Series shifted(1);
    Series lminus = Series::monomial(1, 0, 0, 1) - Series(lnm);
    for (int g = 0; g < k.gamma; ++g) shifted = shifted * lminus;
    out += shifted.scaled(c * ConstantExpr(scale)).times_monomial(k.alpha * Exponent(m), k.beta);
  }
  if (a.order()) out = out.truncated(image_order(*a.order(), m, a, !a.has_logs()));
  return out;
}

Series compose(const Series& outer, const Series& inner, const Exponent& cap) {
  if (inner.is_zero() || inner.lead_key().alpha.sign() <= 0)
    fail(ErrorCode::NonPositiveValuation, "inner series must have positive valuation");
  if (inner.is_exact() && outer.is_exact()) {
    bool polynomial = true;
    for (const auto& [k, c] : outer.terms())
      polynomial &= k.alpha.is_rational() && k.alpha.r.get_den() == 1 && k.alpha.r >= 0 && k.beta.is_zero() && k.gamma == 0;
    if (polynomial) {
      Series out;
      for (const auto& [k, c] : outer.terms()) out += pow(inner, k.alpha.r.get_num().get_si()).scaled(c);
      return out;
    }
  }
  const Rational& w = current_session().ell_weight;
  const MonoKey& il = inner.lead_key();
  Exponent vi = weight(il);
  Rational vil = vi.lower();
  bool log_free = !outer.has_logs() && !inner.has_logs();
  Exponent target = cap;
  if (outer.order()) target = min(target, image_order(*outer.order(), vil, outer, log_free));

  // Weight of the image of each outer term and the caps of the shared factors.
  Rational min_image;
  bool any = false, need_ell = false, need_lnell = false;
  for (const auto& [k, c] : outer.terms()) {
    Rational v = k.alpha.lower() * vil + w * k.beta.lower();
    if (!any || v < min_image) min_image = v;
    any = true;
    need_ell |= !k.beta.is_zero();
    need_lnell |= k.gamma != 0;
  }
  Series result = Series::big_o(target);
  if (!any) return result;
  Exponent factor_cap = target - Exponent(min_image) + Exponent(w);
  Series ell = need_ell ? ell_of(inner, factor_cap + w) : Series();
  Series lnell = need_lnell ? lnell_of(inner, factor_cap) : Series();

  std::map<std::string, Series> powers;
  for (const auto& [k, c] : outer.terms()) {
    Rational v = k.alpha.lower() * vil + w * k.beta.lower();
    if (v >= target.lower() + Rational(1, 1000000)) continue;
    Exponent fc = target - Exponent(v) + Exponent(w);
    Series term(c);
    if (!k.alpha.is_zero()) {
      std::string key = k.alpha.to_string();
      auto it = powers.find(key);
      if (it == powers.end() || !(it->second.order() && *it->second.order() >= fc + Exponent(k.alpha.lower() * vil)))
        it = powers.insert_or_assign(key, pow(inner, k.alpha, fc + Exponent(k.alpha.lower() * vil))).first;
      term = term * it->second;
    }
    if (!k.beta.is_zero()) term = term * pow(ell, k.beta, fc + Exponent(w * k.beta.lower()));
    for (int g = 0; g < k.gamma; ++g) term = term * lnell;
    result += term.truncated(target);
  }
  return result;
}

}  // namespace orbitx
