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

#include <numeric>

#include "orbitx/errors.hpp"
#include "orbitx/shape.hpp"

namespace orbitx {

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::C1: return "C1";
    case Shape::C2: return "C2";
    case Shape::C3: return "C3";
    case Shape::C4: return "C4";
  }
  return "C1";
}

ShapeTag classify_shape(const Series& a) {
  if (a.is_zero()) fail(ErrorCode::UnrecognizedShape, "empty parametrization");
  if (a.lead_key().alpha.sign() <= 0) fail(ErrorCode::NonPositiveValuation, "parametrization must vanish at 0");
  bool logs = false, irrational = false;
  long n = 1;
  for (const auto& [k, c] : a.terms()) {
    if (k.gamma != 0 || !k.beta.is_rational() || k.beta.r > 0 || k.beta.r.get_den() != 1)
      fail(ErrorCode::UnrecognizedShape, "term outside u^a (ln u)^j form: " + Series::monomial(c, k.alpha, k.beta, k.gamma).to_string());
    if (k.beta.r != 0) logs = true;
    if (!k.alpha.is_rational()) irrational = true;
    else n = std::lcm(n, k.alpha.r.get_den().get_si());
  }
  ShapeTag tag;
  if (logs && irrational) fail(ErrorCode::UnrecognizedShape, "logarithms mixed with irrational exponents");
  if (!logs) {
    tag.shape = irrational ? Shape::C2 : Shape::C1;
    tag.n = n;
    if (irrational) tag.lambda = Exponent::lambda();
    return tag;
  }
  const MonoKey& lead = a.lead_key();
  tag.k = lead.alpha.r;
  if (lead.beta.is_zero()) {
    tag.shape = Shape::C3;
  } else {
    tag.shape = Shape::C4;
    tag.rho = -lead.beta.r.get_num().get_si();
  }
  return tag;
}

namespace {

// Leading term of the inverse: (x/c)^{1/k}, with the extra l^{rho/k}
// factor k^{rho/k} l^{rho/k} in the log-led case.
Series seed(const Series& a, const ShapeTag& tag) {
  const MonoKey& lead = a.lead_key();
  const ConstantExpr& c = a.lead_coeff();
  if (!c.is_constant()) fail(ErrorCode::NonConstantDivisor, "leading coefficient " + c.to_string() + " is symbolic");
  Num cv = c.constant_value();
  if (!lead.alpha.is_rational())
    fail(ErrorCode::UnsupportedTower, "leading exponent " + lead.alpha.to_string() + " has no inverse in Q + Q*lam");
  Rational inv = 1 / lead.alpha.r;
  if (cv.sign() <= 0) fail(ErrorCode::NegativeLeadCoefficient, "leading coefficient " + cv.to_string() + " is not positive");
  if (tag.shape != Shape::C4) return Series::monomial(rational_power(cv, -inv), inv);
  Rational e(tag.rho * inv);
  Num base = Num(lead.alpha.r).pow(tag.rho) / cv;
  return Series::monomial(rational_power(base, inv), inv, e);
}

}  // namespace

Series invert(const Series& a, const ShapeTag& tag, const Exponent& order) {
  Series u = seed(a, tag);
  Exponent vu = weight(u.lead_key());
  Exponent cap_u = order - 1 + vu;
  Series da = derivative(a);
  Series x = Series::x();
  const Rational& w = current_session().ell_weight;
  for (int iter = 0; iter < 64; ++iter) {
    Series r = compose(a, u, order) - x;
    if (r.is_zero()) {
      if (r.order() && *r.order() < order) break;
      return u;
    }
    Exponent vr = *r.valuation();
    Exponent d_cap = cap_u - vr + (Exponent(1) - vu) * Exponent(2) + Exponent(w);
    Series d = compose(da, u, d_cap);
    Series step = r * inverse(d, cap_u - vr + Exponent(w));
    u = (u - step).truncated(cap_u);
  }
  fail(ErrorCode::TruncationExhausted, "inversion did not reach order " + order.to_string());
}

}  // namespace orbitx
