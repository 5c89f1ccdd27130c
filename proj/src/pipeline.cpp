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

#include "orbitx/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbitx/errors.hpp"

namespace orbitx {

namespace {

Series constant(const Num& c) { return Series(ConstantExpr(c)); }

bool has_lambda(const Series& s) {
  for (const auto& [k, c] : s.terms())
    if (!k.alpha.is_rational()) return true;
  return false;
}

bool positive_lead(const Series& s) {
  if (s.is_zero() || !s.lead_coeff().is_constant()) return false;
  return s.lead_coeff().constant_value().sign() > 0;
}

}  // namespace

ParametricOrbit parametric_orbit(const BlowUpChain& chain, const Series& x_m, const Series& y_m) {
  Series x = x_m, y = y_m;
  for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
    switch (it->kind) {
      case StepKind::Bv: y = x * y; break;
      case StepKind::Bh: x = x * y; break;
      case StepKind::Tv: y += constant(it->offset); break;
      case StepKind::Th: x += constant(it->offset); break;
    }
  }
  return {x, y};
}

ParametricOrbit parametric_orbit(const BlowUpChain& chain, const OrbitSeed& seed) {
  return parametric_orbit(chain, Series::x(), seed.series);
}

std::pair<Series, Series> terminal_parametrization(const OrbitBranch& branch, const OrbitSeed& seed) {
  const auto& m = branch.chart.m;
  Series u = Series::x();
  return {u.scaled(m[0][0]) + seed.series.scaled(m[0][1]), u.scaled(m[1][0]) + seed.series.scaled(m[1][1])};
}

Series parametric_residual(const VectorField& v, const ParametricOrbit& par) {
  return v.X.eval(par.X_of_u, par.Y_of_u) * derivative(par.Y_of_u) -
         v.Y.eval(par.X_of_u, par.Y_of_u) * derivative(par.X_of_u);
}

std::pair<ShapeTag, std::optional<ShapeTag>> classify_series_shape(const ParametricOrbit& par) {
  ShapeTag tx = classify_shape(par.X_of_u);
  if (par.Y_of_u.is_zero()) return {tx, std::nullopt};
  ShapeTag ty;
  try {
    ty = classify_shape(par.Y_of_u);
  } catch (const Error& e) {
    fail(ErrorCode::ShapeMismatch, std::string("Y(u) has no admissible shape: ") + e.what());
  }
  bool logs_x = tx.shape == Shape::C3 || tx.shape == Shape::C4;
  bool logs_y = ty.shape == Shape::C3 || ty.shape == Shape::C4;
  if ((logs_x && has_lambda(par.Y_of_u)) || (logs_y && has_lambda(par.X_of_u)))
    fail(ErrorCode::ShapeMismatch, "X(u) is " + shape_name(tx.shape) + " but Y(u) is " + shape_name(ty.shape));
  return {tx, ty};
}

std::string case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "i";
    case CaseTag::II: return "ii";
    case CaseTag::III: return "iii";
  }
  return "?";
}

void tag_series(const Series& y, CaseTag& tag, long& n, std::vector<std::string>& constants) {
  bool logs = false, irrational = false;
  Integer den = 1;
  std::set<std::string> names;
  for (const auto& [k, c] : y.terms()) {
    logs = logs || k.beta != 0 || k.gamma != 0;
    irrational = irrational || !k.alpha.is_rational();
    den = lcm(den, Integer(k.alpha.r.get_den()));
    den = lcm(den, Integer(k.beta.r.get_den()));
    for (const auto& s : c.symbols())
      if (!is_log_symbol(s)) names.insert(s);
  }
  tag = logs ? CaseTag::III : irrational ? CaseTag::II : CaseTag::I;
  n = den.get_si();
  constants.assign(names.begin(), names.end());
}

ExpansionResult compose_expansion(const ParametricOrbit& par, const Exponent& order) {
  auto shapes = classify_series_shape(par);
  Series y;
  for (int extra = 1;; ++extra) {
    Series b = invert(par.X_of_u, shapes.first, order + extra);
    y = compose(par.Y_of_u, b, order);
    if (!y.order() || *y.order() >= order) break;
    if (extra == 4) fail(ErrorCode::TruncationExhausted, "composition reached only " + y.order()->to_string());
  }
  ExpansionResult res;
  res.series = y.truncated(order);
  res.parametric = par;
  for (const auto& [k, c] : res.series.terms())
    if (k.alpha.sign() < 0 || (k.alpha.is_zero() && k.beta.sign() <= 0))
      fail(ErrorCode::Internal, "orbit series does not vanish at the origin");
  tag_series(res.series, res.case_tag, res.n, res.free_constants);
  return res;
}

namespace {

size_t pick_branch(const std::vector<OrbitBranch>& branches, const BlowUpChain& chain, const Selector& selector) {
  if (chain.decisions < selector.path.size()) {
    int idx = selector.path[chain.decisions];
    if (idx < 0 || static_cast<size_t>(idx) >= branches.size())
      fail(ErrorCode::Usage, "branch index " + std::to_string(idx) + " out of range (" + std::to_string(branches.size()) + " candidates)");
    return static_cast<size_t>(idx);
  }
  std::vector<size_t> eligible;
  for (size_t i = 0; i < branches.size(); ++i)
    if (!branches[i].on_divisor) eligible.push_back(i);
  if (eligible.size() > 1 && chain.steps.empty()) {
    std::vector<size_t> graphs;
    for (size_t i : eligible)
      if (!branches[i].chart.m[0][0].is_zero()) graphs.push_back(i);
    if (!graphs.empty()) eligible = graphs;
  }
  if (eligible.size() == 1) return eligible[0];
  if (eligible.empty()) {
    if (chain.steps.empty()) fail(ErrorCode::OrbitIsYAxis, "the only characteristic orbit is the y-axis");
    fail(ErrorCode::NoCharacteristicOrbit, "every candidate lies on an exceptional divisor");
  }
  fail(ErrorCode::AmbiguousBranch, std::to_string(eligible.size()) + " orbit candidates at the elementary point");
}

Validation validate(const VectorField& v, const Series& y, const Exponent& order) {
  Validation val;
  Series along = v.X.eval(Series::x(), y);
  Series r = along * derivative(y) - v.Y.eval(Series::x(), y);
  val.tangency_order = r.is_zero() ? (r.order() ? *r.order() : order) : weight(r.lead_key());
  val.slack = 0;
  if (!along.is_zero()) {
    Exponent lead = along.lead_key().alpha;
    if (lead < Exponent(1)) val.slack = Exponent(1) - lead;
    val.x_sign = along.lead_coeff().certified_sign();
  }
  val.passed = r.is_zero() && val.tangency_order >= order - val.slack;
  return val;
}

}  // namespace

namespace {

// A common factor of X and Y with a real curve through the origin makes the
// singular point non-isolated.
void require_isolated(const VectorField& v) {
  if (v.X.is_zero() && v.Y.is_zero()) fail(ErrorCode::ZeroPolynomial, "vector field is identically zero");
  if (!v.X.eval(ConstantExpr(0), ConstantExpr(0)).is_zero() || !v.Y.eval(ConstantExpr(0), ConstantExpr(0)).is_zero()) return;
  BiPoly g = common_factor(v.X, v.Y);
  if (!g.eval(ConstantExpr(0), ConstantExpr(0)).is_zero()) return;
  bool curve = g.at_x0().empty();
  if (!curve && g.degree_y() > 0) {
    BiPoly sf = squarefree_in_y(g);
    curve = !puiseux_branches(sf, 1, Side::Positive).empty() || !puiseux_branches(sf, 1, Side::Negative).empty();
  }
  if (curve) fail(ErrorCode::DomainError, "the origin is not an isolated singular point: X and Y share the factor " + g.to_string());
}

}  // namespace

ExpansionResult expand_orbit(const VectorField& v, const Selector& selector, const Exponent& order, Side side) {
  require_isolated(v);
  VectorField w = side == Side::Negative ? VectorField{-v.X.reflect_x(), v.Y.reflect_x()} : v;
  BlowUpChain chain = desingularize_along(w, selector, 6);
  auto branches = orbit_branches(chain.terminal, chain.terminal_class, chain.lines);
  size_t idx = pick_branch(branches, chain, selector);
  if (branches[idx].on_divisor) {
    if (chain.steps.empty()) fail(ErrorCode::OrbitIsYAxis, "selected orbit is the y-axis");
    fail(ErrorCode::NoCharacteristicOrbit, "selected candidate lies on an exceptional divisor");
  }
  std::vector<int> sides = selector.side ? std::vector<int>{selector.side} : std::vector<int>{1, -1};
  Session& session = current_session();
  const int first_constant = session.next_constant;
  std::optional<Error> last;
  for (int u_side : sides) {
    OrbitBranch branch = branches[idx];
    if (u_side < 0) branch.chart = branch.chart.reflected();
    for (int scale = 1; scale <= 8; scale *= 2) {
      session.next_constant = first_constant;
      Exponent nu = (order + 1) * Exponent(scale);
      OrbitSeed seed = solve_branch(chain.terminal, branch, nu);
      auto [xm, ym] = terminal_parametrization(branch, seed);
      ParametricOrbit par = parametric_orbit(chain, xm, ym);
      if (par.X_of_u.is_zero()) {
        if (!par.X_of_u.order()) fail(ErrorCode::OrbitIsYAxis, "orbit has x identically zero");
        last = Error(ErrorCode::OrbitIsYAxis, "x(u) vanishes to order " + par.X_of_u.order()->to_string());
        continue;
      }
      if (!par.X_of_u.lead_coeff().is_constant())
        fail(ErrorCode::NonConstantDivisor, "leading coefficient of x(u) is the free constant " + par.X_of_u.lead_coeff().to_string());
      if (!positive_lead(par.X_of_u)) {
        last = Error(ErrorCode::NegativeLeadCoefficient, "x(u) = " + par.X_of_u.truncated(2).to_string() + " is not positive for u > 0");
        break;
      }
      try {
        ExpansionResult res = compose_expansion(par, order);
        res.chain = chain;
        res.branch = branch;
        res.u_side = u_side;
        res.seed = seed;
        res.validation = validate(w, res.series, order);
        return res;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TruncationExhausted) throw;
        last = e;
      }
    }
  }
  throw *last;
}

}  // namespace orbitx
