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

#include "orbitx/elementary.hpp"

#include <optional>
#include <string>

#include "orbitx/errors.hpp"

namespace orbitx {

namespace {

Num at_origin(const BiPoly& p) { return p.coeff(0, 0).constant_value(); }

// Removes the leading residual term at each pass. The linearized operator
// L[m] = X(x, phi) m' + (X_y phi' - Y_y)(x, phi) m shifts exponents by d;
// when it kills the natural monomial, ln x factors are tried next.
Series solve_graph(const VectorField& v, Series phi, const Exponent& order) {
  const BiPoly xy = v.X.dy(), yy = v.Y.dy();
  const Series x = Series::x();
  for (int iter = 0; iter < 1000; ++iter) {
    Series pt = phi + Series::big_o(order);
    Series dphi = derivative(pt);
    Series a = v.X.eval(x, pt);
    Series b = xy.eval(x, pt) * dphi - yy.eval(x, pt);
    Series r = a * dphi - v.Y.eval(x, pt);
    if (r.is_zero()) return pt;
    if (a.is_zero()) fail(ErrorCode::TruncationExhausted, "X vanishes along the orbit to the working order");
    const MonoKey k = r.lead_key();
    Exponent d = a.lead_key().alpha - 1;
    if (!b.is_zero()) d = min(d, b.lead_key().alpha);
    bool solved = false;
    for (int logs = 0; logs < 3 && !solved; ++logs) {
      MonoKey m{k.alpha - d, k.beta - logs, k.gamma};
      if (weight(m) >= order) fail(ErrorCode::TruncationExhausted, "correction falls beyond the working order");
      Series mono = Series::monomial(1, m.alpha, m.beta, m.gamma);
      Series image = a * derivative(mono) + b * mono;
      auto it = image.terms().find(k);
      if (it == image.terms().end() || DominanceLess()(image.lead_key(), k)) continue;
      phi += mono.scaled(-r.lead_coeff() / it->second);
      solved = true;
    }
    if (!solved) fail(ErrorCode::ResonantDivisionByZero, "no monomial cancels the residual at x^" + k.alpha.to_string());
  }
  fail(ErrorCode::TruncationExhausted, "orbit recursion did not settle");
}

SingularityClass linear_data(const VectorField& v) { return classify_singularity(v); }

OrbitSeed unique_seed(const VectorField& v, const Exponent& order) {
  OrbitSeed seed;
  seed.series = solve_graph(v, Series(), order);
  seed.kind = seed.series.is_zero() ? SeedKind::Trivial : SeedKind::PuiseuxLike;
  return seed;
}

}  // namespace

std::string_view seed_name(SeedKind kind) {
  switch (kind) {
    case SeedKind::Trivial: return "Trivial";
    case SeedKind::PuiseuxLike: return "PuiseuxLike";
    case SeedKind::NodePower: return "NodePower";
    case SeedKind::NodeLog: return "NodeLog";
    case SeedKind::CenterFormal: return "CenterFormal";
  }
  return "?";
}

Series tangency_residual(const VectorField& v, const Series& phi) {
  const Series x = Series::x();
  return v.X.eval(x, phi) * derivative(phi) - v.Y.eval(x, phi);
}

OrbitSeed regular_orbit_series(const VectorField& v, const Exponent& order) {
  if (at_origin(v.X).is_zero()) {
    if (at_origin(v.Y).is_zero()) fail(ErrorCode::DomainError, "origin is a singular point");
    fail(ErrorCode::VerticalFlow, "flow is vertical at the origin");
  }
  return unique_seed(v, order);
}

OrbitSeed saddle_separatrix_series(const VectorField& v, const Exponent& order) {
  if (linear_data(v).tag != SingularityTag::HyperbolicSaddle) fail(ErrorCode::DomainError, "origin is not a saddle");
  if (!at_origin(v.Y.dx()).is_zero()) fail(ErrorCode::DomainError, "x-axis is not an eigendirection");
  return unique_seed(v, order);
}

OrbitSeed node_orbit_family(const VectorField& v, const Exponent& order) {
  if (linear_data(v).tag != SingularityTag::HyperbolicNode) fail(ErrorCode::DomainError, "origin is not a node");
  Num a = at_origin(v.X.dx()), b = at_origin(v.X.dy());
  Num c = at_origin(v.Y.dx()), d = at_origin(v.Y.dy());
  if (!b.is_zero() && !c.is_zero()) fail(ErrorCode::DomainError, "node is not in triangular form");
  Num lambda = d / a;
  if (lambda < Num(1)) fail(ErrorCode::DomainError, "x-axis is the strong direction of the node");
  std::string name = current_session().fresh_constant();
  OrbitSeed seed;
  seed.series = solve_graph(v, Series::monomial(ConstantExpr::symbol(name), exponent_of(lambda)), order);
  seed.kind = seed.series.has_logs() ? SeedKind::NodeLog : SeedKind::NodePower;
  seed.free_constants = {name};
  return seed;
}

OrbitSeed center_manifold_series(const VectorField& v, const Exponent& order) {
  if (linear_data(v).tag != SingularityTag::SemiHyperbolic) fail(ErrorCode::DomainError, "origin is not semi-hyperbolic");
  if (at_origin(v.X.dy()).is_zero() && at_origin(v.Y.dy()).is_zero())
    fail(ErrorCode::DomainError, "zero eigendirection is vertical");
  OrbitSeed seed;
  seed.series = solve_graph(v, Series(), order);
  seed.kind = SeedKind::CenterFormal;
  return seed;
}

LinearChart LinearChart::reflected() const {
  LinearChart r = *this;
  r.m[0][0] = -r.m[0][0];
  r.m[1][0] = -r.m[1][0];
  return r;
}

VectorField linear_change(const VectorField& v, const LinearChart& chart) {
  const auto& m = chart.m;
  auto k = [](const Num& c) { return BiPoly(ConstantExpr(c)); };
  BiPoly p = BiPoly::x(), q = BiPoly::y();
  BiPoly xs = k(m[0][0]) * p + k(m[0][1]) * q, ys = k(m[1][0]) * p + k(m[1][1]) * q;
  BiPoly X = v.X.substitute(xs, ys), Y = v.Y.substitute(xs, ys);
  Num det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det.is_zero()) fail(ErrorCode::DivisionByZero, "singular chart matrix");
  Num inv = det.inverse();
  return {k(m[1][1] * inv) * X - k(m[0][1] * inv) * Y, k(m[0][0] * inv) * Y - k(m[1][0] * inv) * X};
}

namespace {

struct Direction {
  Num dx, dy;
};

Direction eigenvector(const SingularityClass& cls, const Num& mu) {
  const auto& j = cls.jacobian;
  Direction e{j[0][1], mu - j[0][0]};
  if (e.dx.is_zero() && e.dy.is_zero()) e = {mu - j[1][1], j[1][0]};
  return e;
}

// Chart whose p-axis follows the direction.
LinearChart along(const Direction& e) {
  if (e.dx.is_zero()) return LinearChart::swap();
  return {{{1, 0}, {e.dy / e.dx, 1}}};
}

// Chart whose q-axis follows the direction.
LinearChart across(const Direction& e) {
  if (e.dx.is_zero()) return LinearChart::identity();
  return {{{0, 1}, {1, e.dy / e.dx}}};
}

bool lies_on_line(const VectorField& v, const Direction& e, const DivisorLines& lines) {
  if (e.dx.is_zero()) return lines.vertical && v.X.at_x0().empty();
  if (e.dy.is_zero()) return lines.horizontal && v.Y.at_y0().empty();
  return false;
}

}  // namespace

std::vector<OrbitBranch> orbit_branches(const VectorField& v, const SingularityClass& cls, const DivisorLines& lines) {
  std::vector<OrbitBranch> out;
  auto unique = [&](const Direction& e, BranchSolver solver) {
    out.push_back({along(e), solver, lies_on_line(v, e, lines)});
  };
  switch (cls.tag) {
    case SingularityTag::Nonsingular:
      unique({at_origin(v.X), at_origin(v.Y)}, BranchSolver::Regular);
      break;
    case SingularityTag::HyperbolicSaddle:
      unique(eigenvector(cls, cls.mu1), BranchSolver::Separatrix);
      unique(eigenvector(cls, cls.mu2), BranchSolver::Separatrix);
      break;
    case SingularityTag::HyperbolicNode:
      if (cls.scalar) {
        out.push_back({LinearChart::identity(), BranchSolver::NodeFamily, false});
      } else if (cls.mu1 == cls.mu2) {
        out.push_back({across(eigenvector(cls, cls.mu1)), BranchSolver::NodeFamily, false});
      } else {
        out.push_back({along(eigenvector(cls, cls.mu1)), BranchSolver::NodeFamily, false});
        unique(eigenvector(cls, cls.mu2), BranchSolver::StrongManifold);
      }
      break;
    case SingularityTag::SemiHyperbolic:
      unique(eigenvector(cls, cls.mu1), BranchSolver::CenterManifold);
      unique(eigenvector(cls, cls.mu2), BranchSolver::StrongManifold);
      break;
    default:
      fail(ErrorCode::NoCharacteristicOrbit, "point is not elementary");
  }
  return out;
}

OrbitSeed solve_branch(const VectorField& v, const OrbitBranch& branch, const Exponent& order) {
  VectorField w = linear_change(v, branch.chart);
  switch (branch.solver) {
    case BranchSolver::Regular: return regular_orbit_series(w, order);
    case BranchSolver::Separatrix: return saddle_separatrix_series(w, order);
    case BranchSolver::StrongManifold:
      if (!at_origin(w.Y.dx()).is_zero()) fail(ErrorCode::DomainError, "x-axis is not an eigendirection");
      return unique_seed(w, order);
    case BranchSolver::NodeFamily: return node_orbit_family(w, order);
    case BranchSolver::CenterManifold: return center_manifold_series(w, order);
  }
  fail(ErrorCode::Internal, "unknown branch solver");
}

}  // namespace orbitx
