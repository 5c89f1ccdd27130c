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

#include "orbitx/blowup.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "orbitx/errors.hpp"

namespace orbitx {

namespace {

BiPoly constant(const Num& c) { return BiPoly(ConstantExpr(c)); }

Num value_at(const BiPoly& p, const Num& px, const Num& py) {
  ConstantExpr v = p.eval(ConstantExpr(px), ConstantExpr(py));
  if (!v.is_constant()) fail(ErrorCode::NonConstantDivisor, "field coefficients must be numeric");
  return v.constant_value();
}

int common_power(int a, int b) {
  if (a < 0 && b < 0) fail(ErrorCode::ZeroPolynomial, "pulled-back field vanishes identically");
  if (a < 0) return std::max(0, b - 1);
  if (b < 0) return std::max(0, a - 1);
  return std::min(a, b);
}

VectorField swapped(const VectorField& v) { return {v.Y.swap_xy(), v.X.swap_xy()}; }

}  // namespace

std::string_view step_name(StepKind kind) {
  switch (kind) {
    case StepKind::Bv: return "Bv";
    case StepKind::Bh: return "Bh";
    case StepKind::Tv: return "Tv";
    case StepKind::Th: return "Th";
  }
  return "?";
}

std::string_view tag_name(SingularityTag tag) {
  switch (tag) {
    case SingularityTag::Nonsingular: return "Nonsingular";
    case SingularityTag::HyperbolicSaddle: return "HyperbolicSaddle";
    case SingularityTag::HyperbolicNode: return "HyperbolicNode";
    case SingularityTag::HyperbolicFocus: return "HyperbolicFocus";
    case SingularityTag::SemiHyperbolic: return "SemiHyperbolic";
    case SingularityTag::Nilpotent: return "Nilpotent";
    case SingularityTag::FullNull: return "FullNull";
  }
  return "?";
}

bool SingularityClass::is_elementary() const {
  return tag == SingularityTag::Nonsingular || tag == SingularityTag::HyperbolicSaddle ||
         tag == SingularityTag::HyperbolicNode || tag == SingularityTag::SemiHyperbolic;
}

int BlowUpChain::depth() const {
  int d = 0;
  for (const auto& s : steps) d += (s.kind == StepKind::Bv || s.kind == StepKind::Bh);
  return d;
}

VectorField apply_step(const VectorField& v, BlowUpStep& step) {
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  step.divided = 0;
  switch (step.kind) {
    case StepKind::Tv:
    case StepKind::Th: {
      if (step.offset.is_zero()) fail(ErrorCode::Internal, "translation offset must be nonzero");
      BiPoly px = step.kind == StepKind::Th ? x + constant(step.offset) : x;
      BiPoly py = step.kind == StepKind::Tv ? y + constant(step.offset) : y;
      return {v.X.substitute(px, py), v.Y.substitute(px, py)};
    }
    case StepKind::Bv:
    case StepKind::Bh:
      break;
  }
  if (!v.X.coeff(0, 0).is_zero() || !v.Y.coeff(0, 0).is_zero())
    fail(ErrorCode::NotSingular, "blow-up centre is not a singular point");
  if (step.kind == StepKind::Bh) {
    BlowUpStep mirror{StepKind::Bv, {}, 0};
    VectorField r = swapped(apply_step(swapped(v), mirror));
    step.divided = mirror.divided;
    return r;
  }
  BiPoly xp = v.X.substitute(x, x * y);
  BiPoly yp = v.Y.substitute(x, x * y);
  BiPoly y1 = (yp - y * xp).divide_x_power(1);
  int k = common_power(xp.x_order(), y1.x_order());
  step.divided = k;
  return {xp.divide_x_power(k), y1.divide_x_power(k)};
}

bool pushforward_holds(const VectorField& before, const BlowUpStep& step, const VectorField& after) {
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  BiPoly f = 1;
  switch (step.kind) {
    case StepKind::Tv:
    case StepKind::Th: {
      BiPoly px = step.kind == StepKind::Th ? x + constant(step.offset) : x;
      BiPoly py = step.kind == StepKind::Tv ? y + constant(step.offset) : y;
      return before.X.substitute(px, py) == after.X && before.Y.substitute(px, py) == after.Y;
    }
    case StepKind::Bv: {
      for (int i = 0; i < step.divided; ++i) f = f * x;
      BiPoly X = f * after.X, Y = f * after.Y;
      return before.X.substitute(x, x * y) == X && before.Y.substitute(x, x * y) == y * X + x * Y;
    }
    case StepKind::Bh: {
      for (int i = 0; i < step.divided; ++i) f = f * y;
      BiPoly X = f * after.X, Y = f * after.Y;
      return before.X.substitute(x * y, y) == y * X + x * Y && before.Y.substitute(x * y, y) == Y;
    }
  }
  return false;
}

std::vector<Num> divisor_singularities(const VectorField& v, StepKind kind) {
  if (kind == StepKind::Bh) return divisor_singularities(swapped(v), StepKind::Bv);
  NumPoly p = v.X.at_x0(), q = v.Y.at_x0();
  if (p.empty() && q.empty()) fail(ErrorCode::DivisorIsSingularLine, "field vanishes on the exceptional line");
  std::vector<Num> out;
  for (const auto& r : real_roots(poly_gcd(p, q))) out.push_back(embed(r));
  return out;
}

SingularityClass classify_singularity(const VectorField& v, const Num& px, const Num& py) {
  SingularityClass cls;
  Num a = value_at(v.X.dx(), px, py), b = value_at(v.X.dy(), px, py);
  Num c = value_at(v.Y.dx(), px, py), d = value_at(v.Y.dy(), px, py);
  cls.jacobian[0][0] = a;
  cls.jacobian[0][1] = b;
  cls.jacobian[1][0] = c;
  cls.jacobian[1][1] = d;
  cls.scalar = b.is_zero() && c.is_zero() && a == d;
  if (!value_at(v.X, px, py).is_zero() || !value_at(v.Y, px, py).is_zero()) return cls;
  Num tr = a + d, det = a * d - b * c, disc = tr * tr - 4 * det;
  if (det.is_zero()) {
    if (!tr.is_zero()) {
      cls.tag = SingularityTag::SemiHyperbolic;
      cls.mu2 = tr;
    } else {
      bool zero = a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
      cls.tag = zero ? SingularityTag::FullNull : SingularityTag::Nilpotent;
    }
    return cls;
  }
  if (disc.sign() < 0) {
    cls.tag = SingularityTag::HyperbolicFocus;
    return cls;
  }
  Num root = disc.is_zero() ? Num(0) : nth_root(disc, 2);
  Num lo = (tr - root) / 2, hi = (tr + root) / 2;
  if (det.sign() < 0) {
    cls.tag = SingularityTag::HyperbolicSaddle;
    cls.mu1 = lo;
    cls.mu2 = hi;
  } else {
    cls.tag = SingularityTag::HyperbolicNode;
    if (tr.sign() < 0) std::swap(lo, hi);
    cls.mu1 = lo;
    cls.mu2 = hi;
  }
  return cls;
}

Directions characteristic_directions(const VectorField& v) {
  int dx = v.X.low_degree(), dy = v.Y.low_degree();
  int d = dx < 0 ? dy : dy < 0 ? dx : std::min(dx, dy);
  if (d < 0) fail(ErrorCode::ZeroPolynomial, "zero vector field");
  BiPoly h = BiPoly::x() * v.Y.homogeneous_part(d) - BiPoly::y() * v.X.homogeneous_part(d);
  if (h.is_zero()) fail(ErrorCode::DicriticalDivisor, "every direction is characteristic");
  NumPoly ht;
  for (const auto& [k, c] : h.terms()) {
    if (static_cast<int>(ht.size()) <= k.second) ht.resize(k.second + 1);
    ht[k.second] += c.constant_value();
  }
  trim(ht);
  Directions out;
  out.slopes = real_roots(ht);
  out.vertical = h.coeff(0, d + 1).is_zero();
  return out;
}

BlowUpChain desingularize_along(const VectorField& v, const Selector& selector, int max_depth) {
  BlowUpChain chain;
  VectorField cur = v;
  DivisorLines lines;
  auto push = [&](BlowUpStep step) {
    chain.fields_along.push_back(cur);
    cur = apply_step(cur, step);
    chain.steps.push_back(step);
  };
  for (;;) {
    SingularityClass cls = classify_singularity(cur);
    if (cls.tag == SingularityTag::HyperbolicFocus)
      fail(ErrorCode::NoCharacteristicOrbit, "orbits spiral into a focus");
    if (cls.is_elementary()) {
      chain.terminal = cur;
      chain.terminal_class = cls;
      chain.lines = lines;
      return chain;
    }
    if (chain.depth() >= max_depth)
      fail(ErrorCode::DepthExceeded, "no elementary point within depth " + std::to_string(max_depth));
    characteristic_directions(cur);
    BlowUpStep bv{StepKind::Bv, {}, 0}, bh{StepKind::Bh, {}, 0};
    std::vector<Num> points = divisor_singularities(apply_step(cur, bv), StepKind::Bv);
    VectorField fh = apply_step(cur, bh);
    bool vertical = fh.X.coeff(0, 0).is_zero() && fh.Y.coeff(0, 0).is_zero();
    size_t n = points.size() + (vertical ? 1 : 0);
    if (n == 0) fail(ErrorCode::NoCharacteristicOrbit, "no singular point on the exceptional divisor");
    size_t pick;
    if (chain.decisions < selector.path.size()) {
      int idx = selector.path[chain.decisions];
      if (idx < 0 || static_cast<size_t>(idx) >= n)
        fail(ErrorCode::Usage, "branch index " + std::to_string(idx) + " out of range (" + std::to_string(n) + " candidates)");
      pick = static_cast<size_t>(idx);
    } else {
      std::vector<size_t> eligible;
      for (size_t i = 0; i < points.size(); ++i)
        if (!(points[i].is_zero() && lines.horizontal)) eligible.push_back(i);
      if (vertical && !lines.vertical) eligible.push_back(points.size());
      if (eligible.size() == 1) pick = eligible[0];
      else if (eligible.empty() && n == 1) pick = 0;
      else fail(ErrorCode::AmbiguousBranch, std::to_string(n) + " divisor singularities at depth " + std::to_string(chain.depth()));
    }
    ++chain.decisions;
    if (pick < points.size()) {
      push(bv);
      lines = {true, lines.horizontal};
      if (!points[pick].is_zero()) {
        push({StepKind::Tv, points[pick], 0});
        lines = {true, false};
      }
    } else {
      push(bh);
      lines = {lines.vertical, true};
    }
  }
}

}  // namespace orbitx
