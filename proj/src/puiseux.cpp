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

#include "orbitx/puiseux.hpp"

#include <map>
#include <numeric>

#include "orbitx/errors.hpp"

namespace orbitx {

namespace {

// Generalized polynomial: rational powers of x, integer powers of y.
using GKey = std::pair<Rational, int>;
using GPoly = std::map<GKey, Num>;

void g_add(GPoly& p, const GKey& k, const Num& c) {
  if (c.is_zero()) return;
  auto it = p.find(k);
  if (it == p.end()) {
    p.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

std::vector<NewtonEdge> edges_of(const GPoly& g) {
  std::map<int, Rational> lowest;  // j -> least i
  for (const auto& [k, c] : g) {
    auto it = lowest.find(k.second);
    if (it == lowest.end() || k.first < it->second) lowest[k.second] = k.first;
  }
  std::vector<NewtonEdge> out;
  if (lowest.empty()) return out;
  // start at the least i (ties: least j), walk down to the least j
  auto start = lowest.begin();
  for (auto it = lowest.begin(); it != lowest.end(); ++it)
    if (it->second < start->second) start = it;
  int cj = start->first;
  Rational ci = start->second;
  while (cj > lowest.begin()->first) {
    std::optional<Rational> best;
    for (const auto& [j, i] : lowest) {
      if (j >= cj) break;
      Rational m = (i - ci) / (cj - j);
      if (!best || m < *best) best = m;
    }
    NewtonEdge e;
    e.slope = *best;
    e.points.emplace_back(ci, cj);
    int nj = cj;
    Rational ni = ci;
    for (auto it = lowest.rbegin(); it != lowest.rend(); ++it) {
      auto [j, i] = *it;
      if (j >= cj) continue;
      if ((i - ci) / (cj - j) == *best) {
        e.points.emplace_back(i, j);
        nj = j;
        ni = i;
      }
    }
    out.push_back(e);
    cj = nj;
    ci = ni;
  }
  return out;
}

long lcm_den(const std::vector<std::pair<Num, Rational>>& prefix) {
  long n = 1;
  for (const auto& [c, e] : prefix) n = std::lcm(n, e.get_den().get_si());
  return n;
}

struct Expander {
  Exponent order;
  Side side;
  int multiplicity;
  std::vector<PuiseuxBranch> out;

  void emit(const std::vector<std::pair<Num, Rational>>& prefix, bool exact) {
    Series s;
    for (const auto& [c, e] : prefix) s += Series::monomial(c, e);
    if (!exact) s = s.truncated(order);
    out.push_back({s, lcm_den(prefix), side, multiplicity});
  }

  void expand(GPoly g, std::vector<std::pair<Num, Rational>> prefix, const Rational& e) {
    int ymin = g.begin()->first.second;
    for (const auto& [k, c] : g) ymin = std::min(ymin, k.second);
    if (ymin > 0) {
      emit(prefix, true);
      GPoly h;
      for (const auto& [k, c] : g) h[{k.first, k.second - ymin}] = c;
      g = std::move(h);
    }
    for (const NewtonEdge& edge : edges_of(g)) {
      const Rational& m = edge.slope;
      int jmin = edge.points.back().second;
      NumPoly p(edge.points.front().second - jmin + 1);
      for (const auto& [i, j] : edge.points) p[j - jmin] = g.at({i, j});
      Rational value = edge.points.front().first + m * edge.points.front().second;
      for (const RealAlgebraic& root : real_roots(p)) {
        if (root.sign() == 0) continue;
        Num c = embed(root);
        int mult = 0;
        for (NumPoly d = p; !d.empty() && eval(d, c).is_zero(); ++mult) {
          NumPoly dd;
          for (size_t k = 1; k < d.size(); ++k) dd.push_back(d[k] * Num(static_cast<long>(k)));
          trim(dd);
          d = dd;
        }
        Rational next = e + m;
        if (mult == 1 && Exponent(next) >= order) {
          emit(prefix, false);
          continue;
        }
        // g(x, x^m (c + y)) / x^value
        GPoly h;
        std::vector<Num> cpow{Num(1)};
        for (const auto& [k, a] : g) {
          int j = k.second;
          while (static_cast<int>(cpow.size()) <= j) cpow.push_back(cpow.back() * c);
          Rational shift = k.first + m * j - value;
          Num binom = 1;
          for (int t = 0; t <= j; ++t) {
            g_add(h, {shift, t}, a * binom * cpow[j - t]);
            binom = binom * Num(static_cast<long>(j - t)) / Num(static_cast<long>(t + 1));
          }
        }
        auto np = prefix;
        np.emplace_back(c, next);
        expand(std::move(h), std::move(np), next);
      }
    }
  }
};

GPoly to_gpoly(const BiPoly& f) {
  GPoly g;
  for (const auto& [k, c] : f.terms()) {
    if (!c.is_constant()) fail(ErrorCode::NonConstantDivisor, "curve coefficient " + c.to_string() + " is symbolic");
    g_add(g, {Rational(k.first), k.second}, c.constant_value());
  }
  return g;
}

}  // namespace

std::vector<NewtonEdge> newton_polygon(const BiPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "Newton polygon of the zero polynomial");
  return edges_of(to_gpoly(f));
}

std::vector<PuiseuxBranch> puiseux_branches(const BiPoly& f, const Exponent& order, Side side) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "branches of the zero polynomial");
  BiPoly g = side == Side::Negative ? f.reflect_x() : f;
  std::vector<PuiseuxBranch> all;
  for (const auto& [factor, mult] : squarefree_decomposition_in_y(g)) {
    if (!factor.coeff(0, 0).is_zero()) continue;
    Expander ex{order, side, mult, {}};
    ex.expand(to_gpoly(factor), {}, 0);
    for (auto& b : ex.out) all.push_back(std::move(b));
  }
  // ascending by value for small |x|
  std::stable_sort(all.begin(), all.end(), [](const PuiseuxBranch& a, const PuiseuxBranch& b) {
    Series d = a.series - b.series;
    return !d.is_zero() && d.lead_coeff().constant_value().sign() < 0;
  });
  return all;
}

Isoclines isocline_branches(const VectorField& v, const Exponent& order, Side side) {
  if (v.X.is_zero() || v.Y.is_zero()) fail(ErrorCode::ZeroPolynomial, "isoclines need X and Y nonzero");
  Isoclines iso;
  iso.vertical_y_axis = v.X.x_order() > 0;
  iso.horizontal_y_axis = v.Y.x_order() > 0;
  BiPoly X = v.X.divide_x_power(v.X.x_order()), Y = v.Y.divide_x_power(v.Y.x_order());
  if (!X.is_zero() && X.coeff(0, 0).is_zero() && X.degree_y() > 0) iso.vertical = puiseux_branches(X, order, side);
  if (!Y.is_zero() && Y.coeff(0, 0).is_zero() && Y.degree_y() > 0) iso.horizontal = puiseux_branches(Y, order, side);
  return iso;
}

}  // namespace orbitx
