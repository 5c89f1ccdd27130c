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

#ifndef ORBITX_PUISEUX_HPP
#define ORBITX_PUISEUX_HPP

#include <utility>
#include <vector>

#include "orbitx/bipoly.hpp"

namespace orbitx {

struct NewtonEdge {
  Rational slope;  // the branch behaves like x^slope
  std::vector<std::pair<Rational, int>> points;  // support points on the edge, j descending
};

/// Edges of the lower convex hull of the support facing the origin, by
/// increasing slope.
std::vector<NewtonEdge> newton_polygon(const BiPoly& f);

enum class Side { Positive, Negative };

struct PuiseuxBranch {
  Series series;  // in |x| on the chosen side
  long n = 1;     // ramification
  Side side = Side::Positive;
  int multiplicity = 1;
};

/// Real branches y(x) -> 0 of f = 0 on the given side of x = 0.
std::vector<PuiseuxBranch> puiseux_branches(const BiPoly& f, const Exponent& order, Side side = Side::Positive);

struct Isoclines {
  std::vector<PuiseuxBranch> vertical;    // X = 0
  std::vector<PuiseuxBranch> horizontal;  // Y = 0
  bool vertical_y_axis = false;
  bool horizontal_y_axis = false;
};

Isoclines isocline_branches(const VectorField& v, const Exponent& order, Side side = Side::Positive);

}  // namespace orbitx

#endif  // ORBITX_PUISEUX_HPP
