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

#ifndef ORBITX_PIPELINE_HPP
#define ORBITX_PIPELINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitx/elementary.hpp"
#include "orbitx/puiseux.hpp"
#include "orbitx/shape.hpp"

namespace orbitx {

/// The orbit as (x, y) = (X(u), Y(u)) in the original chart.
struct ParametricOrbit {
  Series X_of_u;
  Series Y_of_u;
};

ParametricOrbit parametric_orbit(const BlowUpChain& chain, const Series& x_m, const Series& y_m);
ParametricOrbit parametric_orbit(const BlowUpChain& chain, const OrbitSeed& seed);

// (x_m, y_m) = M (u, phi(u)) in the terminal chart.
std::pair<Series, Series> terminal_parametrization(const OrbitBranch& branch, const OrbitSeed& seed);

// X(X(u), Y(u)) Y' - Y(X(u), Y(u)) X'
Series parametric_residual(const VectorField& v, const ParametricOrbit& par);

/// Shapes of X(u) and of Y(u) (none when Y vanishes identically). Throws
/// ShapeMismatch when the pair cannot be composed.
std::pair<ShapeTag, std::optional<ShapeTag>> classify_series_shape(const ParametricOrbit& par);

enum class CaseTag { I, II, III };

std::string case_name(CaseTag tag);

struct Validation {
  Exponent tangency_order;  // residual X y' - Y vanishes below this
  Exponent slack;           // order lost through X(0, 0) != 0
  int x_sign = 0;           // certified sign of X along the orbit, 0 if unknown
  bool passed = false;
};

struct ExpansionResult {
  Series series;
  CaseTag case_tag = CaseTag::I;
  long n = 1;
  std::vector<std::string> free_constants;
  BlowUpChain chain;
  OrbitBranch branch;
  int u_side = 1;
  OrbitSeed seed;
  ParametricOrbit parametric;
  Validation validation;
};

/// y = Y(X^{-1}(x)) to the given order, with the case tag and ramification.
ExpansionResult compose_expansion(const ParametricOrbit& par, const Exponent& order);

/// The characteristic orbit picked by `selector`, as y(x) for small x > 0
/// (or y(-x) for the negative side).
ExpansionResult expand_orbit(const VectorField& v, const Selector& selector, const Exponent& order,
                             Side side = Side::Positive);

// Case, ramification and free constants of a series in x.
void tag_series(const Series& y, CaseTag& tag, long& n, std::vector<std::string>& constants);

}  // namespace orbitx

#endif  // ORBITX_PIPELINE_HPP
