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

#ifndef ORBITX_ELEMENTARY_HPP
#define ORBITX_ELEMENTARY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "orbitx/blowup.hpp"

namespace orbitx {

enum class SeedKind { Trivial, PuiseuxLike, NodePower, NodeLog, CenterFormal };

std::string_view seed_name(SeedKind kind);

/// Orbit y = phi(x) through the origin of an elementary chart.
struct OrbitSeed {
  Series series;
  SeedKind kind = SeedKind::Trivial;
  std::vector<std::string> free_constants;
};

// X(x, phi) phi' - Y(x, phi)
Series tangency_residual(const VectorField& v, const Series& phi);

OrbitSeed regular_orbit_series(const VectorField& v, const Exponent& order);
OrbitSeed saddle_separatrix_series(const VectorField& v, const Exponent& order);
OrbitSeed node_orbit_family(const VectorField& v, const Exponent& order);
OrbitSeed center_manifold_series(const VectorField& v, const Exponent& order);

/// 2x2 matrix over Q(theta) with (x, y) = M (p, q).
struct LinearChart {
  Num m[2][2] = {{1, 0}, {0, 1}};
  static LinearChart identity() { return {}; }
  static LinearChart swap() { return {{{0, 1}, {1, 0}}}; }
  LinearChart reflected() const;  // p -> -p
};

// The field in coordinates (p, q).
VectorField linear_change(const VectorField& v, const LinearChart& chart);

enum class BranchSolver { Regular, Separatrix, StrongManifold, NodeFamily, CenterManifold };

/// A candidate orbit at an elementary point: q = phi(p) in `chart`.
struct OrbitBranch {
  LinearChart chart;
  BranchSolver solver = BranchSolver::Regular;
  bool on_divisor = false;  // the candidate is an excluded invariant line
};

std::vector<OrbitBranch> orbit_branches(const VectorField& v, const SingularityClass& cls, const DivisorLines& lines);

OrbitSeed solve_branch(const VectorField& v, const OrbitBranch& branch, const Exponent& order);

}  // namespace orbitx

#endif  // ORBITX_ELEMENTARY_HPP
