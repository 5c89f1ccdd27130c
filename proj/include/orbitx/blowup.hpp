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

#ifndef ORBITX_BLOWUP_HPP
#define ORBITX_BLOWUP_HPP

#include <string_view>
#include <vector>

#include "orbitx/bipoly.hpp"

namespace orbitx {

enum class StepKind { Bv, Bh, Tv, Th };

std::string_view step_name(StepKind kind);

/// One chart map. Bv: (x, y) = (x1, x1 y1); Bh: (x, y) = (x1 y1, y1);
/// Tv: y = y1 + offset; Th: x = x1 + offset. `divided` is the power of x1
/// (Bv) or y1 (Bh) removed from the pulled-back field.
struct BlowUpStep {
  StepKind kind = StepKind::Bv;
  Num offset;
  int divided = 0;
  friend bool operator==(const BlowUpStep& a, const BlowUpStep& b) {
    return a.kind == b.kind && a.offset == b.offset && a.divided == b.divided;
  }
};

enum class SingularityTag { Nonsingular, HyperbolicSaddle, HyperbolicNode, HyperbolicFocus, SemiHyperbolic, Nilpotent, FullNull };

std::string_view tag_name(SingularityTag tag);

/// Linear data at a point. Real eigenvalues are kept in mu1, mu2: ascending
/// for saddles, by modulus for nodes, and mu1 = 0 for semi-hyperbolic points.
struct SingularityClass {
  SingularityTag tag = SingularityTag::Nonsingular;
  Num mu1, mu2;
  bool scalar = false;  // Jacobian is a multiple of the identity
  Num jacobian[2][2];
  bool is_elementary() const;
  Num ratio() const { return mu2 / mu1; }
};

// Pull-back of v along the step; fills step.divided.
VectorField apply_step(const VectorField& v, BlowUpStep& step);

// The polynomial identity Dpi * (factor * after) = before o pi.
bool pushforward_holds(const VectorField& before, const BlowUpStep& step, const VectorField& after);

// Singular points on the exceptional line of a field obtained by `kind`
// (Bv: points (0, y*), Bh: points (x*, 0)), ascending.
std::vector<Num> divisor_singularities(const VectorField& v, StepKind kind);

SingularityClass classify_singularity(const VectorField& v, const Num& px = 0, const Num& py = 0);

struct Directions {
  std::vector<RealAlgebraic> slopes;  // y = t x
  bool vertical = false;
};

Directions characteristic_directions(const VectorField& v);

/// Invariant lines through the current origin that are not orbits of the
/// original field: exceptional divisors, and the y-axis in the start chart.
struct DivisorLines {
  bool vertical = true;
  bool horizontal = false;
};

/// Branch choices, one index per decision; decisions beyond the path are
/// automatic. `side` picks the sign of the terminal parameter (0 = auto).
struct Selector {
  std::vector<int> path;
  int side = 0;
};

struct BlowUpChain {
  std::vector<BlowUpStep> steps;
  std::vector<VectorField> fields_along;  // fields_along[k] is the field before steps[k]
  VectorField terminal;
  SingularityClass terminal_class;
  DivisorLines lines;
  size_t decisions = 0;  // selector entries consumed
  int depth() const;     // number of blow-ups
};

/// Follow blow-ups from the origin until an elementary or regular point.
BlowUpChain desingularize_along(const VectorField& v, const Selector& selector, int max_depth);

}  // namespace orbitx

#endif  // ORBITX_BLOWUP_HPP
