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

#ifndef ORBITX_SHAPE_HPP
#define ORBITX_SHAPE_HPP

#include <string>

#include "orbitx/series.hpp"

namespace orbitx {

enum class Shape { C1, C2, C3, C4 };

/// Leading structure of a parametrization X(u) written in the series basis,
/// where ln u appears as -l^{-1}.
struct ShapeTag {
  Shape shape = Shape::C1;
  long n = 1;        // C1: lcm of exponent denominators
  Exponent lambda;   // C2: the irrational exponent generator
  Rational k;        // C3/C4: exponent of the leading power
  long rho = 0;      // C4: degree of the leading log polynomial
};

std::string shape_name(Shape s);

/// Throws UnrecognizedShape when the support fits none of C1-C4.
ShapeTag classify_shape(const Series& a);

/// Series b with compose(a, b) = x + O(x^order).
Series invert(const Series& a, const ShapeTag& tag, const Exponent& order);

}  // namespace orbitx

#endif  // ORBITX_SHAPE_HPP
