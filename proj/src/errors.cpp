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

#include "orbitx/errors.hpp"

namespace orbitx {

std::string_view error_name(ErrorCode c) {
  switch (c) {
#define X(n) \
  case ErrorCode::n: return #n;
    X(ZeroPolynomial) X(UnsupportedTower) X(NonConstantDivisor) X(DivisionByZero) X(NonPositiveLead)
    X(LnLnOverflow) X(NonPositiveValuation) X(UnrecognizedShape) X(NegativeLeadCoefficient)
    X(TruncationExhausted) X(NotSingular) X(DivisorIsSingularLine) X(DicriticalDivisor) X(DepthExceeded)
    X(AmbiguousBranch) X(NoCharacteristicOrbit) X(VerticalFlow) X(ResonantDivisionByZero) X(ShapeMismatch)
    X(OrbitIsYAxis) X(UnassignedConstant) X(DomainError) X(SectorViolation) X(StiffnessFailure)
    X(ParseError) X(Usage) X(Internal)
#undef X
  }
  return "Internal";
}

}  // namespace orbitx
