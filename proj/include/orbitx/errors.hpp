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

#ifndef ORBITX_ERRORS_HPP
#define ORBITX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitx {

enum class ErrorCode {
  ZeroPolynomial,
  UnsupportedTower,
  NonConstantDivisor,
  DivisionByZero,
  NonPositiveLead,
  LnLnOverflow,
  NonPositiveValuation,
  UnrecognizedShape,
  NegativeLeadCoefficient,
  TruncationExhausted,
  NotSingular,
  DivisorIsSingularLine,
  DicriticalDivisor,
  DepthExceeded,
  AmbiguousBranch,
  NoCharacteristicOrbit,
  VerticalFlow,
  ResonantDivisionByZero,
  ShapeMismatch,
  OrbitIsYAxis,
  UnassignedConstant,
  DomainError,
  SectorViolation,
  StiffnessFailure,
  ParseError,
  Usage,
  Internal,
};

std::string_view error_name(ErrorCode code);

// Every failure in the library surfaces as this exception; `code()` is what the
// C layer maps to status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace orbitx

#endif  // ORBITX_ERRORS_HPP
