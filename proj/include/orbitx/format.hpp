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

#ifndef ORBITX_FORMAT_HPP
#define ORBITX_FORMAT_HPP

#include <optional>
#include <string>

#include "orbitx/oracle.hpp"
#include "orbitx/pipeline.hpp"

namespace orbitx {

/// Parses "X = <expr>; Y = <expr>;" with an optional leading generator
/// declaration "theta: <polynomial in t>, [lo, hi];". The generator is
/// installed in the current session. Errors are ParseError with line and column.
VectorField parse_field(const std::string& text);

/// A single polynomial in x, y (and theta when the session has one).
BiPoly parse_poly(const std::string& text);

ConstantExpr parse_constant(const std::string& text);
Exponent parse_exponent(const std::string& text);

// Readable names for the session generator: "sqrt(2/3)" for a positive
// square root of a rational, otherwise "theta".
std::string theta_display();

std::string format_human(const ExpansionResult& r, const std::optional<SlopeReport>& oracle = {});
std::string format_latex(const ExpansionResult& r);

/// Canonical "v1" JSON document; parsing it back and re-emitting gives the
/// same bytes.
std::string format_json(const ExpansionResult& r, const std::optional<SlopeReport>& oracle = {});
std::string reformat_json(const std::string& text);

std::string format_series_human(const Series& s);

enum class OutputFormat { Human, Json, Latex };

std::string format_chain(const BlowUpChain& chain, OutputFormat fmt);
std::string format_branches(const std::vector<PuiseuxBranch>& branches, OutputFormat fmt);
std::string format_series_latex(const Series& s);

}  // namespace orbitx

#endif  // ORBITX_FORMAT_HPP
