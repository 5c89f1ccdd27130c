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

#ifndef ORBITX_ORACLE_HPP
#define ORBITX_ORACLE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "orbitx/pipeline.hpp"

namespace orbitx {

using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// ORBITX_PRECISION_BITS, default 192, never below 128.
unsigned oracle_precision_bits();

/// Sets the working precision of new BigFloats for the scope's lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

BigFloat to_big(const Num& v);
BigFloat to_big(const ConstantExpr& c, const std::map<std::string, BigFloat>& constants);

/// Value of s at 0 < x < 1/e with l = -1/ln x.
BigFloat eval_series(const Series& s, const BigFloat& x, const std::map<std::string, BigFloat>& constants = {});

struct TrajectorySample {
  std::vector<std::pair<BigFloat, BigFloat>> points;  // (x, y) at each target
  long steps = 0;
  long rejected = 0;
  BigFloat max_local_error = 0;
};

/// Integrates dy/dx = Y/X in t = ln x from `start` down to each target x.
TrajectorySample integrate_to_singularity(const VectorField& v, const std::pair<BigFloat, BigFloat>& start,
                                          const std::vector<BigFloat>& targets, const BigFloat& tol);

struct SlopeReport {
  std::map<std::string, BigFloat> fitted_constants;
  double slope = 0;
  double predicted = 0;
  bool exact = false;  // error at the precision floor across the window
  std::string verdict;  // "exact", "pass" or "fail"
};

struct SlopeOptions {
  std::pair<double, double> fit_window{1e-3, 1e-2};
  std::pair<double, double> test_window{1e-4, 1e-3};
  std::optional<Exponent> test_order;  // truncation compared against; default the series order
  double tol = 1e-40;
  double slope_tolerance = 0.1;
  int samples = 9;
};

/// Starts on `series` (free constants set to 1) at the top of the fit
/// window, fits the constants of the truncated series on the fit window
/// and regresses ln|y_num - y_series| on ln x over the test window.
SlopeReport residual_slope(const VectorField& v, const Series& series, const SlopeOptions& options = {});

}  // namespace orbitx

#endif  // ORBITX_ORACLE_HPP
