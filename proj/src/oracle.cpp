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

#include "orbitx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>

#include "orbitx/errors.hpp"

namespace orbitx {

namespace {

BigFloat from_rational(const Rational& q) {
  BigFloat n(q.get_num().get_str()), d(q.get_den().get_str());
  return n / d;
}

struct ThetaCache {
  std::string key;
  BigFloat value;
};

thread_local ThetaCache theta_cache;

BigFloat theta_value() {
  const auto& theta = current_session().theta;
  if (!theta) fail(ErrorCode::Internal, "no generator in session");
  unsigned bits = BigFloat::default_precision() * 4 + 32;
  std::string key = theta->to_string() + "#" + std::to_string(bits);
  if (theta_cache.key != key) {
    RealAlgebraic r = theta->refined(Rational(1) / Rational(Integer(1) << bits));
    theta_cache = {key, from_rational((r.lo() + r.hi()) / 2)};
  }
  return theta_cache.value;
}

// Numeric copy of a polynomial for repeated evaluation.
struct NumericPoly {
  std::vector<std::tuple<int, int, BigFloat>> terms;
  explicit NumericPoly(const BiPoly& p) {
    for (const auto& [k, c] : p.terms()) terms.emplace_back(k.first, k.second, to_big(c, {}));
  }
  BigFloat operator()(const BigFloat& x, const BigFloat& y) const {
    BigFloat s = 0;
    for (const auto& [i, j, c] : terms) s += c * pow(x, i) * pow(y, j);
    return s;
  }
};

}  // namespace

unsigned oracle_precision_bits() {
  const char* env = std::getenv("ORBITX_PRECISION_BITS");
  long bits = env ? std::strtol(env, nullptr, 10) : 192;
  return static_cast<unsigned>(std::max(128L, bits));
}

PrecisionScope::PrecisionScope(unsigned bits) : previous_(BigFloat::default_precision()) {
  BigFloat::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(previous_); }

BigFloat to_big(const Num& v) {
  const auto& c = v.coords();
  if (c.empty()) return 0;
  BigFloat s = 0, p = 1, t = c.size() > 1 ? theta_value() : BigFloat(0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) s += from_rational(c[i]) * p;
    p *= t;
  }
  return s;
}

BigFloat to_big(const ConstantExpr& c, const std::map<std::string, BigFloat>& constants) {
  BigFloat s = 0;
  for (const auto& [mono, coeff] : c.terms()) {
    BigFloat t = to_big(coeff);
    for (const auto& [name, e] : mono) {
      BigFloat base;
      if (is_log_symbol(name)) {
        base = log(to_big(log_symbol_argument(name)));
      } else {
        auto it = constants.find(name);
        if (it == constants.end()) fail(ErrorCode::UnassignedConstant, "no value for " + name);
        base = it->second;
      }
      t *= pow(base, e);
    }
    s += t;
  }
  return s;
}

BigFloat eval_series(const Series& s, const BigFloat& x, const std::map<std::string, BigFloat>& constants) {
  if (x <= 0 || x >= exp(BigFloat(-1))) fail(ErrorCode::DomainError, "series evaluation needs 0 < x < 1/e");
  BigFloat lx = log(x), ell = -1 / lx, lell = log(ell), sum = 0;
  for (const auto& [k, c] : s.terms()) {
    BigFloat t = to_big(c, constants) * exp(to_big(k.alpha.value()) * lx);
    if (!k.beta.is_zero()) t *= exp(to_big(k.beta.value()) * lell);
    if (k.gamma) t *= pow(lell, k.gamma);
    sum += t;
  }
  return sum;
}

namespace {

using Rhs = std::function<BigFloat(const BigFloat&, const BigFloat&)>;

// One Gragg-Bulirsch-Stoer step of size h from (t, y) with the harmonic
// sequence 2, 4, 6, ...; false when the extrapolation table does not settle.
bool gbs_step(const Rhs& f, const BigFloat& t, const BigFloat& y, const BigFloat& h, const BigFloat& tol,
              BigFloat& out, BigFloat& err, int& columns) {
  constexpr int kMax = 14;
  std::vector<std::vector<BigFloat>> table;
  BigFloat f0 = f(t, y);
  for (int k = 0; k < kMax; ++k) {
    int n = 2 * (k + 1);
    BigFloat sub = h / n, z0 = y, z1 = y + sub * f0;
    for (int m = 1; m < n; ++m) {
      BigFloat z2 = z0 + 2 * sub * f(t + m * sub, z1);
      z0 = z1;
      z1 = z2;
    }
    table.push_back({(z0 + z1 + sub * f(t + h, z1)) / 2});
    for (int j = 1; j <= k; ++j) {
      BigFloat ratio = BigFloat(n) / (2 * (k - j + 1));
      ratio *= ratio;
      table[k].push_back(table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (ratio - 1));
    }
    if (k >= 2) {
      err = abs(table[k][k] - table[k][k - 1]);
      if (err <= tol * std::max(BigFloat(1), abs(table[k][k]))) {
        out = table[k][k];
        columns = k;
        return true;
      }
    }
  }
  return false;
}

std::set<std::string> free_names(const Series& s) {
  std::set<std::string> names;
  for (const auto& [k, c] : s.terms())
    for (const auto& [m, coeff] : c.terms())
      for (const auto& [name, e] : m)
        if (!is_log_symbol(name)) names.insert(name);
  return names;
}

}  // namespace

TrajectorySample integrate_to_singularity(const VectorField& v, const std::pair<BigFloat, BigFloat>& start,
                                          const std::vector<BigFloat>& targets, const BigFloat& tol) {
  NumericPoly X(v.X), Y(v.Y);
  int sector = 0;
  auto check_sector = [&](const BigFloat& x, const BigFloat& y) {
    BigFloat xv = X(x, y);
    int s = xv > 0 ? 1 : (xv < 0 ? -1 : 0);
    if (s == 0 || (sector != 0 && s != sector))
      fail(ErrorCode::SectorViolation, "horizontal component changes sign along the trajectory");
    sector = s;
  };
  // Along the orbit in t = ln x: dy/dt = x Y / X.
  Rhs f = [&](const BigFloat& t, const BigFloat& y) {
    BigFloat x = exp(t);
    return x * Y(x, y) / X(x, y);
  };
  TrajectorySample out;
  BigFloat t = log(start.first), y = start.second, h = -0.05;
  check_sector(start.first, y);
  for (const auto& target : targets) {
    if (target <= 0 || target > start.first) fail(ErrorCode::Usage, "targets must lie in (0, x0]");
    BigFloat tt = log(target);
    while (t > tt) {
      BigFloat step = h < tt - t ? tt - t : h;
      bool lands = step == tt - t;
      BigFloat next, err;
      int columns = 0;
      if (gbs_step(f, t, y, step, tol, next, err, columns)) {
        t = lands ? tt : t + step;
        y = next;
        ++out.steps;
        if (err > out.max_local_error) out.max_local_error = err;
        check_sector(exp(t), y);
        if (columns < 6 && !lands) h *= 1.5;
      } else {
        h = step / 2;
        ++out.rejected;
        if (abs(h) < BigFloat("1e-30")) fail(ErrorCode::StiffnessFailure, "step size underflow");
      }
    }
    out.points.emplace_back(target, y);
  }
  return out;
}

namespace {

std::vector<BigFloat> geometric(double lo, double hi, int samples) {
  std::vector<BigFloat> pts;
  BigFloat a = log(BigFloat(hi)), b = log(BigFloat(lo));
  for (int i = 0; i < samples; ++i) pts.push_back(exp(a + (b - a) * i / std::max(1, samples - 1)));
  return pts;
}

// Solves the small dense system A p = b by Gaussian elimination with pivoting.
std::vector<BigFloat> solve_dense(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b) {
  size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0) fail(ErrorCode::Internal, "singular fitting system");
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (size_t r = c + 1; r < n; ++r) {
      BigFloat m = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
      b[r] -= m * b[c];
    }
  }
  std::vector<BigFloat> p(n);
  for (size_t c = n; c-- > 0;) {
    BigFloat s = b[c];
    for (size_t k = c + 1; k < n; ++k) s -= a[c][k] * p[k];
    p[c] = s / a[c][c];
  }
  return p;
}

}  // namespace

SlopeReport residual_slope(const VectorField& v, const Series& series, const SlopeOptions& options) {
  PrecisionScope scope(oracle_precision_bits());
  SlopeReport report;

  Series test = series;
  std::optional<Exponent> cut = options.test_order ? options.test_order : series.order();
  if (options.test_order) test = series.truncated(*options.test_order);
  if (cut) {
    report.predicted = to_big(cut->value()).convert_to<double>();
    for (const auto& [k, c] : series.terms())
      if (!(weight(k) < *cut)) {
        report.predicted = to_big(k.alpha.value()).convert_to<double>();
        break;
      }
  }

  std::map<std::string, BigFloat> start;
  for (const auto& name : free_names(series)) start[name] = 1;
  auto fit_pts = geometric(options.fit_window.first, options.fit_window.second, options.samples);
  auto test_pts = geometric(options.test_window.first, options.test_window.second, options.samples);
  std::vector<BigFloat> targets = fit_pts;
  for (const auto& p : test_pts)
    if (p < targets.back()) targets.push_back(p);
  BigFloat x0 = targets.front();
  BigFloat y0 = eval_series(series, x0, start);
  auto traj = integrate_to_singularity(v, {x0, y0}, targets, BigFloat(options.tol));
  std::map<BigFloat, BigFloat> y_at;
  for (const auto& [x, y] : traj.points) y_at[x] = y;

  // Gauss-Newton on the free constants of the compared truncation.
  auto test_names = free_names(test);
  std::vector<std::string> names(test_names.begin(), test_names.end());
  std::map<std::string, BigFloat> params;
  for (const auto& n : names) params[n] = 1;
  BigFloat delta = pow(BigFloat(2), -static_cast<int>(oracle_precision_bits() / 3));
  for (int iter = 0; iter < 30 && !names.empty(); ++iter) {
    size_t n = names.size();
    std::vector<std::vector<BigFloat>> ata(n, std::vector<BigFloat>(n, 0));
    std::vector<BigFloat> atr(n, 0);
    for (const auto& x : fit_pts) {
      BigFloat base = eval_series(test, x, params), r = y_at[x] - base;
      std::vector<BigFloat> jac(n);
      for (size_t j = 0; j < n; ++j) {
        auto moved = params;
        moved[names[j]] += delta;
        jac[j] = (eval_series(test, x, moved) - base) / delta;
      }
      for (size_t i = 0; i < n; ++i) {
        atr[i] += jac[i] * r;
        for (size_t j = 0; j < n; ++j) ata[i][j] += jac[i] * jac[j];
      }
    }
    auto step = solve_dense(ata, atr);
    BigFloat size = 0;
    for (size_t j = 0; j < n; ++j) {
      params[names[j]] += step[j];
      size = std::max(size, abs(step[j]));
    }
    if (size < pow(BigFloat(2), -static_cast<int>(oracle_precision_bits() / 2))) break;
  }
  report.fitted_constants = params;

  // Log-log regression of the error over the test window.
  BigFloat floor = pow(BigFloat(2), -static_cast<int>(oracle_precision_bits() / 2));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool at_floor = true;
  for (const auto& x : test_pts) {
    BigFloat err = abs(y_at[x] - eval_series(test, x, params));
    if (err > floor * std::max(BigFloat(1e-30), abs(y_at[x]))) at_floor = false;
    double lx = log(x).convert_to<double>();
    double le = log(std::max(err, BigFloat("1e-300"))).convert_to<double>();
    sx += lx;
    sy += le;
    sxx += lx * lx;
    sxy += lx * le;
  }
  double m = test_pts.size();
  report.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  report.exact = at_floor;
  if (at_floor)
    report.verdict = "exact";
  else
    report.verdict = std::abs(report.slope - report.predicted) <= options.slope_tolerance ? "pass" : "fail";
  return report;
}

}  // namespace orbitx
