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

#include "orbitx/real_algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "orbitx/errors.hpp"

namespace orbitx {

RealAlgebraic::RealAlgebraic(const Rational& r) : minpoly_(UPoly::linear_root(r)), lo_(r), hi_(r) {}

RealAlgebraic::RealAlgebraic(UPoly minpoly, Rational lo, Rational hi)
    : minpoly_(minpoly.monic()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (minpoly_.degree() < 1) fail(ErrorCode::ZeroPolynomial, "real algebraic needs a nonconstant polynomial");
  if (minpoly_.degree() == 1) lo_ = hi_ = -minpoly_.coeff(0);
}

Rational RealAlgebraic::rational_value() const {
  if (!is_rational()) fail(ErrorCode::Internal, "rational_value of irrational number");
  return lo_;
}

RealAlgebraic RealAlgebraic::refined(const Rational& width) const {
  if (is_rational()) return *this;
  RealAlgebraic r = *this;
  // Sign of the minimal polynomial at hi decides which half keeps the root;
  // endpoints are never roots because the polynomial is irreducible of degree >= 2.
  int shi = sgn(minpoly_.eval(r.hi_));
  while (r.hi_ - r.lo_ > width) {
    Rational mid = (r.lo_ + r.hi_) / 2;
    int sm = sgn(minpoly_.eval(mid));
    if (sm == shi) r.hi_ = mid;
    else r.lo_ = mid;
  }
  return r;
}

int RealAlgebraic::sign_of(const UPoly& q) const {
  if (q.is_zero()) return 0;
  if (is_rational()) return sgn(q.eval(lo_));
  if ((q % minpoly_).is_zero()) return 0;
  RealAlgebraic r = *this;
  Rational width = r.hi_ - r.lo_;
  for (;;) {
    auto [a, b] = interval_eval(q, r.lo_, r.hi_);
    if (a > 0) return 1;
    if (b < 0) return -1;
    width /= 4;
    r = r.refined(width);
  }
}

double RealAlgebraic::to_double() const {
  if (is_rational()) return lo_.get_d();
  RealAlgebraic r = refined(Rational(1, 1) / Rational(Integer(1) << 60));
  return Rational((r.lo_ + r.hi_) / 2).get_d();
}

std::string RealAlgebraic::to_string() const {
  if (is_rational()) return lo_.get_str();
  std::ostringstream os;
  os << "root(" << minpoly_.to_string() << ", " << lo_.get_str() << ", " << hi_.get_str() << ")";
  return os.str();
}

Ordering alg_compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  auto ord = [](int s) { return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ); };
  if (a.is_rational() && b.is_rational()) return ord(cmp(a.rational_value(), b.rational_value()));
  if (b.is_rational()) return ord(a.sign_of(UPoly::linear_root(b.rational_value())));
  if (a.is_rational()) return ord(-b.sign_of(UPoly::linear_root(a.rational_value())));
  RealAlgebraic x = a, y = b;
  const bool same_poly = a.minimal_polynomial() == b.minimal_polynomial();
  for (;;) {
    if (x.hi() <= y.lo()) return Ordering::LT;
    if (y.hi() <= x.lo()) return Ordering::GT;
    if (same_poly) {
      Rational lo = std::max(x.lo(), y.lo());
      Rational hi = std::min(x.hi(), y.hi());
      if (lo < hi && sturm_count(x.minimal_polynomial(), lo, hi) > 0) return Ordering::EQ;
    }
    x = x.refined((x.hi() - x.lo()) / 4);
    y = y.refined((y.hi() - y.lo()) / 4);
  }
}

RealAlgebraic alg_refine(const RealAlgebraic& a, const Rational& width) {
  if (width <= 0) fail(ErrorCode::DomainError, "refinement width must be positive");
  return a.refined(width);
}

namespace {

using cplx = std::complex<long double>;

}  // namespace

std::vector<cplx> numeric_complex_roots(const UPoly& p) {
  const int n = p.degree();
  std::vector<cplx> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = cplx(static_cast<long double>(p.coeff(i).get_d()) / p.lc().get_d());
  std::vector<cplx> z(n);
  const cplx seed(0.4L, 0.9L);
  long double radius = static_cast<long double>(root_bound(p).get_d());
  for (int i = 0; i < n; ++i) z[i] = radius * std::pow(seed, i);
  auto eval = [&](cplx t) {
    cplx acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * t + a[i];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      cplx den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      cplx step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

Rational rationalize(long double v, long max_den) {
  long double x = v;
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int i = 0; i < 64; ++i) {
    long double a = std::floor(x);
    Integer ai(static_cast<double>(a));
    Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    long double frac = x - a;
    if (frac < 1e-15L) break;
    x = 1 / frac;
  }
  Rational r(h1, k1);
  r.canonicalize();
  return r;
}

namespace {

// Search for an integer factor of the squarefree primitive polynomial p whose
// roots are the subset `idx` of the numeric roots; verified exactly.
bool try_subset(const UPoly& p, const std::vector<cplx>& roots, const std::vector<int>& idx, UPoly& out) {
  std::vector<cplx> prod{cplx(1)};
  for (int i : idx) {
    std::vector<cplx> next(prod.size() + 1, cplx(0));
    for (size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] += prod[k];
      next[k] -= prod[k] * roots[i];
    }
    prod = std::move(next);
  }
  const long double lead = static_cast<long double>(p.lc().get_d());
  std::vector<Rational> coeffs;
  for (const auto& c : prod) {
    long double v = c.real() * lead;
    if (std::abs(c.imag() * lead) > 1e-6L * (1 + std::abs(v))) return false;
    long double rounded = std::round(v);
    if (std::abs(v - rounded) > 1e-6L * (1 + std::abs(v))) return false;
    mpz_class z;
    z.set_str(std::to_string(static_cast<long long>(rounded)), 10);
    coeffs.push_back(Rational(z));
  }
  UPoly cand(coeffs);
  if (cand.degree() != static_cast<int>(idx.size())) return false;
  if (!(p % cand).is_zero()) return false;
  out = cand.monic();
  return true;
}

std::vector<UPoly> split_no_rational_roots(const UPoly& p) {
  // p squarefree, monic, without rational roots.
  if (p.degree() <= 3) return {p};
  if (p.degree() > 14) fail(ErrorCode::Internal, "factorization degree limit exceeded");
  auto roots = numeric_complex_roots(p.primitive());
  const int n = p.degree();
  for (int size = 2; size <= n / 2; ++size) {
    std::vector<int> idx;
    UPoly found;
    std::function<bool(int)> rec = [&](int start) -> bool {
      if (static_cast<int>(idx.size()) == size) return try_subset(p.primitive(), roots, idx, found);
      for (int i = start; i < n; ++i) {
        idx.push_back(i);
        if (rec(i + 1)) return true;
        idx.pop_back();
      }
      return false;
    };
    if (rec(0)) {
      auto left = split_no_rational_roots(found);
      auto right = split_no_rational_roots((p / found).monic());
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  return {p};
}

}  // namespace

std::vector<UPoly> irreducible_factors(const UPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<UPoly> out;
  UPoly q = p.squarefree_part();
  if (q.degree() <= 0) return out;
  for (const auto& r : rational_roots(q)) {
    out.push_back(UPoly::linear_root(r));
    q = q / UPoly::linear_root(r);
  }
  if (q.degree() >= 1) {
    auto rest = split_no_rational_roots(q.monic());
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return out;
}

std::vector<RealAlgebraic> real_root_isolate(const UPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "real_root_isolate of zero polynomial");
  std::vector<RealAlgebraic> out;
  for (const auto& f : irreducible_factors(p)) {
    if (f.degree() == 1) {
      out.emplace_back(-f.coeff(0));
      continue;
    }
    Rational b = root_bound(f);
    std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int c = sturm_count(f, lo, hi);
      if (c == 0) continue;
      if (c == 1) {
        out.emplace_back(f, lo, hi);
        continue;
      }
      Rational mid = (lo + hi) / 2;
      stack.push_back({lo, mid});
      stack.push_back({mid, hi});
    }
  }
  std::sort(out.begin(), out.end(), [](const RealAlgebraic& a, const RealAlgebraic& b) { return a < b; });
  return out;
}

}  // namespace orbitx
