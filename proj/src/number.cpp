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

#include "orbitx/number.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <sstream>

#include "orbitx/errors.hpp"

namespace orbitx {

namespace {

const UPoly* generator_poly() {
  const auto& th = current_session().theta;
  return th ? &th->minimal_polynomial() : nullptr;
}

int field_degree() {
  const UPoly* m = generator_poly();
  return m ? m->degree() : 1;
}

Rational det(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  Rational d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return d;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UPoly basis = UPoly::constant(1);
    Rational den = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly::linear_root(xs[j]);
      den *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / den) * basis;
  }
  return acc;
}

// Multiplication-by-a matrix on the power basis.
std::vector<std::vector<Rational>> mult_matrix(const Num& a) {
  const int d = field_degree();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  Num basis = Num(1);
  for (int j = 0; j < d; ++j) {
    Num col = a * basis;
    for (int i = 0; i < d; ++i) m[i][j] = i < static_cast<int>(col.coords().size()) ? col.coords()[i] : Rational(0);
    basis = basis * Num::theta();
  }
  return m;
}

Rational norm(const Num& a) {
  if (!generator_poly()) return a.is_zero() ? Rational(0) : a.rational();
  return det(mult_matrix(a));
}

// Interval enclosure of a(theta) with theta in [lo, hi].
std::pair<Rational, Rational> num_interval(const Num& a, const Rational& lo, const Rational& hi) {
  return interval_eval(a.as_poly(), lo, hi);
}

std::pair<Rational, Rational> imul(const std::pair<Rational, Rational>& x, const std::pair<Rational, Rational>& y) {
  Rational c[4] = {x.first * y.first, x.first * y.second, x.second * y.first, x.second * y.second};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

}  // namespace

Num::Num(const Rational& r) {
  if (r != 0) {
    c_.push_back(r);
    c_.back().canonicalize();
  }
}

Num::Num(std::vector<Rational> coords) : c_(std::move(coords)) {
  for (auto& c : c_) c.canonicalize();
  reduce();
}

Num Num::theta() {
  if (!generator_poly()) fail(ErrorCode::Internal, "session has no algebraic generator");
  return Num(std::vector<Rational>{Rational(0), Rational(1)});
}

void Num::reduce() {
  const UPoly* m = generator_poly();
  if (m && static_cast<int>(c_.size()) > m->degree()) {
    c_ = (UPoly(c_) % *m).coeffs();
  } else {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  if (!m && c_.size() > 1) fail(ErrorCode::UnsupportedTower, "algebraic value used without a session generator");
}

Rational Num::rational() const {
  if (!is_rational()) fail(ErrorCode::Internal, "rational() of irrational field element");
  return c_.empty() ? Rational(0) : c_[0];
}

int Num::sign() const {
  if (is_rational()) return sgn(rational());
  return current_session().theta->sign_of(as_poly());
}

Num Num::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return Num(1 / rational());
  const UPoly& m = *generator_poly();
  // Extended Euclid: s*a + t*m = g, with g a nonzero constant since m is irreducible.
  UPoly r0 = m, r1 = as_poly();
  UPoly s0, s1 = UPoly::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = UPoly::divmod(r0, r1);
    UPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return Num(((1 / r1.lc()) * s1).coeffs());
}

Num Num::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Num result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

double Num::to_double() const {
  if (is_rational()) return rational().get_d();
  return to_real_algebraic().to_double();
}

RealAlgebraic Num::to_real_algebraic() const {
  if (is_rational()) return RealAlgebraic(rational());
  const int d = field_degree();
  auto m = mult_matrix(*this);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= d; ++k) {
    auto a = m;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) a[i][j] = -a[i][j];
      a[i][i] += k;
    }
    xs.push_back(k);
    ys.push_back(det(a));
  }
  UPoly charpoly = interpolate(xs, ys);
  for (const auto& f : irreducible_factors(charpoly)) {
    NumPoly fp;
    for (const auto& c : f.coeffs()) fp.push_back(Num(c));
    if (!eval(fp, *this).is_zero()) continue;
    for (const auto& r : real_root_isolate(f)) {
      if ((*this - Num(r.lo())).sign() > 0 && (*this - Num(r.hi())).sign() <= 0) return r;
    }
  }
  fail(ErrorCode::Internal, "could not locate field element among its conjugates");
}

Num Num::operator-() const {
  Num r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Num operator+(const Num& a, const Num& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Num(std::move(v));
}

Num operator*(const Num& a, const Num& b) {
  if (a.is_zero() || b.is_zero()) return Num();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Num(std::move(v));
}

bool Num::needs_parens() const {
  int nonzero = 0;
  for (const auto& x : c_) nonzero += (x != 0);
  return nonzero > 1;
}

std::string Num::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "theta";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Num eval(const NumPoly& p, const Num& t) {
  Num acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

void trim(NumPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly norm_poly(const NumPoly& p0) {
  NumPoly p = p0;
  trim(p);
  if (p.empty()) return {};
  bool rational = std::all_of(p.begin(), p.end(), [](const Num& c) { return c.is_rational(); });
  if (!generator_poly() || rational) {
    std::vector<Rational> v;
    for (const auto& c : p) v.push_back(c.is_zero() ? Rational(0) : c.rational());
    UPoly r(v);
    if (!generator_poly()) return r;
    UPoly acc = UPoly::constant(1);
    for (int i = 0; i < field_degree(); ++i) acc = acc * r;
    return acc;
  }
  const int n = static_cast<int>(p.size()) - 1;
  const int deg = n * field_degree();
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= deg; ++k) {
    xs.push_back(k);
    ys.push_back(norm(eval(p, Num(Rational(k)))));
  }
  return interpolate(xs, ys);
}

std::vector<RealAlgebraic> real_roots(const NumPoly& p0) {
  NumPoly p = p0;
  trim(p);
  if (p.empty()) fail(ErrorCode::ZeroPolynomial, "real_roots of zero polynomial");
  bool rational = std::all_of(p.begin(), p.end(), [](const Num& c) { return c.is_rational(); });
  if (rational) {
    std::vector<Rational> v;
    for (const auto& c : p) v.push_back(c.is_zero() ? Rational(0) : c.rational());
    return real_root_isolate(UPoly(v));
  }
  const RealAlgebraic& th = *current_session().theta;
  std::vector<RealAlgebraic> out;
  for (const auto& beta : real_root_isolate(norm_poly(p))) {
    bool is_root = true;
    if (beta.is_rational()) {
      is_root = eval(p, Num(beta.rational_value())).is_zero();
    } else {
      Rational width(1, 16);
      for (int iter = 0; iter < 220; ++iter) {
        RealAlgebraic t = th.refined(width), b = beta.refined(width);
        std::pair<Rational, Rational> acc{0, 0}, bpow{1, 1};
        for (const auto& c : p) {
          auto term = imul(num_interval(c, t.lo(), t.hi()), bpow);
          acc = {acc.first + term.first, acc.second + term.second};
          bpow = imul(bpow, {b.lo(), b.hi()});
        }
        if (acc.first > 0 || acc.second < 0) {
          is_root = false;
          break;
        }
        width /= 2;
      }
    }
    if (is_root) out.push_back(beta);
  }
  return out;
}

Num embed(const RealAlgebraic& beta) {
  if (beta.is_rational()) return Num(beta.rational_value());
  Session& s = current_session();
  if (!s.theta) {
    s.theta = beta;
    return Num::theta();
  }
  if (alg_compare(beta, *s.theta) == Ordering::EQ) return Num::theta();
  const int d = s.theta->degree();
  const int e = beta.degree();
  if (d % e != 0) fail(ErrorCode::UnsupportedTower, "value " + beta.to_string() + " needs a second algebraic generator");
  using cplx = std::complex<long double>;
  auto troots = numeric_complex_roots(s.theta->minimal_polynomial());
  auto broots = numeric_complex_roots(beta.minimal_polynomial());
  const long double tval = s.theta->to_double(), bval = beta.to_double();
  auto closest = [](std::vector<cplx>& v, long double x) {
    std::sort(v.begin(), v.end(), [x](cplx a, cplx b) { return std::abs(a - x) < std::abs(b - x); });
  };
  closest(troots, tval);
  troots[0] = tval;
  const UPoly& g = beta.minimal_polynomial();
  NumPoly gp;
  for (const auto& c : g.coeffs()) gp.push_back(Num(c));
  std::vector<int> choice(d, 0);
  std::function<bool(int, Num&)> search = [&](int k, Num& out) -> bool {
    if (k == d) {
      // Solve Vandermonde system sum_i a_i T_k^i = B_k.
      std::vector<std::vector<cplx>> a(d, std::vector<cplx>(d + 1));
      for (int r = 0; r < d; ++r) {
        cplx pw = 1;
        for (int i = 0; i < d; ++i) {
          a[r][i] = pw;
          pw *= troots[r];
        }
        a[r][d] = r == 0 ? cplx(bval) : broots[choice[r]];
      }
      for (int col = 0; col < d; ++col) {
        int piv = col;
        for (int r = col + 1; r < d; ++r)
          if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        if (std::abs(a[col][col]) < 1e-30L) return false;
        for (int r = 0; r < d; ++r) {
          if (r == col) continue;
          cplx f = a[r][col] / a[col][col];
          for (int c = col; c <= d; ++c) a[r][c] -= f * a[col][c];
        }
      }
      std::vector<Rational> coords;
      for (int i = 0; i < d; ++i) {
        cplx v = a[i][d] / a[i][i];
        if (std::abs(v.imag()) > 1e-9L) return false;
        coords.push_back(rationalize(v.real()));
      }
      Num cand(coords);
      if (!eval(gp, cand).is_zero()) return false;
      if ((cand - Num(beta.lo())).sign() <= 0 || (cand - Num(beta.hi())).sign() > 0) return false;
      out = cand;
      return true;
    }
    for (int j = 0; j < e; ++j) {
      choice[k] = j;
      if (search(k + 1, out)) return true;
    }
    return false;
  };
  Num out;
  if (search(1, out)) return out;
  fail(ErrorCode::UnsupportedTower, "value " + beta.to_string() + " is not in Q(theta)");
}

Num nth_root(const Num& c, long k) {
  if (k <= 0) fail(ErrorCode::DomainError, "root index must be positive");
  if (c.sign() <= 0) fail(ErrorCode::NegativeLeadCoefficient, "no positive real root of a non-positive value");
  if (k == 1) return c;
  if (c.is_rational()) {
    Rational r = c.rational();
    Integer n = r.get_num(), d = r.get_den(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) && mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k)) return Num(Rational(rn, rd));
  }
  NumPoly p(k + 1);
  p[0] = -c;
  p[k] = Num(1);
  for (const auto& r : real_roots(p))
    if (r.sign() > 0) return embed(r);
  fail(ErrorCode::Internal, "positive root not found");
}

Num rational_power(const Num& c, const Rational& e) {
  Integer q = e.get_den(), p = e.get_num();
  Num base = q == 1 ? c : nth_root(c, q.get_si());
  return base.pow(p.get_si());
}

}  // namespace orbitx
