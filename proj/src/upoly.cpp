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

#include "orbitx/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "orbitx/errors.hpp"

namespace orbitx {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Rational& r) { return UPoly({-r, Rational(1)}); }

void UPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lc();
  return inv * *this;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : c_) den = lcm(den, Integer(c.get_den()));
  std::vector<Rational> v;
  Integer g = 0;
  for (const auto& c : c_) {
    Rational s = c * den;
    v.push_back(s);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (c_.back() < 0) g = -g;
  for (auto& x : v) x /= g;
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.c_;
  std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
  const Rational inv = 1 / b.lc();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational f = r[i] * inv;
    q[i - b.degree()] = f;
    if (f == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i - b.degree() + j] -= f * b.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 0) return monic();
  UPoly g = gcd(*this, derivative());
  return (*this / g).monic();
}

UPoly UPoly::shifted(const Rational& shift) const {
  // Horner in polynomial arithmetic.
  UPoly acc;
  UPoly lin({shift, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly::constant(*it);
  return acc;
}

UPoly UPoly::scaled(const Rational& s) const {
  std::vector<Rational> v = c_;
  Rational p = 1;
  for (auto& x : v) {
    x *= p;
    p *= s;
  }
  return UPoly(std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps sign variations unchanged.
    Rational s = abs(r.lc());
    seq.push_back((1 / s) * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<UPoly>& seq, const Rational& t) {
  int count = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.eval(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Simplest rational (least denominator) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  Rational r = fl + 1 / inner;
  r.canonicalize();
  return r;
}

}  // namespace

int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi) {
  UPoly sf = p.squarefree_part();
  auto seq = sturm_sequence(sf);
  return variations(seq, lo) - variations(seq, hi);
}

Rational root_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.lc())));
  return m + 1;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "rational_roots of zero polynomial");
  std::vector<Rational> roots;
  UPoly q = p.squarefree_part();
  if (q.degree() <= 0) return roots;
  if (q.coeff(0) == 0) {
    roots.push_back(0);
    q = q / UPoly({Rational(0), Rational(1)});
  }
  if (q.degree() >= 1) {
    // Isolate, then shrink each interval below 1/(2 lc^2): a rational root
    // p/r with r | lc is then the simplest rational inside.
    UPoly z = q.primitive();
    auto seq = sturm_sequence(z);
    Rational lcv = abs(z.lc());
    Rational target = 1 / (2 * lcv * lcv);
    Rational b = root_bound(z);
    std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int n = variations(seq, lo) - variations(seq, hi);
      if (n == 0) continue;
      if (n > 1) {
        Rational mid = (lo + hi) / 2;
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
        continue;
      }
      while (hi - lo >= target) {
        Rational mid = (lo + hi) / 2;
        if (variations(seq, lo) - variations(seq, mid) == 1) hi = mid;
        else lo = mid;
      }
      Rational r = simplest_between(lo, hi);
      if (r > lo && z.eval(r) == 0) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::pair<Rational, Rational> interval_eval(const UPoly& p, const Rational& lo, const Rational& hi) {
  Rational a = 0, b = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    Rational c1 = a * lo, c2 = a * hi, c3 = b * lo, c4 = b * hi;
    Rational mn = std::min({c1, c2, c3, c4});
    Rational mx = std::max({c1, c2, c3, c4});
    a = mn + *it;
    b = mx + *it;
  }
  return {a, b};
}

}  // namespace orbitx
