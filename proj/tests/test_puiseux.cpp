#include <cmath>
#include <random>

#include "doctest.h"
#include "orbitx/errors.hpp"
#include "orbitx/puiseux.hpp"

using namespace orbitx;

namespace {

BiPoly X = BiPoly::x(), Y = BiPoly::y();
BiPoly C(long c) { return BiPoly(c); }
BiPoly pw(const BiPoly& p, int n) {
  BiPoly r(1);
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}
Series S(const Rational& c, const Rational& a) { return Series::monomial(c, a); }

bool residual_ok(const BiPoly& f, const PuiseuxBranch& b, const Exponent& order) {
  Series r = f.eval(Series::x(), b.series);
  return r.truncated(order).is_zero();
}

long double eval_branch(const Series& s, long double x) {
  long double v = 0;
  for (const auto& [k, c] : s.terms()) v += c.constant_value().to_double() * std::pow(x, (long double)k.alpha.r.get_d());
  return v;
}

UPoly at_x(const BiPoly& f, const Rational& x0) {
  std::vector<Rational> c(f.degree_y() + 1);
  for (const auto& [k, v] : f.terms()) {
    Rational t = v.constant_value().rational();
    for (int i = 0; i < k.first; ++i) t *= x0;
    c[k.second] += t;
  }
  return UPoly(c);
}

}  // namespace

TEST_CASE("newton_polygon") {
  Session s;
  SessionScope scope(s);
  auto e1 = newton_polygon(pw(Y, 2) - pw(X, 3));
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].slope == Rational(3, 2));
  auto e2 = newton_polygon(pw(Y, 2) - pw(X, 2) - pw(X, 3));
  REQUIRE(e2.size() == 1);
  CHECK(e2[0].slope == 1);
  auto e3 = newton_polygon(pw(Y, 2) - (X + pw(X, 2)) * Y + pw(X, 3));
  REQUIRE(e3.size() == 2);
  CHECK(e3[0].slope == 1);
  CHECK(e3[1].slope == 2);
  CHECK_THROWS_AS(newton_polygon(BiPoly()), Error);
}

TEST_CASE("puiseux_branches examples") {
  Session s;
  SessionScope scope(s);
  auto b1 = puiseux_branches(Y - X, 5);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].series == Series::x());

  auto b2 = puiseux_branches(pw(Y, 2) - pw(X, 3), 4);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].series == S(-1, Rational(3, 2)));
  CHECK(b2[1].series == S(1, Rational(3, 2)));
  CHECK(b2[1].n == 2);

  // x sqrt(1 + x): binomial coefficients of (1+x)^{1/2}
  BiPoly f = pw(Y, 2) - pw(X, 2) - pw(X, 3);
  auto b3 = puiseux_branches(f, 5);
  REQUIRE(b3.size() == 2);
  Series expect;
  Rational binom = 1;
  for (int k = 0; k < 4; ++k) {
    expect += S(binom, k + 1);
    binom = binom * (Rational(1, 2) - k) / (k + 1);
  }
  CHECK(b3[1].series == expect.truncated(5));
  CHECK(b3[0].series == (-expect).truncated(5));
  for (const auto& b : b3) CHECK(residual_ok(f, b, 5));

  // no real branches; y = 0 line counted once
  CHECK(puiseux_branches(pw(Y, 2) + pw(X, 2), 3).empty());
  auto b4 = puiseux_branches(Y * (pw(Y, 2) - X), 3);
  CHECK(b4.size() == 3);
  // negative side of y^2 = x^3 has no real branch
  CHECK(puiseux_branches(pw(Y, 2) - pw(X, 3), 4, Side::Negative).empty());
  CHECK(puiseux_branches(pw(Y, 2) + pw(X, 3), 4, Side::Negative).size() == 2);
}

TEST_CASE("multiplicities from the square-free decomposition") {
  Session s;
  SessionScope scope(s);
  BiPoly f = pw(Y - X, 2) * (Y + X);
  auto dec = squarefree_decomposition_in_y(f);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].second == 2);
  auto b = puiseux_branches(f, 3);
  REQUIRE(b.size() == 2);
  CHECK(b[0].multiplicity == 1);
  CHECK(b[1].multiplicity == 2);
  CHECK(b[1].series == Series::x());
}

TEST_CASE("isocline_branches") {
  Session s;
  SessionScope scope(s);
  Isoclines i1 = isocline_branches({X, Y}, 3);
  CHECK(i1.vertical_y_axis);
  CHECK(i1.vertical.empty());
  REQUIRE(i1.horizontal.size() == 1);
  CHECK(i1.horizontal[0].series.is_zero());

  Isoclines i2 = isocline_branches({pw(X, 2) - Y, X}, 3);
  REQUIRE(i2.vertical.size() == 1);
  CHECK(i2.vertical[0].series == S(1, 2));
  CHECK(i2.horizontal_y_axis);

  Isoclines i3 = isocline_branches({pw(Y, 2) - pw(X, 3), Y}, 3);
  CHECK(i3.vertical.size() == 2);
  REQUIRE(i3.horizontal.size() == 1);
  CHECK(i3.horizontal[0].series.is_zero());
}

TEST_CASE("random curves: residuals and real-root oracle") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), keep(0, 2);
  std::vector<BiPoly> curves{pw(Y, 2) - pw(X, 3), pw(Y, 2) - pw(X, 4) - pw(X, 5), pw(Y, 2) - pw(X, 2) - pw(X, 3)};
  int done = 0, attempts = 0;
  while (done < 33 && attempts < 400) {
    ++attempts;
    BiPoly f;
    if (done < 3) {
      f = curves[done];
    } else {
      for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j)
          if ((i || j) && keep(rng) == 0) f += BiPoly::monomial(coef(rng), i, j);
      if (f.degree_y() <= 0 || f.coeff(0, 1).is_zero() == f.coeff(0, 2).is_zero()) continue;
    }
    Session s;
    SessionScope scope(s);
    std::vector<PuiseuxBranch> branches;
    try {
      branches = puiseux_branches(f, 8);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnsupportedTower) continue;
      throw;
    }
    ++done;
    long n = 1;
    for (const auto& b : branches) {
      CHECK(residual_ok(f, b, 8));
      n = std::lcm(n, b.n);
    }
    // x0 = 2^{-n q} ~ 1e-6, so every branch exponent gives a dyadic power
    long q = (20 + n - 1) / n;
    Rational x0 = Rational(1, Integer(1) << (n * q));
    UPoly p = at_x(squarefree_in_y(f), x0);
    Rational delta(1, 20);
    int real_near_zero = sturm_count(p, -delta, delta);
    int counted = 0;
    for (const auto& b : branches) {
      long double yv = eval_branch(b.series, x0.get_d());
      if (b.series.is_zero()) {
        CHECK(p.eval(0) == 0);
      } else {
        Rational y(static_cast<double>(yv));
        Rational eps = abs(y) / Integer("10000000000");
        CHECK(sgn(p.eval(y - eps)) * sgn(p.eval(y + eps)) <= 0);
      }
      ++counted;
    }
    CHECK(counted == real_near_zero);
  }
  CHECK(done == 33);
}
