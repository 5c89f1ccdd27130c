#include <random>

#include "doctest.h"
#include "field_corpus.hpp"
#include "orbitx/elementary.hpp"
#include "orbitx/errors.hpp"
#include "orbitx/session.hpp"

using namespace orbitx;
using corpus::pw;

namespace {

const BiPoly X = BiPoly::x(), Y = BiPoly::y();
Series M(const ConstantExpr& c, const Exponent& a, const Exponent& b = 0) { return Series::monomial(c, a, b); }

bool tangent(const VectorField& v, const OrbitSeed& s, const Exponent& order) {
  Series r = tangency_residual(v, s.series);
  return r.is_zero() && r.order() && *r.order() >= order - 1;
}

BiPoly random_tail(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), keep(0, 2);
  BiPoly p;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j)
      if (i + j >= 2 && keep(rng) == 0) p += BiPoly::monomial(coef(rng), i, j);
  return p;
}

}  // namespace

TEST_CASE("regular orbits") {
  Session s;
  SessionScope scope(s);
  CHECK(regular_orbit_series({1, Y}, 6).series.without_order().is_zero());
  CHECK(regular_orbit_series({1, X}, 6).series.without_order() == M(Rational(1, 2), 2));
  Series e = regular_orbit_series({1, X + Y}, 6).series.without_order();
  CHECK(e == M(Rational(1, 2), 2) + M(Rational(1, 6), 3) + M(Rational(1, 24), 4) + M(Rational(1, 120), 5));
  CHECK_THROWS_AS(regular_orbit_series({Y, 1}, 4), Error);
}

TEST_CASE("saddle separatrices") {
  Session s;
  SessionScope scope(s);
  CHECK(saddle_separatrix_series({X, -Y}, 5).kind == SeedKind::Trivial);
  CHECK(saddle_separatrix_series({X, -Y + pw(X, 2)}, 5).series.without_order() == M(Rational(1, 3), 2));
  CHECK(saddle_separatrix_series({X + pw(Y, 2), -Y}, 5).series.is_zero());
}

TEST_CASE("node families") {
  Session s;
  SessionScope scope(s);
  OrbitSeed jordan = node_orbit_family({X, X + Y}, 5);
  REQUIRE(jordan.free_constants.size() == 1);
  ConstantExpr c = ConstantExpr::symbol(jordan.free_constants[0]);
  CHECK(jordan.kind == SeedKind::NodeLog);
  CHECK(jordan.series.without_order() == M(c, 1) + M(-1, 1, -1));
  OrbitSeed res = node_orbit_family({X, 2 * Y + pw(X, 2)}, 5);
  ConstantExpr c2 = ConstantExpr::symbol(res.free_constants[0]);
  CHECK(res.series.without_order() == M(c2, 2) + M(-1, 2, -1));
  CHECK(tangent({X, 2 * Y + pw(X, 2)}, res, 5));
}

TEST_CASE("irrational node ratio") {
  Session s;
  SessionScope scope(s);
  Num r2 = embed(RealAlgebraic(UPoly({-2, 0, 1}), 1, 2));
  OrbitSeed seed = node_orbit_family({X, BiPoly(ConstantExpr(r2)) * Y}, 5);
  CHECK(seed.kind == SeedKind::NodePower);
  ConstantExpr c = ConstantExpr::symbol(seed.free_constants[0]);
  CHECK(seed.series.without_order() == M(c, exponent_of(r2)));
}

TEST_CASE("center manifolds") {
  Session s;
  SessionScope scope(s);
  OrbitSeed cm = center_manifold_series({pw(X, 2), -Y + X}, 6);
  CHECK(cm.kind == SeedKind::CenterFormal);
  CHECK(cm.series.without_order() == M(1, 1) + M(-1, 2) + M(2, 3) + M(-6, 4) + M(24, 5));
  CHECK(center_manifold_series({pw(X, 2), -Y}, 5).series.is_zero());
  CHECK(center_manifold_series({pw(X, 2), Y}, 5).series.is_zero());
}

TEST_CASE("terminal branches of the corpus") {
  for (const auto& e : corpus::fields()) {
    Session s;
    SessionScope scope(s);
    CAPTURE(e.name);
    SingularityClass cls = classify_singularity(e.field);
    if (!cls.is_elementary()) continue;
    auto branches = orbit_branches(e.field, cls, DivisorLines{});
    CHECK_FALSE(branches.empty());
    for (const auto& b : branches) {
      OrbitSeed seed = solve_branch(e.field, b, 5);
      CHECK(tangent(linear_change(e.field, b.chart), seed, 5));
      bool family = seed.kind == SeedKind::NodePower || seed.kind == SeedKind::NodeLog;
      CHECK(seed.free_constants.size() == (family ? 1u : 0u));
    }
  }
}

TEST_CASE("tangency on random elementary fields") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(2, 4);
  for (int i = 0; i < 60; ++i) {
    Session s;
    SessionScope scope(s);
    VectorField v;
    OrbitSeed seed;
    switch (i % 3) {
      case 0:
        v = {X + random_tail(rng), -pick(rng) * Y + random_tail(rng)};
        seed = saddle_separatrix_series(v, 5);
        break;
      case 1:
        v = {X + random_tail(rng), pick(rng) * Y + random_tail(rng)};
        seed = node_orbit_family(v, 5);
        break;
      default:
        v = {pw(X, 2) + X * Y * random_tail(rng), -Y + random_tail(rng)};
        seed = center_manifold_series(v, 5);
        break;
    }
    CAPTURE(v.X.to_string());
    CAPTURE(v.Y.to_string());
    CHECK(tangent(v, seed, 5));
  }
}
