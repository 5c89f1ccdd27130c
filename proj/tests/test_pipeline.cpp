#include <cmath>

#include "doctest.h"
#include "field_corpus.hpp"
#include "orbitx/errors.hpp"
#include "orbitx/pipeline.hpp"
#include "orbitx/session.hpp"

using namespace orbitx;
using corpus::pw;

namespace {

const BiPoly X = BiPoly::x(), Y = BiPoly::y();
Series M(const ConstantExpr& c, const Exponent& a, const Exponent& b = 0) { return Series::monomial(c, a, b); }

BlowUpChain chain_of(std::vector<BlowUpStep> steps) {
  BlowUpChain c;
  c.steps = std::move(steps);
  return c;
}

bool vanishes(const Series& r) { return r.is_zero(); }

// Support conditions of each case.
bool support_fits(const ExpansionResult& r) {
  for (const auto& [k, c] : r.series.terms()) {
    bool logs = k.beta != 0 || k.gamma != 0;
    if (r.case_tag != CaseTag::III && logs) return false;
    if (r.case_tag == CaseTag::I && !k.alpha.is_rational()) return false;
    if (k.alpha.is_rational() && Rational(k.alpha.r * r.n).get_den() != 1) return false;
    if (Rational(k.beta.r * r.n).get_den() != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parametric_orbit folds the chain") {
  Session s;
  SessionScope scope(s);
  Series u = Series::x();
  ParametricOrbit p = parametric_orbit(chain_of({{StepKind::Bv, {}, 0}}), u, u);
  CHECK(p.X_of_u == u);
  CHECK(p.Y_of_u == M(1, 2));
  ConstantExpr c = ConstantExpr::symbol("c1");
  CHECK(parametric_orbit(chain_of({{StepKind::Bv, {}, 0}}), u, u.scaled(c)).Y_of_u == M(c, 2));
  p = parametric_orbit(chain_of({{StepKind::Bv, {}, 0}, {StepKind::Tv, 1, 0}}), u, M(1, 2));
  CHECK(p.Y_of_u == u + M(1, 3));
}

TEST_CASE("shape pairs") {
  Session s;
  SessionScope scope(s);
  Series u = Series::x();
  auto c1 = classify_series_shape({u, M(1, 2)});
  CHECK(c1.first.shape == Shape::C1);
  CHECK(c1.second->shape == Shape::C1);
  Num r2 = embed(RealAlgebraic(UPoly({-2, 0, 1}), 1, 2));
  Exponent lam = exponent_of(r2);
  auto c2 = classify_series_shape({u + M(1, lam), M(1, lam)});
  CHECK(c2.first.shape == Shape::C2);
  CHECK(c2.second->shape == Shape::C2);
  Series ln = Series::ln_x();
  auto c34 = classify_series_shape({M(1, 2) + M(1, 3) * ln, u * ln * (1 + u)});
  CHECK(c34.first.shape == Shape::C3);
  CHECK(c34.second->shape == Shape::C4);
  CHECK_THROWS_AS(classify_series_shape({u * ln, M(1, lam)}), Error);
}

TEST_CASE("compose_expansion") {
  Session s;
  SessionScope scope(s);
  Series u = Series::x();
  ExpansionResult r = compose_expansion({u, M(1, 2)}, 5);
  CHECK(r.series.without_order() == M(1, 2));
  CHECK(r.case_tag == CaseTag::I);

  Num r2 = embed(RealAlgebraic(UPoly({-2, 0, 1}), 1, 2));
  Exponent lam = exponent_of(r2);
  ParametricOrbit par{u + M(1, lam), M(1, lam)};
  r = compose_expansion(par, 3);
  CHECK(r.case_tag == CaseTag::II);
  auto it = r.series.terms().begin();
  CHECK(it->first.alpha == lam);
  ++it;
  CHECK(it->first.alpha == lam * Exponent(2) - 1);
  CHECK(it->second == ConstantExpr(-r2));
  CHECK(vanishes(compose(r.series, par.X_of_u, 3) - par.Y_of_u.truncated(3)));
}

TEST_CASE("compose_expansion with logarithms against a numeric inverse") {
  Session s;
  SessionScope scope(s);
  Series u = Series::x();
  ParametricOrbit par{-(u * Series::ln_x()), u};
  ExpansionResult r = compose_expansion(par, 2);
  CHECK(r.case_tag == CaseTag::III);
  CHECK(r.series.lead_key().alpha == Exponent(1));
  CHECK(r.series.lead_key().beta == Exponent(1));
  long double x = 1e-6L, v = x;
  for (int i = 0; i < 200; ++i) v = x / -std::log(v);
  long double ell = -1 / std::log(x), y = 0;
  for (const auto& [k, c] : r.series.terms())
    y += c.constant_value().to_double() * std::pow(x, (long double)k.alpha.r.get_d()) *
         std::pow(ell, (long double)k.beta.r.get_d()) * std::pow(std::log(ell), (long double)k.gamma);
  CHECK(std::fabs(y - v) / v < 1e-4);
}

TEST_CASE("expand_orbit: golden fields") {
  {
    Session s;
    SessionScope scope(s);
    ExpansionResult r = expand_orbit({X, X + Y}, {}, 3);
    ConstantExpr c = ConstantExpr::symbol("c1");
    CHECK(r.series.without_order() == M(c, 1) + M(-1, 1, -1));
    CHECK(r.case_tag == CaseTag::III);
    CHECK(r.free_constants == std::vector<std::string>{"c1"});
  }
  {
    Session s;
    SessionScope scope(s);
    ExpansionResult r = expand_orbit({Y, pw(X, 2)}, {}, 3);
    CHECK(r.case_tag == CaseTag::I);
    CHECK(r.n == 2);
    CHECK(r.series.lead_key().alpha == Exponent(Rational(3, 2)));
    Num lead = r.series.lead_coeff().constant_value();
    CHECK(lead * lead == Num(Rational(2, 3)));
    CHECK(lead.sign() > 0);
  }
  {
    Session s;
    SessionScope scope(s);
    Num r2 = embed(RealAlgebraic(UPoly({-2, 0, 1}), 1, 2));
    ExpansionResult r = expand_orbit({X, BiPoly(ConstantExpr(r2)) * Y}, {}, 3);
    CHECK(r.case_tag == CaseTag::II);
    CHECK(r.series.without_order() == M(ConstantExpr::symbol("c1"), exponent_of(r2)));
  }
  {
    Session s;
    SessionScope scope(s);
    ExpansionResult r = expand_orbit({pw(X, 2), -Y + X}, {}, 4);
    CHECK(r.seed.kind == SeedKind::CenterFormal);
    CHECK(r.series.without_order() == M(1, 1) + M(-1, 2) + M(2, 3));
  }
}

TEST_CASE("expand_orbit: errors and sides") {
  Session s;
  SessionScope scope(s);
  CHECK_THROWS_WITH_AS(expand_orbit({X, 1}, {}, 3), doctest::Contains("OrbitIsYAxis"), Error);
  CHECK_THROWS_WITH_AS(expand_orbit({-Y, X}, {}, 3), doctest::Contains("NoCharacteristicOrbit"), Error);
  CHECK_THROWS_WITH_AS(expand_orbit({pw(X, 2), pw(Y, 2)}, {}, 3), doctest::Contains("AmbiguousBranch"), Error);
  ExpansionResult up = expand_orbit({Y, pw(X, 2)}, Selector{{}, 1}, 3);
  ExpansionResult down = expand_orbit({Y, pw(X, 2)}, Selector{{}, -1}, 3);
  CHECK(up.series == -down.series);
  ExpansionResult neg = expand_orbit({X, -Y + pw(X, 2)}, {}, 4, Side::Negative);
  CHECK(neg.series.without_order() == M(Rational(1, 3), 2));
}

TEST_CASE("master tangency and case soundness on the corpus") {
  auto cases = corpus::expansions();
  CHECK(cases.size() >= 15);
  for (const auto& e : cases) {
    Session s;
    SessionScope scope(s);
    CAPTURE(e.name);
    ExpansionResult r = expand_orbit(e.field, Selector{e.path, 0}, 5);
    CHECK(r.validation.passed);
    CHECK(r.validation.tangency_order >= Exponent(5) - r.validation.slack);
    CHECK(support_fits(r));
    // Parametrization tangency at every depth of the chain.
    auto [xm, ym] = terminal_parametrization(r.branch, r.seed);
    for (size_t k = r.chain.steps.size() + 1; k-- > 0;) {
      BlowUpChain tail;
      tail.steps.assign(r.chain.steps.begin() + k, r.chain.steps.end());
      const VectorField& f = k == r.chain.steps.size() ? r.chain.terminal : r.chain.fields_along[k];
      CHECK(vanishes(parametric_residual(f, parametric_orbit(tail, xm, ym))));
    }
  }
}
