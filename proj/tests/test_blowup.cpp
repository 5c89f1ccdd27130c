#include <functional>
#include <random>

#include "doctest.h"
#include "field_corpus.hpp"
#include "orbitx/blowup.hpp"
#include "orbitx/errors.hpp"
#include "orbitx/session.hpp"

using namespace orbitx;
using corpus::pw;

namespace {

const BiPoly X = BiPoly::x(), Y = BiPoly::y();

VectorField step(const VectorField& v, StepKind kind, const Num& offset = 0) {
  BlowUpStep s{kind, offset, 0};
  return apply_step(v, s);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// Every selector path from the origin, depth first.
void explore(const VectorField& v, std::vector<int> path, std::vector<BlowUpChain>& out) {
  try {
    out.push_back(desingularize_along(v, Selector{path, 0}, 6));
    return;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AmbiguousBranch) throw;
  }
  for (int i = 0;; ++i) {
    std::vector<int> next = path;
    next.push_back(i);
    try {
      desingularize_along(v, Selector{next, 0}, 6);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Usage) break;
    }
    explore(v, next, out);
  }
}

}  // namespace

TEST_CASE("apply_step: hand pull-backs") {
  CHECK(step({X, Y}, StepKind::Bv) == VectorField{X, 0});
  CHECK(step({Y, pw(X, 2)}, StepKind::Bv) == VectorField{X * Y, X - pw(Y, 2)});
  BlowUpStep s{StepKind::Bv, {}, 0};
  CHECK(apply_step({pw(X, 2), X * Y}, s) == VectorField{X, 0});
  CHECK(s.divided == 1);
  CHECK(step({Y, X}, StepKind::Tv, 2) == VectorField{Y + 2, X});
  CHECK(code_of([] { step({1 + X, Y}, StepKind::Bv); }) == ErrorCode::NotSingular);
}

TEST_CASE("divisor singularities") {
  auto pts = divisor_singularities({X * Y, X - pw(Y, 2)}, StepKind::Bv);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == Num(0));
  pts = divisor_singularities({X, Y * (Y - 1)}, StepKind::Bv);
  REQUIRE(pts.size() == 2);
  CHECK(pts[1] == Num(1));
  CHECK(divisor_singularities({X, 1 + pw(Y, 2)}, StepKind::Bv).empty());
  CHECK(code_of([] { divisor_singularities({X, 0}, StepKind::Bv); }) == ErrorCode::DivisorIsSingularLine);
  pts = divisor_singularities({X * (X - 3), Y}, StepKind::Bh);
  REQUIRE(pts.size() == 2);
  CHECK(pts[1] == Num(3));
}

TEST_CASE("classify_singularity") {
  auto node = classify_singularity({X, 2 * Y});
  CHECK(node.tag == SingularityTag::HyperbolicNode);
  CHECK(node.ratio() == Num(2));
  CHECK(classify_singularity({X, -Y}).tag == SingularityTag::HyperbolicSaddle);
  CHECK(classify_singularity({Y, pw(X, 2)}).tag == SingularityTag::Nilpotent);
  auto semi = classify_singularity({pw(X, 2), Y});
  CHECK(semi.tag == SingularityTag::SemiHyperbolic);
  CHECK(semi.mu2 == Num(1));
  CHECK(classify_singularity({pw(X, 2), pw(Y, 2)}).tag == SingularityTag::FullNull);
  CHECK(classify_singularity({-Y, X}).tag == SingularityTag::HyperbolicFocus);
  CHECK(classify_singularity({1, X}).tag == SingularityTag::Nonsingular);
  auto moved = classify_singularity({X - 1, Y}, 1, 0);
  CHECK(moved.tag == SingularityTag::HyperbolicNode);
  CHECK(moved.scalar);
}

TEST_CASE("characteristic directions") {
  auto d = characteristic_directions({X, -Y});
  REQUIRE(d.slopes.size() == 1);
  CHECK(d.slopes[0] == RealAlgebraic(0));
  CHECK(d.vertical);
  d = characteristic_directions({Y, pw(X, 2)});
  REQUIRE(d.slopes.size() == 1);
  CHECK_FALSE(d.vertical);
  CHECK(code_of([] { characteristic_directions({X, Y}); }) == ErrorCode::DicriticalDivisor);
}

TEST_CASE("desingularize_along: examples") {
  BlowUpChain cusp = desingularize_along({Y, pw(X, 2)}, {}, 6);
  CHECK(cusp.depth() <= 4);
  CHECK(cusp.terminal_class.is_elementary());
  REQUIRE(cusp.steps.size() >= 2);
  CHECK(cusp.fields_along[1] == VectorField{X * Y, X - pw(Y, 2)});

  BlowUpChain node = desingularize_along({X, X + Y}, {}, 6);
  CHECK(node.steps.empty());
  CHECK(node.terminal_class.tag == SingularityTag::HyperbolicNode);
  CHECK(node.terminal_class.ratio() == Num(1));

  CHECK(desingularize_along({pw(X, 2), Y}, {}, 6).steps.empty());
  CHECK(code_of([] { desingularize_along({Y, pw(X, 2)}, {}, 1); }) == ErrorCode::DepthExceeded);
  CHECK(code_of([] { desingularize_along({Y, pw(X, 2)}, Selector{{5}, 0}, 6); }) == ErrorCode::Usage);
}

TEST_CASE("pull-back identity on random fields") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4), keep(0, 2);
  const StepKind kinds[] = {StepKind::Bv, StepKind::Bh, StepKind::Tv, StepKind::Th};
  int checked = 0;
  while (checked < 200) {
    VectorField v;
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j) {
        if (keep(rng) == 0) v.X += BiPoly::monomial(coef(rng), i, j);
        if (keep(rng) == 0) v.Y += BiPoly::monomial(coef(rng), i, j);
      }
    StepKind kind = kinds[checked % 4];
    if (kind == StepKind::Bv || kind == StepKind::Bh) {
      v.X = v.X - BiPoly(v.X.coeff(0, 0));
      v.Y = v.Y - BiPoly(v.Y.coeff(0, 0));
    }
    if (v.X.is_zero() && v.Y.is_zero()) continue;
    BlowUpStep s{kind, Num(Rational(coef(rng) * 2 + 1, 3)), 0};
    VectorField after = apply_step(v, s);
    CHECK(pushforward_holds(v, s, after));
    ++checked;
  }
}

TEST_CASE("corpus: every branch terminates elementary within depth 6") {
  for (const auto& e : corpus::fields()) {
    CAPTURE(e.name);
    Session session;
    SessionScope scope(session);
    std::vector<BlowUpChain> chains;
    explore(e.field, {}, chains);
    CHECK_FALSE(chains.empty());
    for (const auto& c : chains) {
      CHECK(c.depth() <= 6);
      CHECK(c.terminal_class.is_elementary());
      REQUIRE(c.fields_along.size() == c.steps.size());
      VectorField cur = e.field;
      for (size_t k = 0; k < c.steps.size(); ++k) {
        CHECK(c.fields_along[k] == cur);
        BlowUpStep s = c.steps[k];
        VectorField next = apply_step(cur, s);
        CHECK(s.divided == c.steps[k].divided);
        CHECK(pushforward_holds(cur, s, next));
        cur = next;
      }
      CHECK(cur == c.terminal);
    }
  }
}
