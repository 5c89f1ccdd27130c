#include <string>

#include "doctest.h"
#include "field_corpus.hpp"
#include "orbitx/errors.hpp"
#include "orbitx/format.hpp"

using namespace orbitx;
using corpus::pw;

namespace {

BiPoly X = BiPoly::x(), Y = BiPoly::y();

std::string parse_error(const std::string& text) {
  try {
    parse_field(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_field examples") {
  Session s;
  SessionScope scope(s);
  CHECK(parse_field("X = x; Y = x + y;") == VectorField{X, X + Y});
  CHECK(parse_field("X = y; Y = x^2;") == VectorField{Y, pw(X, 2)});
  CHECK(parse_field("Y = -(y - x)*2/4\n; X = 3/2 * x^(2)") ==
        VectorField{BiPoly(ConstantExpr(Rational(3, 2))) * pw(X, 2), BiPoly(ConstantExpr(Rational(1, 2))) * (X - Y)});
}

TEST_CASE("parse_field with a generator") {
  Session s;
  SessionScope scope(s);
  VectorField v = parse_field("theta: t^2 - 2, [1, 2];\nX = x; Y = theta*y;");
  REQUIRE(s.theta);
  CHECK(v.X == X);
  Num th = Num::theta();
  CHECK(th * th == Num(2));
  CHECK(v.Y == BiPoly(ConstantExpr(th)) * Y);
}

TEST_CASE("parse errors carry positions") {
  Session s;
  SessionScope scope(s);
  CHECK(parse_error("X = x +; Y = y;").find("line 1, column 8") != std::string::npos);
  CHECK(parse_error("X = x;\nY = z;").find("line 2, column 5") != std::string::npos);
  CHECK(parse_error("X = x;").find("both") != std::string::npos);
  CHECK(parse_error("X = x; X = y; Y = y;").find("once") != std::string::npos);
  CHECK(parse_error("X = theta*x; Y = y;").find("generator") != std::string::npos);
  CHECK(parse_error("X = x/y; Y = y;").find("non-constant") != std::string::npos);
  CHECK(parse_error("X = x $ y; Y = y;").find("unexpected character") != std::string::npos);
  CHECK(parse_error("theta: t^2-2, [1,2]; theta: t^2-3, [1,2]; X = x; Y = y;").find("towers") != std::string::npos);
}

TEST_CASE("constant and exponent literals") {
  Session s;
  SessionScope scope(s);
  ConstantExpr c = parse_constant("2*c1 - 3/4*log(6) + c2^2");
  CHECK(parse_constant(c.to_string()) == c);
  CHECK(parse_exponent("3/2") == Exponent(Rational(3, 2)));
  CHECK_THROWS_AS(parse_exponent("lam"), Error);
}

TEST_CASE("latex golden forms") {
  {
    Session s;
    SessionScope scope(s);
    ExpansionResult r = expand_orbit({X, X + Y}, {}, 3);
    CHECK(format_latex(r) == "y = c\\,x + x\\ln x + O(x^{3})\n% case iii, n = 1\n");
  }
  {
    Session s;
    SessionScope scope(s);
    ExpansionResult r = expand_orbit({X, 2 * Y + pw(X, 2)}, {}, 3);
    CHECK(format_series_latex(r.series) == "c\\,x^{2} + x^{2}\\ln x + O(x^{3})");
  }
}

TEST_CASE("human output") {
  Session s;
  SessionScope scope(s);
  ExpansionResult r = expand_orbit({Y, pw(X, 2)}, {}, 3);
  std::string h = format_human(r);
  CAPTURE(h);
  CHECK(h.rfind("y = sqrt(2/3) x^(3/2)", 0) == 0);
  CHECK(h.find("case: i\n") != std::string::npos);
  CHECK(h.find("ramification n: 2") != std::string::npos);
}

TEST_CASE("json round trip is byte-identical on the corpus") {
  for (const auto& e : corpus::expansions()) {
    Session s;
    SessionScope scope(s);
    CAPTURE(e.name);
    ExpansionResult r = expand_orbit(e.field, {e.path}, 4);
    std::string a = format_json(r);
    std::string b = reformat_json(a);
    CHECK(a == b);
    CHECK(reformat_json(b) == b);
  }
  {
    Session s;
    SessionScope scope(s);
    VectorField v = parse_field("theta: t^2 - 2, [1, 2]; X = x; Y = theta*y;");
    ExpansionResult r = expand_orbit(v, {}, 3);
    std::string a = format_json(r);
    CHECK(a.find("\"lambda\"") != std::string::npos);
    CHECK(reformat_json(a) == a);
  }
  CHECK_THROWS_AS(reformat_json("{"), Error);
  CHECK_THROWS_AS(reformat_json("{\"schema\": \"v0\"}"), Error);
}
