// One line per acceptance criterion; exit status is nonzero if any fails.
// With "--artifacts DIR" the JSON results used by criterion 8 are also written
// to DIR, so separate runs can be compared byte for byte; "--only N" runs one
// criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "field_corpus.hpp"
#include "orbitx/errors.hpp"
#include "orbitx/format.hpp"
#include "orbitx/oracle.hpp"
#include "series_gen.hpp"

using namespace orbitx;
using corpus::pw;

namespace {

BiPoly X = BiPoly::x(), Y = BiPoly::y();

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

Series mono(const ConstantExpr& c, const Exponent& a, const Exponent& b = 0) { return Series::monomial(c, a, b); }

Outcome node_golden_forms() {
  Outcome out;
  struct Case {
    std::string name;
    std::function<VectorField()> field;
    std::function<Series()> expected;
    CaseTag tag;
  };
  ConstantExpr c = ConstantExpr::symbol("c1");
  std::vector<Case> cases{
      {"x d/dx + y d/dy", [] { return VectorField{X, Y}; }, [&] { return mono(c, 1); }, CaseTag::I},
      {"x d/dx + (x + y) d/dy", [] { return VectorField{X, X + Y}; },
       [&] { return mono(c, 1) + mono(-1, 1, -1); }, CaseTag::III},
      {"x d/dx + sqrt(2) y d/dy",
       [] {
         Num r2 = embed(real_root_isolate(UPoly(std::vector<Rational>{-2, 0, 1}))[1]);
         return VectorField{X, BiPoly(ConstantExpr(r2)) * Y};
       },
       [&] { return mono(c, Exponent::lambda()); }, CaseTag::II},
      {"x d/dx + (2y + x^2) d/dy", [] { return VectorField{X, 2 * Y + pw(X, 2)}; },
       [&] { return mono(c, 2) + mono(-1, 2, -1); }, CaseTag::III},
  };
  for (const auto& k : cases) {
    Session s;
    SessionScope scope(s);
    VectorField v = k.field();
    ExpansionResult r = expand_orbit(v, {}, 5);
    Series want = k.expected().truncated(5);
    out.require(r.series.truncated(5) == want, k.name + " gave " + r.series.to_string());
    out.require(r.series.order() && !(*r.series.order() < Exponent(5)), k.name + " order below 5");
    out.require(r.case_tag == k.tag, k.name + " tagged " + case_name(r.case_tag));
  }
  if (out.pass) out.detail = "cx (i), x(c+ln x) (iii), c x^sqrt2 (ii), x^2(c+ln x) (iii) to O(x^5)";
  return out;
}

Outcome master_tangency() {
  Outcome out;
  auto list = corpus::expansions();
  list.push_back({"irrational node (x, sqrt2 y)", {X, Y}, {}});  // field set below
  int checked = 0;
  for (size_t i = 0; i < list.size(); ++i) {
    Session s;
    SessionScope scope(s);
    VectorField v = list[i].field;
    if (i + 1 == list.size()) {
      Num r2 = embed(real_root_isolate(UPoly(std::vector<Rational>{-2, 0, 1}))[1]);
      v = {X, BiPoly(ConstantExpr(r2)) * Y};
    }
    const Exponent order = 5;
    ExpansionResult r = expand_orbit(v, {list[i].path}, order);
    Series res = tangency_residual(v, r.series);
    Exponent need = order - r.validation.slack;
    out.require(res.truncated(need).is_zero(), list[i].name + ": residual " + res.truncated(need).to_string());
    out.require(r.validation.passed, list[i].name + ": validation flag");
    ++checked;
  }
  if (out.pass) out.detail = std::to_string(checked) + " fields, residual valuation >= order - slack, symbolic constants";
  return out;
}

Series U(const Exponent& a, const ConstantExpr& c = 1, const Exponent& b = 0) { return Series::monomial(c, a, b); }
// u^i (ln u)^j, with ln u = -l^{-1}
Series ulog(const Rational& c, long i, int j) { return U(i, Rational(Rational(j % 2 ? -1 : 1) * c), -j); }

bool round_trip(const Series& a, const Exponent& order, Series* inverse) {
  Series b = invert(a, classify_shape(a), order);
  *inverse = b;
  Series r = compose(a, b, order) - Series::x();
  return r.is_zero() && (!r.order() || !(*r.order() < order));
}

Outcome inversion_round_trip() {
  Outcome out;
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-3, 3), pos(1, 3), deg(0, 2), kk(1, 2);
  auto rq = [&] {
    Rational q(coef(rng), pos(rng));
    q.canonicalize();
    return q;
  };
  int count[4] = {0, 0, 0, 0};
  for (int i = 0; i < 50; ++i) {
    Series inv;
    {
      Session s;
      SessionScope scope(s);
      Series c1 = U(1, Rational(pos(rng)));
      for (int p = 2; p <= 4; ++p) c1 += U(p, rq());
      out.require(classify_shape(c1).shape == Shape::C1 && round_trip(c1, Rational(7, 2), &inv), "C1 " + c1.to_string());
      ++count[0];
    }
    {
      Session s;
      SessionScope scope(s);
      exponent_of(embed(real_root_isolate(UPoly(std::vector<Rational>{-2, 0, 1}))[1]));
      Rational lam_coef = rq();
      if (lam_coef == 0) lam_coef = 1;
      Series c2 = U(1) + U(Exponent::lambda(), lam_coef) + U(Exponent(1, 1), rq()) + U(2, rq());
      out.require(classify_shape(c2).shape == Shape::C2 && round_trip(c2, 3, &inv), "C2 " + c2.to_string());
      ++count[1];
    }
    long k = kk(rng);
    {
      Session s;
      SessionScope scope(s);
      Series c3 = U(k, Rational(pos(rng)));
      for (long p = k + 1; p <= k + 2; ++p)
        for (int j = 0; j <= deg(rng); ++j) c3 += ulog(rq(), p, j);
      bool shape = classify_shape(c3).shape == Shape::C3 || !c3.has_logs();
      out.require(shape && round_trip(c3, Rational(5, 2), &inv), "C3 " + c3.to_string());
      // the inverse is w x^{1/k} + ... with ell-powers only, no ln ell
      out.require(!inv.is_zero() && inv.lead_key().alpha == Exponent(Rational(1, k)) && inv.lead_key().beta.is_zero(),
                  "C3 inverse lead " + inv.to_string());
      for (const auto& [key, c] : inv.terms())
        out.require(Rational(key.alpha.r * k).get_den() == 1 && key.beta.r <= 0 && key.gamma == 0,
                    "C3 inverse support " + inv.to_string());
      ++count[2];
    }
    {
      Session s;
      SessionScope scope(s);
      long rho = 1 + deg(rng) % 2;
      Series c4 = ulog(Rational(pos(rng)) * (rho % 2 ? -1 : 1), k, rho);
      for (int j = 0; j < rho; ++j) c4 += ulog(rq(), k, j);
      c4 += ulog(rq(), k + 1, deg(rng));
      out.require(classify_shape(c4).shape == Shape::C4 && round_trip(c4, Rational(3, 2), &inv), "C4 " + c4.to_string());
      out.require(!inv.is_zero() && inv.lead_key().alpha == Exponent(Rational(1, k)) &&
                      inv.lead_key().beta == Exponent(Rational(rho, k)),
                  "C4 inverse lead " + inv.to_string());
      ++count[3];
    }
  }
  if (out.pass)
    out.detail = "C1/C2/C3/C4: " + std::to_string(count[0]) + "/" + std::to_string(count[1]) + "/" +
                 std::to_string(count[2]) + "/" + std::to_string(count[3]) + " random series, lead-shape assertions hold";
  return out;
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

Outcome puiseux_back_substitution() {
  Outcome out;
  PrecisionScope prec(192);
  std::mt19937 rng(404);
  std::uniform_int_distribution<int> coef(-3, 3), keep(0, 2);
  std::vector<BiPoly> classics{pw(Y, 2) - pw(X, 3), pw(Y, 2) - pw(X, 4) - pw(X, 5), pw(Y, 2) - pw(X, 2) - pw(X, 3),
                               (Y - pw(X, 2)) * (Y + pw(X, 2) - pw(X, 3))};
  int random_done = 0, attempts = 0, branches_checked = 0;
  size_t classic = 0;
  const Exponent order = 8;
  while ((classic < classics.size() || random_done < 30) && attempts < 2000) {
    ++attempts;
    BiPoly f;
    bool is_classic = classic < classics.size();
    if (is_classic) {
      f = classics[classic++];
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
      branches = puiseux_branches(f, order);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnsupportedTower && !is_classic) continue;
      throw;
    }
    if (!is_classic) ++random_done;
    long n = 1;
    for (const auto& b : branches) {
      Series r = f.eval(Series::x(), b.series);
      out.require(r.truncated(order).is_zero(), "residual of " + f.to_string());
      n = std::lcm(n, b.n);
    }
    // Real roots of f(x0, y) near 0, isolated exactly and refined to 1e-40.
    long q = (20 + n - 1) / n;
    Rational x0 = Rational(1, Integer(1) << (n * q));
    UPoly p = at_x(squarefree_in_y(f), x0);
    Rational delta(1, 20);
    std::vector<BigFloat> roots;
    for (const auto& r : real_root_isolate(p)) {
      RealAlgebraic t = r.refined(Rational(1, Integer("10000000000000000000000000000000000000000")));
      Rational mid = (t.lo() + t.hi()) / 2;
      if (-delta < mid && mid < delta)
        roots.push_back(BigFloat(mid.get_num().get_str()) / BigFloat(mid.get_den().get_str()));
    }
    out.require(roots.size() == branches.size(), "branch count for " + f.to_string());
    BigFloat xb = BigFloat(x0.get_num().get_str()) / BigFloat(x0.get_den().get_str());
    for (const auto& b : branches) {
      BigFloat yb = eval_series(b.series.without_order(), xb);
      bool matched = false;
      for (const auto& r : roots)
        matched = matched || abs(r - yb) <= BigFloat("1e-10") * abs(yb) + BigFloat("1e-35");
      out.require(matched, "branch " + b.series.to_string() + " of " + f.to_string());
      ++branches_checked;
    }
  }
  out.require(random_done == 30, "only " + std::to_string(random_done) + " random curves");
  if (out.pass)
    out.detail = "4 classics + 30 random curves, " + std::to_string(branches_checked) +
                 " branches within 1e-10 of the real roots at x ~ 1e-6";
  return out;
}

Outcome numeric_slopes() {
  Outcome out;
  struct Case {
    std::string name;
    VectorField field;
    Exponent test_order;
  };
  std::vector<Case> cases{{"saddle y = x^2/3", {X, -Y + pw(X, 2)}, 2},
                          {"cusp y^2 = (2/3) x^3", {Y, pw(X, 2)}, Rational(3, 2)},
                          {"family y = x^2 (c + ln x)", {X, 2 * Y + pw(X, 2)}, 2}};
  std::ostringstream detail;
  for (const auto& k : cases) {
    Session s;
    SessionScope scope(s);
    ExpansionResult r = expand_orbit(k.field, {}, 4);
    SlopeOptions opt;
    opt.test_window = {1e-4, 1e-3};
    opt.test_order = k.test_order;
    SlopeReport rep = residual_slope(k.field, r.series, opt);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%.3f vs %.3f", detail.str().empty() ? "" : ", ", rep.slope, rep.predicted);
    detail << buf;
    out.require(rep.verdict == "pass", k.name + ": slope " + std::to_string(rep.slope) + ", predicted " +
                                           std::to_string(rep.predicted));
  }
  if (out.pass) out.detail = "slopes " + detail.str() + " at " + std::to_string(oracle_precision_bits()) + " bits";
  return out;
}

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

Outcome desingularization_audit() {
  Outcome out;
  int chains_seen = 0, steps_seen = 0, deepest = 0;
  for (const auto& e : corpus::fields()) {
    Session session;
    SessionScope scope(session);
    std::vector<BlowUpChain> chains;
    explore(e.field, {}, chains);
    out.require(!chains.empty(), e.name + ": no chain");
    for (const auto& c : chains) {
      ++chains_seen;
      deepest = std::max(deepest, c.depth());
      out.require(c.depth() <= 6 && c.terminal_class.is_elementary(), e.name + ": terminal not elementary");
      VectorField cur = e.field;
      for (const auto& recorded : c.steps) {
        BlowUpStep st = recorded;
        VectorField next = apply_step(cur, st);
        out.require(pushforward_holds(cur, st, next), e.name + ": push-forward identity");
        cur = next;
        ++steps_seen;
      }
      out.require(cur == c.terminal, e.name + ": replayed chain differs");
    }
  }
  if (out.pass)
    out.detail = std::to_string(chains_seen) + " chains, " + std::to_string(steps_seen) +
                 " exact push-forward identities, max depth " + std::to_string(deepest);
  return out;
}

Outcome series_kernel_algebra() {
  Outcome out;
  using orbitx::testing::equal_mod;
  using orbitx::testing::random_series;
  Session s;
  SessionScope scope(s);
  std::mt19937 rng(2027);
  int ring = 0, leibniz = 0;
  for (int i = 0; i < 200; ++i, ++ring) {
    Series a = random_series(rng), b = random_series(rng), c = random_series(rng);
    out.require(equal_mod((a + b) + c, a + (b + c)), "associativity of +");
    out.require(equal_mod((a * b) * c, a * (b * c)), "associativity of *");
    out.require(equal_mod(a * (b + c), a * b + a * c), "distributivity");
    out.require(a * b == b * a && a + b == b + a, "commutativity");
    out.require(equal_mod(a - a, Series(0) * a) && equal_mod(a * Series(1), a), "identities");
  }
  for (int i = 0; i < 200; ++i, ++leibniz) {
    Series a = random_series(rng), b = random_series(rng);
    out.require(equal_mod(derivative(a * b), derivative(a) * b + a * derivative(b)), "Leibniz");
    // l * ln x = -1 survives multiplication by arbitrary series
    Series ell = Series::monomial(1, 0, 1);
    out.require(equal_mod(a * ell * Series::ln_x(), -a), "l ln x = -1");
  }
  out.require(Series::monomial(1, 0, 1) * Series::ln_x() == Series(-1), "l ln x = -1");
  if (out.pass)
    out.detail = std::to_string(ring) + " ring-axiom and " + std::to_string(leibniz) + " Leibniz cases, l ln x = -1";
  return out;
}

// JSON for every corpus expansion plus the node demos, each in a fresh session.
std::vector<std::pair<std::string, std::string>> json_artifacts() {
  std::vector<std::pair<std::string, std::string>> docs;
  auto list = corpus::expansions();
  for (size_t i = 0; i < list.size(); ++i) {
    Session s;
    SessionScope scope(s);
    ExpansionResult r = expand_orbit(list[i].field, {list[i].path}, 5);
    std::optional<SlopeReport> oracle;
    if (i < 3) oracle = residual_slope(list[i].field, r.series);
    docs.emplace_back("expansion_" + std::to_string(i) + ".json", format_json(r, oracle));
    docs.emplace_back("chain_" + std::to_string(i) + ".json", format_chain(r.chain, OutputFormat::Json));
  }
  Session s;
  SessionScope scope(s);
  docs.emplace_back("puiseux_cusp.json", format_branches(puiseux_branches(pw(Y, 2) - pw(X, 3), 4), OutputFormat::Json));
  return docs;
}

Outcome determinism(const std::string& artifact_dir) {
  Outcome out;
  auto first = json_artifacts();
  auto second = json_artifacts();
  out.require(first == second, "two passes differ");
  for (const auto& [name, body] : first) {
    if (name.rfind("expansion_", 0) == 0) out.require(reformat_json(body) == body, name + " does not round-trip");
  }
  if (!artifact_dir.empty()) {
    for (const auto& [name, body] : first) {
      std::ofstream f(artifact_dir + "/" + name, std::ios::binary);
      f << body;
      out.require(static_cast<bool>(f), "cannot write " + artifact_dir + "/" + name);
    }
  }
  if (out.pass) out.detail = std::to_string(first.size()) + " JSON artifacts byte-identical across two passes";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string artifacts;
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--artifacts") artifacts = argv[i + 1];
    if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);
  }
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "node golden forms", node_golden_forms},
      {2, "master tangency", master_tangency},
      {3, "inversion round trip", inversion_round_trip},
      {4, "Newton-Puiseux back-substitution", puiseux_back_substitution},
      {5, "numeric slope validation", numeric_slopes},
      {6, "desingularization audit", desingularization_audit},
      {7, "series kernel algebra", series_kernel_algebra},
      {8, "determinism", [&] { return determinism(artifacts); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d %-34s %s  (%.1fs) %s\n", c.id, (c.name + ":").c_str(), o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
