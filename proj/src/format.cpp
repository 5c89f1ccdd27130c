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

#include "orbitx/format.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"
#include "orbitx/errors.hpp"

namespace orbitx {

namespace {

struct Token {
  enum Kind { Number, Ident, Punct, End } kind;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    size_t j = i;
    Token::Kind kind;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      kind = Token::Number;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      kind = Token::Ident;
    } else if (std::string("+-*/^()=;:,[]").find(c) != std::string::npos) {
      j = i + 1;
      kind = Token::Punct;
    } else {
      fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                      ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, s.substr(i, j - i), line, col});
    advance(j - i);
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

struct Node {
  enum Kind { Number, Ident, Call, Neg, Add, Sub, Mul, Div, Pow } kind;
  Rational value;
  std::string name;
  int power = 0;
  int line = 0, col = 0;
  std::shared_ptr<Node> a, b;
};
using NodePtr = std::shared_ptr<Node>;

[[noreturn]] void parse_fail(const Token& t, const std::string& expected) {
  std::string got = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
  fail(ErrorCode::ParseError, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) +
                                  ": expected " + expected + ", found " + got);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(const std::string& p) const { return peek().kind == Token::Punct && peek().text == p; }
  bool at_end() const { return peek().kind == Token::End; }
  const Token& take() { return toks_[pos_++]; }
  void expect(const std::string& p) {
    if (!at(p)) parse_fail(peek(), "'" + p + "'");
    ++pos_;
  }

  // expr := term (('+' | '-') term)*
  NodePtr expr() {
    NodePtr left = term();
    while (at("+") || at("-")) {
      const Token& op = take();
      left = binary(op.text == "+" ? Node::Add : Node::Sub, left, term(), op);
    }
    return left;
  }

 private:
  static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b, const Token& at) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    n->line = at.line;
    n->col = at.col;
    return n;
  }

  // term := unary (('*' | '/') unary)*
  NodePtr term() {
    NodePtr left = unary();
    while (at("*") || at("/")) {
      const Token& op = take();
      left = binary(op.text == "*" ? Node::Mul : Node::Div, left, unary(), op);
    }
    return left;
  }

  NodePtr unary() {
    if (at("-") || at("+")) {
      const Token& op = take();
      NodePtr inner = unary();
      if (op.text == "+") return inner;
      auto n = std::make_shared<Node>();
      n->kind = Node::Neg;
      n->a = inner;
      n->line = op.line;
      n->col = op.col;
      return n;
    }
    return power();
  }

  // power := atom ('^' integer)?
  NodePtr power() {
    NodePtr base = atom();
    if (!at("^")) return base;
    const Token& op = take();
    bool paren = at("(");
    if (paren) take();
    if (peek().kind != Token::Number) parse_fail(peek(), "a non-negative integer exponent");
    auto n = std::make_shared<Node>();
    n->kind = Node::Pow;
    n->a = base;
    n->power = std::stoi(take().text);
    n->line = op.line;
    n->col = op.col;
    if (paren) expect(")");
    return n;
  }

  NodePtr atom() {
    const Token& t = peek();
    auto n = std::make_shared<Node>();
    n->line = t.line;
    n->col = t.col;
    if (t.kind == Token::Number) {
      take();
      n->kind = Node::Number;
      n->value = Rational(Integer(t.text));
      return n;
    }
    if (t.kind == Token::Ident) {
      take();
      n->name = t.text;
      if (at("(")) {
        take();
        n->kind = Node::Call;
        n->a = expr();
        expect(")");
      } else {
        n->kind = Node::Ident;
      }
      return n;
    }
    if (at("(")) {
      take();
      NodePtr inner = expr();
      expect(")");
      return inner;
    }
    parse_fail(t, "a number, a variable or '('");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

[[noreturn]] void node_fail(const Node& n, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(n.line) + ", column " + std::to_string(n.col) + ": " + what);
}

template <class T>
struct Algebra {
  std::function<T(const Rational&)> number;
  std::function<T(const Node&)> leaf;  // identifiers and calls
  std::function<T(const T&, const T&, const Node&)> divide;
};

template <class T>
T evaluate(const Node& n, const Algebra<T>& alg) {
  switch (n.kind) {
    case Node::Number:
      return alg.number(n.value);
    case Node::Ident:
    case Node::Call:
      return alg.leaf(n);
    case Node::Neg:
      return -evaluate(*n.a, alg);
    case Node::Add:
      return evaluate(*n.a, alg) + evaluate(*n.b, alg);
    case Node::Sub:
      return evaluate(*n.a, alg) - evaluate(*n.b, alg);
    case Node::Mul:
      return evaluate(*n.a, alg) * evaluate(*n.b, alg);
    case Node::Div:
      return alg.divide(evaluate(*n.a, alg), evaluate(*n.b, alg), n);
    case Node::Pow: {
      T base = evaluate(*n.a, alg), acc = alg.number(1);
      for (int i = 0; i < n.power; ++i) acc = acc * base;
      return acc;
    }
  }
  node_fail(n, "malformed expression");
}

Num theta_num(const Node& n) {
  if (!current_session().theta) node_fail(n, "theta used without a generator declaration");
  return Num::theta();
}

Algebra<ConstantExpr> constant_algebra() {
  Algebra<ConstantExpr> alg;
  alg.number = [](const Rational& q) { return ConstantExpr(q); };
  alg.leaf = [alg](const Node& n) -> ConstantExpr {
    if (n.kind == Node::Call) {
      if (n.name != "log") node_fail(n, "unknown function " + n.name);
      ConstantExpr arg = evaluate(*n.a, alg);
      if (!arg.is_constant()) node_fail(n, "log of a non-constant");
      return log_constant(arg.constant_value());
    }
    if (n.name == "theta") return ConstantExpr(theta_num(n));
    if (n.name.size() > 1 && n.name[0] == 'c' &&
        std::all_of(n.name.begin() + 1, n.name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      return ConstantExpr::symbol(n.name);
    node_fail(n, "unknown constant " + n.name);
  };
  alg.divide = [](const ConstantExpr& a, const ConstantExpr& b, const Node& n) {
    if (b.is_zero()) node_fail(n, "division by zero");
    if (!b.is_constant()) node_fail(n, "division by a non-constant");
    return a / b;
  };
  return alg;
}

Algebra<BiPoly> poly_algebra() {
  Algebra<BiPoly> alg;
  alg.number = [](const Rational& q) { return BiPoly(ConstantExpr(q)); };
  alg.leaf = [](const Node& n) -> BiPoly {
    if (n.kind == Node::Ident && n.name == "x") return BiPoly::x();
    if (n.kind == Node::Ident && n.name == "y") return BiPoly::y();
    if (n.kind == Node::Ident && n.name == "theta") return BiPoly(ConstantExpr(theta_num(n)));
    node_fail(n, "expected x, y, theta or a number, found " + n.name);
  };
  alg.divide = [](const BiPoly& a, const BiPoly& b, const Node& n) {
    if (b.terms().size() != 1 || b.terms().begin()->first != BiPoly::Key{0, 0} ||
        !b.terms().begin()->second.is_constant())
      node_fail(n, "division by a non-constant");
    return a * BiPoly(ConstantExpr(1) / b.terms().begin()->second);
  };
  return alg;
}

Algebra<UPoly> upoly_algebra() {
  Algebra<UPoly> alg;
  alg.number = [](const Rational& q) { return UPoly::constant(q); };
  alg.leaf = [](const Node& n) -> UPoly {
    if (n.kind == Node::Ident && n.name == "t") return UPoly::monomial(1, 1);
    node_fail(n, "the generator's polynomial is in t, found " + n.name);
  };
  alg.divide = [](const UPoly& a, const UPoly& b, const Node& n) {
    if (b.degree() != 0) node_fail(n, "division by a non-constant");
    return (Rational(1) / b.coeff(0)) * a;
  };
  return alg;
}

Algebra<Rational> rational_algebra() {
  Algebra<Rational> alg;
  alg.number = [](const Rational& q) { return q; };
  alg.leaf = [](const Node& n) -> Rational { node_fail(n, "expected a rational number, found " + n.name); };
  alg.divide = [](const Rational& a, const Rational& b, const Node& n) -> Rational {
    if (b == 0) node_fail(n, "division by zero");
    return Rational(a / b);
  };
  return alg;
}

Algebra<Exponent> exponent_algebra() {
  Algebra<Exponent> alg;
  alg.number = [](const Rational& q) { return Exponent(q); };
  alg.leaf = [](const Node& n) -> Exponent {
    if (n.kind == Node::Ident && n.name == "lam") {
      if (!current_session().lambda) node_fail(n, "lam used without an exponent generator");
      return Exponent::lambda();
    }
    node_fail(n, "expected a rational or lam, found " + n.name);
  };
  alg.divide = [](const Exponent& a, const Exponent& b, const Node& n) {
    if (!b.is_rational() || b.r == 0) node_fail(n, "division by a non-rational exponent");
    return a / b.r;
  };
  return alg;
}

template <class T>
T parse_whole(const std::string& text, const Algebra<T>& alg) {
  Parser p(text);
  NodePtr e = p.expr();
  if (!p.at_end()) parse_fail(p.peek(), "an operator or end of input");
  return evaluate(*e, alg);
}

}  // namespace

BiPoly parse_poly(const std::string& text) { return parse_whole(text, poly_algebra()); }
ConstantExpr parse_constant(const std::string& text) { return parse_whole(text, constant_algebra()); }
Exponent parse_exponent(const std::string& text) { return parse_whole(text, exponent_algebra()); }

VectorField parse_field(const std::string& text) {
  Parser p(text);
  std::optional<BiPoly> X, Y;
  bool declared = false;
  while (!p.at_end()) {
    const Token& head = p.peek();
    if (head.kind != Token::Ident) parse_fail(head, "'X', 'Y' or 'theta'");
    p.take();
    if (head.text == "theta") {
      if (declared) parse_fail(head, "a single generator (towers of extensions are unsupported)");
      if (X || Y) parse_fail(head, "the generator declaration before the components");
      p.expect(":");
      UPoly minpoly = evaluate(*p.expr(), upoly_algebra());
      p.expect(",");
      p.expect("[");
      Rational lo = evaluate(*p.expr(), rational_algebra());
      p.expect(",");
      Rational hi = evaluate(*p.expr(), rational_algebra());
      p.expect("]");
      if (minpoly.degree() < 1 || !(lo < hi)) parse_fail(head, "a non-constant polynomial and an interval lo < hi");
      RealAlgebraic r(minpoly, lo, hi);
      if (r.is_rational()) parse_fail(head, "an irrational generator");
      embed(r);
      declared = true;
    } else if (head.text == "X" || head.text == "Y") {
      auto& slot = head.text == "X" ? X : Y;
      if (slot) parse_fail(head, "each component assigned once");
      p.expect("=");
      slot = evaluate(*p.expr(), poly_algebra());
    } else {
      parse_fail(head, "'X', 'Y' or 'theta'");
    }
    if (p.at_end()) break;
    p.expect(";");
  }
  if (!X || !Y) parse_fail(p.peek(), "both 'X = ...' and 'Y = ...'");
  return {*X, *Y};
}

std::string theta_display() {
  const auto& theta = current_session().theta;
  if (!theta) return "theta";
  const UPoly& p = theta->minimal_polynomial();
  if (p.degree() == 2 && p.coeff(1) == 0 && theta->lo() >= 0) {
    Rational q = -p.coeff(0) / p.coeff(2);
    return "sqrt(" + q.get_str() + ")";
  }
  return "theta";
}

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
  return s;
}

std::string exponent_text(const Exponent& e) {
  std::string s = e.to_string();
  return s.find_first_of(" /*-") == std::string::npos ? s : "(" + s + ")";
}

bool single_factor(const ConstantExpr& c) { return c.terms().size() == 1 && !c.terms().begin()->second.needs_parens(); }

bool leading_minus(const ConstantExpr& c) { return single_factor(c) && c.to_string().front() == '-'; }

}  // namespace

std::string format_series_human(const Series& s) {
  std::ostringstream os;
  std::string theta = theta_display();
  bool first = true;
  for (const auto& [k, c] : s.terms()) {
    bool neg = leading_minus(c);
    ConstantExpr a = neg ? -c : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::vector<std::string> parts;
    bool unit = a == ConstantExpr(1);
    if (!unit) {
      std::string t = replace_all(a.to_string(), "theta", theta);
      parts.push_back(single_factor(a) ? t : "(" + t + ")");
    }
    if (!k.alpha.is_zero()) parts.push_back(k.alpha == Exponent(1) ? "x" : "x^" + exponent_text(k.alpha));
    if (!k.beta.is_zero()) parts.push_back(k.beta == Exponent(1) ? "l" : "l^" + exponent_text(k.beta));
    if (k.gamma) parts.push_back(k.gamma == 1 ? "ln(l)" : "ln(l)^" + std::to_string(k.gamma));
    if (parts.empty()) parts.push_back("1");
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
  }
  if (s.order()) os << (first ? "" : " + ") << "O(x^" << exponent_text(*s.order()) << ")";
  else if (first) os << "0";
  return os.str();
}

std::string format_human(const ExpansionResult& r, const std::optional<SlopeReport>& oracle) {
  std::ostringstream os;
  os << "y = " << format_series_human(r.series) << "\n";
  os << "case: " << case_name(r.case_tag) << "\n";
  os << "ramification n: " << r.n << "\n";
  if (r.series.has_logs()) os << "where l = -1/ln(x)\n";
  if (current_session().theta && theta_display() == "theta")
    os << "theta: root of " << current_session().theta->minimal_polynomial().to_string("t") << " in ("
       << current_session().theta->lo().get_str() << ", " << current_session().theta->hi().get_str() << "]\n";
  if (current_session().lambda) os << "lam = " << replace_all(Num(*current_session().lambda).to_string(), "theta", theta_display()) << "\n";
  if (!r.free_constants.empty()) {
    os << "free constants:";
    for (const auto& c : r.free_constants) os << " " << c;
    os << "\n";
  }
  os << "blow-ups: " << r.chain.depth() << ", terminal: " << tag_name(r.chain.terminal_class.tag) << ", seed: "
     << seed_name(r.seed.kind) << "\n";
  os << "tangency residual order: " << r.validation.tangency_order.to_string() << " ("
     << (r.validation.passed ? "passed" : "FAILED") << ")\n";
  if (oracle) {
    os << "oracle: slope " << oracle->slope << ", predicted " << oracle->predicted << ", verdict " << oracle->verdict
       << "\n";
    for (const auto& [name, value] : oracle->fitted_constants)
      os << "  fitted " << name << " = " << value.str(20) << "\n";
  }
  return os.str();
}

namespace {

std::string rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_str();
  std::string sign = q < 0 ? "-" : "";
  Rational a = abs(q);
  return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string theta_latex() {
  std::string d = theta_display();
  if (d == "theta") return "\\theta";
  Rational q(d.substr(5, d.size() - 6));
  q.canonicalize();
  return "\\sqrt{" + (q.get_den() == 1 ? q.get_str() : rational_latex(q)) + "}";
}

std::string num_latex(const Num& v) {
  std::string out;
  const auto& c = v.coords();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::string mono = i == 0 ? "" : theta_latex() + (i > 1 ? "^{" + std::to_string(i) + "}" : "");
    Rational q = c[i];
    bool neg = q < 0;
    std::string coef = mono.empty() || abs(q) != 1 ? rational_latex(abs(q)) : "";
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += coef + mono;
  }
  return out.empty() ? "0" : out;
}

std::string exponent_latex(const Exponent& e) {
  std::string lam = "\\lambda";
  if (const auto& l = current_session().lambda) {
    std::string v = num_latex(Num(*l));
    if (v.find_first_of(" -") == std::string::npos) lam = v;
  }
  auto part = [&](const Rational& q) {
    if (q == 1) return lam;
    if (q == -1) return "-" + lam;
    return rational_latex(q) + lam;
  };
  if (e.l == 0) return e.r.get_den() == 1 ? e.r.get_str() : e.r.get_num().get_str() + "/" + e.r.get_den().get_str();
  if (e.r == 0) return part(e.l);
  std::string r = e.r.get_den() == 1 ? e.r.get_str() : e.r.get_num().get_str() + "/" + e.r.get_den().get_str();
  return r + (e.l < 0 ? " - " + part(-e.l) : " + " + part(e.l));
}

std::string symbol_latex(const std::string& name, bool lone_constant) {
  if (is_log_symbol(name)) {
    std::string arg = name.substr(4, name.size() - 5);
    if (std::all_of(arg.begin(), arg.end(), ::isdigit)) return "\\ln " + arg;
    return "\\ln(" + num_latex(log_symbol_argument(name)) + ")";
  }
  if (lone_constant) return "c";
  return "c_{" + name.substr(1) + "}";
}

std::string constant_latex(const ConstantExpr& c, bool lone_constant) {
  std::string out;
  for (const auto& [m, v] : c.terms()) {
    std::string coef = num_latex(v);
    bool neg = !v.needs_parens() && coef.front() == '-';
    if (neg) coef = coef.substr(1);
    if (v.needs_parens()) coef = "(" + coef + ")";
    if (!m.empty() && coef == "1") coef.clear();
    std::string syms;
    for (const auto& [name, e] : m) {
      syms += (syms.empty() && coef.empty() ? "" : "\\,") + symbol_latex(name, lone_constant);
      if (e != 1) syms += "^{" + std::to_string(e) + "}";
    }
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += coef + syms;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_series_latex(const Series& s) {
  bool lone = false;
  {
    std::set<std::string> names;
    for (const auto& [k, c] : s.terms())
      for (const auto& n : c.symbols())
        if (!is_log_symbol(n)) names.insert(n);
    lone = names.size() == 1;
  }
  // ell^{-k} with integer k is written as (ln x)^k; terms sorted by x-power,
  // then remaining ell-power, then ln x degree, then ln ell degree.
  struct Item {
    Exponent alpha, beta;
    int lnx = 0, gamma = 0;
    ConstantExpr coef;
  };
  std::vector<Item> items;
  for (const auto& [k, c] : s.terms()) {
    Item it{k.alpha, k.beta, 0, k.gamma, c};
    if (k.beta.is_rational() && k.beta.r < 0 && k.beta.r.get_den() == 1) {
      it.lnx = static_cast<int>(-k.beta.r.get_num().get_si());
      it.beta = 0;
      if (it.lnx % 2) it.coef = -it.coef;
    }
    items.push_back(it);
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.beta != b.beta) return a.beta < b.beta;
    if (a.lnx != b.lnx) return a.lnx < b.lnx;
    return a.gamma < b.gamma;
  });
  std::string out;
  for (const auto& it : items) {
    std::string coef = constant_latex(it.coef, lone);
    bool neg = it.coef.terms().size() == 1 && coef.front() == '-';
    if (neg) coef = coef.substr(1);
    if (it.coef.terms().size() > 1) coef = "(" + coef + ")";
    std::string mono;
    if (!it.alpha.is_zero()) mono += it.alpha == Exponent(1) ? "x" : "x^{" + exponent_latex(it.alpha) + "}";
    if (!it.beta.is_zero()) mono += "\\ell^{" + exponent_latex(it.beta) + "}";
    if (it.lnx) mono += it.lnx == 1 ? "\\ln x" : "\\ln^{" + std::to_string(it.lnx) + "} x";
    if (it.gamma) mono += it.gamma == 1 ? "\\ln\\ell" : "(\\ln\\ell)^{" + std::to_string(it.gamma) + "}";
    std::string term;
    if (mono.empty()) term = coef;
    else if (coef == "1") term = mono;
    else term = coef + "\\," + mono;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += term;
  }
  if (s.order()) out += (out.empty() ? "" : " + ") + std::string("O(x^{") + exponent_latex(*s.order()) + "})";
  return out.empty() ? "0" : out;
}

std::string format_latex(const ExpansionResult& r) {
  std::string out = "y = " + format_series_latex(r.series);
  if (out.find("\\ell") != std::string::npos) out += ", \\quad \\ell = -1/\\ln x";
  return out + "\n% case " + case_name(r.case_tag) + ", n = " + std::to_string(r.n) + "\n";
}

namespace {

using nlohmann::json;

json generator_json() {
  const Session& s = current_session();
  if (!s.theta) return nullptr;
  json g;
  g["minpoly"] = s.theta->minimal_polynomial().to_string("t");
  g["interval"] = {s.theta->lo().get_str(), s.theta->hi().get_str()};
  g["lambda"] = s.lambda ? json(Num(*s.lambda).to_string()) : json(nullptr);
  return g;
}

void install_generator(const json& g) {
  if (g.is_null()) return;
  UPoly p = parse_whole(g.at("minpoly").get<std::string>(), upoly_algebra());
  Rational lo = parse_whole(g.at("interval").at(0).get<std::string>(), rational_algebra());
  Rational hi = parse_whole(g.at("interval").at(1).get<std::string>(), rational_algebra());
  embed(RealAlgebraic(p, lo, hi));
  if (!g.at("lambda").is_null()) {
    ConstantExpr lam = parse_constant(g.at("lambda").get<std::string>());
    exponent_of(lam.constant_value());
  }
}

json series_terms(const Series& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.terms())
    terms.push_back({{"coef", c.to_string()}, {"alpha", k.alpha.to_string()}, {"beta", k.beta.to_string()}, {"gamma", k.gamma}});
  return terms;
}

Series series_from(const json& terms, const json& order) {
  Series s = order.is_null() ? Series() : Series::big_o(parse_exponent(order.get<std::string>()));
  for (const auto& t : terms)
    s.add_term({parse_exponent(t.at("alpha").get<std::string>()), parse_exponent(t.at("beta").get<std::string>()),
                t.at("gamma").get<int>()},
               parse_constant(t.at("coef").get<std::string>()));
  return s;
}

json oracle_json(const std::optional<SlopeReport>& oracle) {
  if (!oracle) return nullptr;
  json fitted = json::object();
  for (const auto& [name, v] : oracle->fitted_constants) fitted[name] = v.str(30);
  return {{"fitted_constants", fitted},
          {"slope", oracle->slope},
          {"predicted_exponent", oracle->predicted},
          {"verdict", oracle->verdict}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_json(const ExpansionResult& r, const std::optional<SlopeReport>& oracle) {
  json j;
  j["schema"] = "v1";
  j["generator"] = generator_json();
  j["case"] = case_name(r.case_tag);
  j["n"] = r.n;
  j["order"] = r.series.order() ? json(r.series.order()->to_string()) : json(nullptr);
  j["terms"] = series_terms(r.series);
  j["free_constants"] = r.free_constants;
  json chain = json::array();
  for (const auto& st : r.chain.steps)
    chain.push_back({{"step", std::string(step_name(st.kind))}, {"offset", st.offset.to_string()}, {"divided", st.divided}});
  j["chain"] = chain;
  j["terminal"] = std::string(tag_name(r.chain.terminal_class.tag));
  j["seed"] = std::string(seed_name(r.seed.kind));
  j["validation"] = {{"tangency_valuation", r.validation.tangency_order.to_string()},
                     {"slack", r.validation.slack.to_string()},
                     {"passed", r.validation.passed},
                     {"oracle_slope", oracle_json(oracle)}};
  return dump(j);
}

std::string reformat_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  try {
    if (j.at("schema") != "v1") fail(ErrorCode::ParseError, "unsupported schema " + j.at("schema").dump());
    Session session;
    SessionScope scope(session);
    install_generator(j.at("generator"));
    Series s = series_from(j.at("terms"), j.at("order"));
    j["terms"] = series_terms(s);
    j["order"] = s.order() ? json(s.order()->to_string()) : json(nullptr);
    j["generator"] = generator_json();
    for (auto& st : j.at("chain")) st["offset"] = parse_constant(st.at("offset").get<std::string>()).to_string();
    auto& v = j.at("validation");
    v["tangency_valuation"] = parse_exponent(v.at("tangency_valuation").get<std::string>()).to_string();
    v["slack"] = parse_exponent(v.at("slack").get<std::string>()).to_string();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return dump(j);
}

std::string format_chain(const BlowUpChain& chain, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json steps = json::array();
    for (size_t k = 0; k < chain.steps.size(); ++k) {
      const auto& st = chain.steps[k];
      steps.push_back({{"step", std::string(step_name(st.kind))},
                       {"offset", st.offset.to_string()},
                       {"divided", st.divided},
                       {"field_before", {chain.fields_along[k].X.to_string(), chain.fields_along[k].Y.to_string()}}});
    }
    json j;
    j["schema"] = "v1";
    j["generator"] = generator_json();
    j["depth"] = chain.depth();
    j["chain"] = steps;
    j["terminal"] = {{"class", std::string(tag_name(chain.terminal_class.tag))},
                     {"field", {chain.terminal.X.to_string(), chain.terminal.Y.to_string()}},
                     {"eigenvalues", {chain.terminal_class.mu1.to_string(), chain.terminal_class.mu2.to_string()}}};
    return dump(j);
  }
  std::ostringstream os;
  for (size_t k = 0; k < chain.steps.size(); ++k) {
    const auto& st = chain.steps[k];
    os << step_name(st.kind);
    if (st.kind == StepKind::Tv || st.kind == StepKind::Th) os << "(" << st.offset.to_string() << ")";
    else os << " (factor " << (st.kind == StepKind::Bv ? "x" : "y") << "^" << st.divided << " removed)";
    os << "\n";
  }
  os << "depth: " << chain.depth() << "\n";
  os << "terminal class: " << tag_name(chain.terminal_class.tag) << ", eigenvalues " << chain.terminal_class.mu1.to_string()
     << ", " << chain.terminal_class.mu2.to_string() << "\n";
  os << "terminal field: X = " << chain.terminal.X.to_string() << "; Y = " << chain.terminal.Y.to_string() << ";\n";
  return os.str();
}

std::string format_branches(const std::vector<PuiseuxBranch>& branches, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json list = json::array();
    for (const auto& b : branches)
      list.push_back({{"terms", series_terms(b.series)},
                      {"order", b.series.order() ? json(b.series.order()->to_string()) : json(nullptr)},
                      {"n", b.n},
                      {"multiplicity", b.multiplicity},
                      {"side", b.side == Side::Positive ? "pos" : "neg"}});
    json j;
    j["schema"] = "v1";
    j["generator"] = generator_json();
    j["branches"] = list;
    return dump(j);
  }
  std::ostringstream os;
  if (branches.empty()) os << "no real branches\n";
  for (const auto& b : branches) {
    if (fmt == OutputFormat::Latex) os << "y = " << format_series_latex(b.series);
    else os << "y = " << format_series_human(b.series) << "  (n = " << b.n << ", multiplicity " << b.multiplicity << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace orbitx
