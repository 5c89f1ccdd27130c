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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitx/orbitx.h"

namespace {

constexpr int kUsage = 2;
constexpr int kValidation = 4;

struct SessionDeleter {
  void operator()(orbitx_session* s) const { orbitx_session_free(s); }
};
struct FieldDeleter {
  void operator()(orbitx_field* f) const { orbitx_field_free(f); }
};
struct ResultDeleter {
  void operator()(orbitx_result* r) const { orbitx_result_free(r); }
};
using SessionPtr = std::unique_ptr<orbitx_session, SessionDeleter>;
using FieldPtr = std::unique_ptr<orbitx_field, FieldDeleter>;
using ResultPtr = std::unique_ptr<orbitx_result, ResultDeleter>;

// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
  int code;
};

void check(orbitx_session* s, orbitx_status st) {
  if (st == ORBITX_OK) return;
  std::cerr << "error: " << orbitx_last_error(s) << "\n";
  throw Exit{orbitx_status_class(st)};
}

// A literal ("X = x; Y = y"), "-" for stdin, or a file path.
std::string read_input(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(arg);
  if (in) return {std::istreambuf_iterator<char>(in), {}};
  if (arg.find_first_of("=^xy") != std::string::npos) return arg;
  std::cerr << "error: cannot read " << arg << "\n";
  throw Exit{kUsage};
}

std::vector<int> parse_branch(const std::string& text) {
  std::vector<int> out;
  if (text == "auto") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      std::cerr << "error: --branch expects 'auto' or comma-separated indices, got " << text << "\n";
      throw Exit{kUsage};
    }
  }
  return out;
}

void emit(char* text) {
  std::fputs(text, stdout);
  orbitx_string_free(text);
}

orbitx_format format_of(const std::string& name) {
  if (name == "json") return ORBITX_FORMAT_JSON;
  if (name == "latex") return ORBITX_FORMAT_LATEX;
  return ORBITX_FORMAT_HUMAN;
}

struct ExpandArgs {
  std::string input;
  std::string order = "5";
  std::string side = "pos";
  std::string branch = "auto";
  std::string format = "human";
  bool validate = false;
  std::pair<double, double> fit{1e-3, 1e-2}, test{1e-4, 1e-3};
  double tol = 1e-40;
  std::string test_order;
};

int run_expand(const ExpandArgs& a, bool always_validate) {
  SessionPtr s(orbitx_session_new());
  orbitx_field* f = nullptr;
  check(s.get(), orbitx_parse_field(s.get(), read_input(a.input).c_str(), &f));
  FieldPtr field(f);
  std::vector<int> branch = parse_branch(a.branch);
  orbitx_expand_options opt{a.order.c_str(), a.side == "neg" ? -1 : 1, a.branch == "auto" ? nullptr : branch.data(),
                            branch.size()};
  orbitx_result* r = nullptr;
  check(s.get(), orbitx_expand(s.get(), field.get(), &opt, &r));
  ResultPtr result(r);
  int verdict_ok = 1;
  if (a.validate || always_validate) {
    orbitx_validate_options vo;
    orbitx_validate_defaults(&vo);
    vo.fit_lo = a.fit.first;
    vo.fit_hi = a.fit.second;
    vo.test_lo = a.test.first;
    vo.test_hi = a.test.second;
    vo.tol = a.tol;
    vo.test_order = a.test_order.empty() ? nullptr : a.test_order.c_str();
    check(s.get(), orbitx_validate(s.get(), field.get(), result.get(), &vo, &verdict_ok));
  }
  char* text = nullptr;
  check(s.get(), orbitx_result_format(s.get(), result.get(), format_of(a.format), &text));
  emit(text);
  return verdict_ok && orbitx_result_tangency_passed(result.get()) ? 0 : kValidation;
}

void add_expand_options(CLI::App* cmd, ExpandArgs& a) {
  cmd->add_option("input", a.input, "field text, file path, or - for stdin")->required();
  cmd->add_option("--order", a.order, "truncation order, e.g. 5 or 7/2")->capture_default_str();
  cmd->add_option("--side", a.side, "side of the y-axis")->check(CLI::IsMember({"pos", "neg"}))->capture_default_str();
  cmd->add_option("--branch", a.branch, "selector indices i,j,... or auto")->capture_default_str();
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"human", "json", "latex"}))
      ->capture_default_str();
}

void add_oracle_options(CLI::App* cmd, ExpandArgs& a) {
  cmd->add_option("--fit-window", a.fit, "x-range for fitting free constants: lo,hi")->delimiter(',');
  cmd->add_option("--test-window", a.test, "x-range for the slope estimate: lo,hi")->delimiter(',');
  cmd->add_option("--tol", a.tol, "local error tolerance per integration step")->capture_default_str();
  cmd->add_option("--test-order", a.test_order, "compare the trajectory against this truncation of the series");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic expansions of characteristic orbits of planar polynomial vector fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "orbitx 1.0.0");

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand("expand", "expand a characteristic orbit as y(x)");
  add_expand_options(expand, expand_args);
  expand->add_flag("--validate", expand_args.validate, "append the numeric oracle report");
  add_oracle_options(expand, expand_args);

  ExpandArgs validate_args;
  auto* validate = app.add_subcommand("validate", "expand and check the expansion against numeric integration");
  add_expand_options(validate, validate_args);
  add_oracle_options(validate, validate_args);

  std::string desing_input, desing_branch = "auto", desing_format = "human";
  int max_depth = 12;
  auto* desing = app.add_subcommand("desing", "blow up the origin until the chosen point is elementary");
  desing->add_option("input", desing_input, "field text, file path, or - for stdin")->required();
  desing->add_option("--max-depth", max_depth, "maximum number of blow-ups")->capture_default_str();
  desing->add_option("--branch", desing_branch, "selector indices i,j,... or auto")->capture_default_str();
  desing->add_option("--format", desing_format, "output format")->check(CLI::IsMember({"human", "json"}));

  std::string curve, curve_order = "5", curve_side = "pos", curve_format = "human";
  auto* puiseux = app.add_subcommand("puiseux", "real Puiseux branches of a curve f(x, y) = 0 at the origin");
  puiseux->add_option("curve", curve, "polynomial text, file path, or - for stdin")->required();
  puiseux->add_option("--order", curve_order, "truncation order")->capture_default_str();
  puiseux->add_option("--side", curve_side, "side of the y-axis")->check(CLI::IsMember({"pos", "neg"}));
  puiseux->add_option("--format", curve_format, "output format")->check(CLI::IsMember({"human", "json", "latex"}));

  std::string json_input;
  auto* reformat = app.add_subcommand("reformat", "re-emit a v1 JSON result in canonical form");
  reformat->add_option("input", json_input, "JSON file or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*expand) return run_expand(expand_args, false);
    if (*validate) return run_expand(validate_args, true);
    SessionPtr s(orbitx_session_new());
    char* text = nullptr;
    if (*desing) {
      orbitx_field* f = nullptr;
      check(s.get(), orbitx_parse_field(s.get(), read_input(desing_input).c_str(), &f));
      FieldPtr field(f);
      std::vector<int> branch = parse_branch(desing_branch);
      check(s.get(), orbitx_desingularize(s.get(), field.get(), desing_branch == "auto" ? nullptr : branch.data(),
                                          branch.size(), max_depth, format_of(desing_format), &text));
    } else if (*puiseux) {
      check(s.get(), orbitx_puiseux(s.get(), read_input(curve).c_str(), curve_order.c_str(), curve_side == "neg" ? -1 : 1,
                                    format_of(curve_format), &text));
    } else {
      std::ifstream in(json_input);
      std::string body = json_input == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                           : std::string(std::istreambuf_iterator<char>(in), {});
      if (json_input != "-" && !in) {
        std::cerr << "error: cannot read " << json_input << "\n";
        return kUsage;
      }
      check(s.get(), orbitx_reformat_json(s.get(), body.c_str(), &text));
    }
    emit(text);
    return 0;
  } catch (const Exit& e) {
    return e.code;
  }
}
