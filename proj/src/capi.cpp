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

#include "orbitx/orbitx.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "orbitx/errors.hpp"
#include "orbitx/format.hpp"

struct orbitx_session {
  orbitx::Session session;
  std::string last_error;
};

struct orbitx_field {
  orbitx::VectorField field;
};

struct orbitx_result {
  orbitx::ExpansionResult result;
  std::optional<orbitx::SlopeReport> oracle;
  orbitx::Side side = orbitx::Side::Positive;
};

using namespace orbitx;

static_assert(static_cast<int>(ErrorCode::Internal) + 1 == ORBITX_INTERNAL, "status table out of sync");

namespace {

orbitx_status status_of(ErrorCode code) { return static_cast<orbitx_status>(static_cast<int>(code) + 1); }

template <class F>
orbitx_status guarded(orbitx_session* s, F&& body) {
  if (!s) return ORBITX_USAGE;
  try {
    SessionScope scope(s->session);
    body();
    s->last_error.clear();
    return ORBITX_OK;
  } catch (const Error& e) {
    s->last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    s->last_error = "out of memory";
  } catch (const std::exception& e) {
    s->last_error = e.what();
  }
  return ORBITX_INTERNAL;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

OutputFormat to_format(orbitx_format fmt) {
  switch (fmt) {
    case ORBITX_FORMAT_HUMAN:
      return OutputFormat::Human;
    case ORBITX_FORMAT_JSON:
      return OutputFormat::Json;
    case ORBITX_FORMAT_LATEX:
      return OutputFormat::Latex;
  }
  fail(ErrorCode::Usage, "unknown output format");
}

Selector selector_of(const int* branch, size_t len) {
  Selector sel;
  if (branch) sel.path.assign(branch, branch + len);
  return sel;
}

Side side_of(int side) {
  if (side != 1 && side != -1) fail(ErrorCode::Usage, "side must be +1 or -1");
  return side == 1 ? Side::Positive : Side::Negative;
}

}  // namespace

extern "C" {

int orbitx_status_class(orbitx_status s) {
  switch (s) {
    case ORBITX_OK:
      return 0;
    case ORBITX_PARSE_ERROR:
    case ORBITX_USAGE:
      return 2;
    case ORBITX_SECTOR_VIOLATION:
    case ORBITX_STIFFNESS_FAILURE:
      return 4;
    case ORBITX_INTERNAL:
      return 1;
    default:
      return 3;
  }
}

const char* orbitx_status_name(orbitx_status s) {
  if (s == ORBITX_OK) return "Ok";
  if (s < ORBITX_OK || s > ORBITX_INTERNAL) return "Unknown";
  return error_name(static_cast<ErrorCode>(s - 1)).data();
}

orbitx_session* orbitx_session_new(void) { return new (std::nothrow) orbitx_session(); }
void orbitx_session_free(orbitx_session* s) { delete s; }
const char* orbitx_last_error(const orbitx_session* s) { return s ? s->last_error.c_str() : ""; }

orbitx_status orbitx_parse_field(orbitx_session* s, const char* text, orbitx_field** out) {
  return guarded(s, [&] {
    if (!text || !out) fail(ErrorCode::Usage, "null argument");
    *out = new orbitx_field{parse_field(text)};
  });
}

void orbitx_field_free(orbitx_field* f) { delete f; }

orbitx_status orbitx_expand(orbitx_session* s, const orbitx_field* f, const orbitx_expand_options* opt,
                            orbitx_result** out) {
  return guarded(s, [&] {
    if (!f || !opt || !out || !opt->order) fail(ErrorCode::Usage, "null argument");
    Exponent order = parse_exponent(opt->order);
    if (order.sign() <= 0) fail(ErrorCode::Usage, "order must be positive");
    Side side = side_of(opt->side);
    *out = new orbitx_result{expand_orbit(f->field, selector_of(opt->branch, opt->branch_len), order, side), {}, side};
  });
}

void orbitx_result_free(orbitx_result* r) { delete r; }
int orbitx_result_tangency_passed(const orbitx_result* r) { return r && r->result.validation.passed ? 1 : 0; }

void orbitx_validate_defaults(orbitx_validate_options* opt) {
  SlopeOptions d;
  opt->fit_lo = d.fit_window.first;
  opt->fit_hi = d.fit_window.second;
  opt->test_lo = d.test_window.first;
  opt->test_hi = d.test_window.second;
  opt->tol = d.tol;
  opt->test_order = nullptr;
}

orbitx_status orbitx_validate(orbitx_session* s, const orbitx_field* f, orbitx_result* r,
                              const orbitx_validate_options* opt, int* verdict_ok) {
  return guarded(s, [&] {
    if (!f || !r || !opt) fail(ErrorCode::Usage, "null argument");
    if (!(0 < opt->test_lo && opt->test_lo < opt->test_hi && opt->test_hi <= opt->fit_lo && opt->fit_lo < opt->fit_hi &&
          opt->fit_hi < 0.36 && opt->tol > 0))
      fail(ErrorCode::Usage, "windows must satisfy 0 < test_lo < test_hi <= fit_lo < fit_hi < 1/e and tol > 0");
    SlopeOptions so;
    so.fit_window = {opt->fit_lo, opt->fit_hi};
    so.test_window = {opt->test_lo, opt->test_hi};
    so.tol = opt->tol;
    if (opt->test_order) so.test_order = parse_exponent(opt->test_order);
    // A negative-side expansion is y(-x); the oracle sees the mirrored field on x > 0.
    const VectorField& v = f->field;
    VectorField w = r->side == Side::Negative ? VectorField{-v.X.reflect_x(), v.Y.reflect_x()} : v;
    r->oracle = residual_slope(w, r->result.series, so);
    if (verdict_ok) *verdict_ok = r->oracle->verdict != "fail";
  });
}

orbitx_status orbitx_result_format(orbitx_session* s, const orbitx_result* r, orbitx_format fmt, char** out) {
  return guarded(s, [&] {
    if (!r || !out) fail(ErrorCode::Usage, "null argument");
    switch (to_format(fmt)) {
      case OutputFormat::Human:
        *out = copy_string(format_human(r->result, r->oracle));
        break;
      case OutputFormat::Json:
        *out = copy_string(format_json(r->result, r->oracle));
        break;
      case OutputFormat::Latex:
        *out = copy_string(format_latex(r->result));
        break;
    }
  });
}

orbitx_status orbitx_desingularize(orbitx_session* s, const orbitx_field* f, const int* branch, size_t branch_len,
                                   int max_depth, orbitx_format fmt, char** out) {
  return guarded(s, [&] {
    if (!f || !out) fail(ErrorCode::Usage, "null argument");
    if (max_depth < 0) fail(ErrorCode::Usage, "max depth must be non-negative");
    *out = copy_string(format_chain(desingularize_along(f->field, selector_of(branch, branch_len), max_depth), to_format(fmt)));
  });
}

orbitx_status orbitx_puiseux(orbitx_session* s, const char* curve, const char* order, int side, orbitx_format fmt,
                             char** out) {
  return guarded(s, [&] {
    if (!curve || !order || !out) fail(ErrorCode::Usage, "null argument");
    BiPoly f = parse_poly(curve);
    *out = copy_string(format_branches(puiseux_branches(f, parse_exponent(order), side_of(side)), to_format(fmt)));
  });
}

orbitx_status orbitx_reformat_json(orbitx_session* s, const char* json, char** out) {
  return guarded(s, [&] {
    if (!json || !out) fail(ErrorCode::Usage, "null argument");
    *out = copy_string(reformat_json(json));
  });
}

void orbitx_string_free(char* str) { std::free(str); }

}  // extern "C"
