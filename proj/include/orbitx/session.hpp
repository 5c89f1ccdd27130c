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

#ifndef ORBITX_SESSION_HPP
#define ORBITX_SESSION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbitx/real_algebraic.hpp"

namespace orbitx {

/// Shared context for one computation: the (at most one) algebraic generator
/// theta of the coefficient field, the exponent generator lambda (an
/// irrational element of Q(theta), stored by its coordinates), the weight of
/// l-powers in the truncation valuation, and the free-constant counter.
struct Session {
  std::optional<RealAlgebraic> theta;
  std::optional<std::vector<Rational>> lambda;
  double lambda_approx = 0;
  // Truncation valuation of x^a l^b (ln l)^g is a + ell_weight * b.
  Rational ell_weight{1, 8};
  int next_constant = 1;
  // Logarithm constants that are not expressible through primes, by symbol
  // name, with the coordinates of their argument in Q(theta).
  std::map<std::string, std::vector<Rational>> log_symbols;

  std::string fresh_constant() { return "c" + std::to_string(next_constant++); }
};

/// The session used by all arithmetic on the calling thread.
Session& current_session();

/// Installs `s` as the calling thread's session for the scope's lifetime.
class SessionScope {
 public:
  explicit SessionScope(Session& s);
  ~SessionScope();
  SessionScope(const SessionScope&) = delete;
  SessionScope& operator=(const SessionScope&) = delete;

 private:
  Session* previous_;
};

}  // namespace orbitx

#endif  // ORBITX_SESSION_HPP
