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

#include "orbitx/session.hpp"

namespace orbitx {

namespace {
thread_local Session default_session;
thread_local Session* active = nullptr;
}  // namespace

Session& current_session() { return active ? *active : default_session; }

SessionScope::SessionScope(Session& s) : previous_(active) { active = &s; }

SessionScope::~SessionScope() { active = previous_; }

}  // namespace orbitx
