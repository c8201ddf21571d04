// Copyright 2026 The coherework Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Self-test linked against the core built with a corrupted ln 2. Exits 4 when
// any criterion fails, like `coherework self-test`.

#include <iostream>

#include "coherework/selftest.h"

int main() {
    auto results = coherework::selftest::run_all(
        [](const coherework::selftest::CriterionResult &r) { std::cout << coherework::selftest::summary_line(r) << "\n"; });
    return coherework::selftest::all_passed(results) ? 0 : 4;
}
