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

// Prints one line per acceptance criterion. Criterion 10 additionally runs the
// self-test built against the corrupted ln 2 constant and requires it to fail.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "coherework/selftest.h"

#ifndef COHEREWORK_MUTANT_SELFTEST
#error "COHEREWORK_MUTANT_SELFTEST must name the mutant self-test binary"
#endif

int main() {
    using namespace coherework::selftest;
    std::vector<CriterionResult> results = run_all();
    bool ok = true;
    for (auto &r : results) {
        if (r.id == 10) {
            std::string cmd = std::string("\"") + COHEREWORK_MUTANT_SELFTEST + "\" > /dev/null 2>&1";
            int status = std::system(cmd.c_str());
            int code = status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
            bool mutant_caught = code == 4;
            r.detail += mutant_caught ? "; ln2 mutant rejected (exit 4)"
                                      : "; ln2 mutant NOT rejected (exit " + std::to_string(code) + ")";
            r.passed = r.passed && mutant_caught;
        }
        std::printf("criterion %2d: %s  %s (%.2f s, budget %.0f s)\n", r.id, r.passed ? "PASS" : "FAIL",
                    r.title.c_str(), r.seconds, r.budget_seconds);
        std::printf("              %s\n", r.detail.c_str());
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
