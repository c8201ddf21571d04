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

#ifndef COHEREWORK_SELFTEST_H
#define COHEREWORK_SELFTEST_H

#include <functional>
#include <string>
#include <vector>

namespace coherework::selftest {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    /// Deterministic for a given build: key metrics or the first failure.
    std::string detail;
    double seconds;
    double budget_seconds;
};

/// Runs criteria 1-9 and the aggregate (10), calling `on_result` after each.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult &)> &on_result = {});

/// Runs a single criterion in 1-9.
CriterionResult run_criterion(int id);

/// "PASS  3  <title>: <detail>"; excludes timings so reruns compare equal.
std::string summary_line(const CriterionResult &r);

bool all_passed(const std::vector<CriterionResult> &results);

}  // namespace coherework::selftest

#endif
