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

#ifndef COHEREWORK_TOOLS_SCENARIO_H
#define COHEREWORK_TOOLS_SCENARIO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace coherework::cli {

using Json = nlohmann::json;

/// Scenario does not match the schema. `field` is a dotted path such as
/// "state.entries[1]".
class SchemaError : public std::runtime_error {
   public:
    SchemaError(std::string field, std::string message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)), message_(std::move(message)) {
    }
    const std::string &field() const noexcept {
        return field_;
    }
    const std::string &message() const noexcept {
        return message_;
    }

   private:
    std::string field_;
    std::string message_;
};

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Validates `scenario` and runs it. Throws SchemaError for malformed input
/// and coherework::Error when the physics validation fails.
Json run_scenario(const Json &scenario);

/// JSON Schema for scenario files, with the report layout under
/// "$defs.report".
std::string_view scenario_schema();

/// Sorted keys, no whitespace, doubles as %.17g, non-finite doubles as null.
std::string canonical_dump(const Json &j);

}  // namespace coherework::cli

#endif
