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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coherework/errors.h"
#include "coherework/selftest.h"
#include "scenario.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitSchema = 2;
constexpr int kExitPhysics = 3;
constexpr int kExitSelfTest = 4;

int run(const std::string &path, const std::string &out_path) {
    using coherework::cli::Json;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: io: cannot read " << path << "\n";
        return kExitIo;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        std::cerr << "error: io: failed reading " << path << "\n";
        return kExitIo;
    }

    Json scenario;
    try {
        scenario = Json::parse(buf.str());
    } catch (const Json::parse_error &e) {
        std::cerr << "error: schema: field '<root>': not valid JSON (" << e.what() << ")\n";
        return kExitSchema;
    }

    std::string report;
    try {
        report = coherework::cli::canonical_dump(coherework::cli::run_scenario(scenario)) + "\n";
    } catch (const coherework::cli::SchemaError &e) {
        std::cerr << "error: schema: field '" << e.field() << "': " << e.message() << "\n";
        return kExitSchema;
    } catch (const coherework::Error &e) {
        std::cerr << "error: " << coherework::error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return kExitPhysics;
    }

    if (out_path.empty()) {
        std::cout << report;
        std::cout.flush();
        return std::cout ? kExitOk : kExitIo;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << report;
    out.close();
    if (!out) {
        std::cerr << "error: io: cannot write " << out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int self_test() {
    auto results = coherework::selftest::run_all([](const coherework::selftest::CriterionResult &r) {
        std::cout << coherework::selftest::summary_line(r) << "\n";
        std::cout.flush();
        std::fprintf(stderr, "criterion %d took %.2f s\n", r.id, r.seconds);
    });
    return coherework::selftest::all_passed(results) ? kExitOk : kExitSelfTest;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"coherework: work and heat of quantum projection processes"};
    app.require_subcommand(1);

    std::string path;
    std::string out_path;
    auto *run_cmd = app.add_subcommand("run", "Run a JSON scenario and print its report");
    run_cmd->add_option("file", path, "Scenario file")->required();
    run_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

    auto *self_test_cmd = app.add_subcommand("self-test", "Run the embedded acceptance suite");
    auto *schema_cmd = app.add_subcommand("schema", "Print the scenario JSON schema");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    if (run_cmd->parsed()) {
        return run(path, out_path);
    }
    if (self_test_cmd->parsed()) {
        return self_test();
    }
    if (schema_cmd->parsed()) {
        std::cout << coherework::cli::scenario_schema();
        return kExitOk;
    }
    return kExitOk;
}
