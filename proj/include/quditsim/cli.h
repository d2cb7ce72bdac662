// Copyright 2026 The quditsim Authors
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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "quditsim/backend.h"
#include "quditsim/result.h"

namespace quditsim::cli {

struct RunConfig {
    std::string input;          // dialect file path
    std::string template_name;  // or a built-in template
    BackendKind backend = BackendKind::Sparse;
    OutputType output_type = OutputType::Print;
    OutputMethod output_method = OutputMethod::Amplitude;
    bool time_report = true;
    bool forward = false;
    bool trace = false;
    Index memory_budget = kDefaultMemoryBudget;
};

struct BenchRow {
    std::string name;
    std::size_t width = 0;
    std::size_t depth = 0;
    double load_ms = 0;
    double exec_ms = 0;
    bool ok = false;
    std::string error;
};

/// Runs every *.qasm file of `dir` once, in file-name order. A failing file
/// yields a failed row and the suite continues.
std::vector<BenchRow> bench(const std::filesystem::path &dir, BackendKind backend,
                            Index memory_budget = default_memory_budget());

/// Header "name,width,depth,load_ms,exec_ms,status" plus one line per row.
std::string bench_csv(const std::vector<BenchRow> &rows);
std::string bench_table(const std::vector<BenchRow> &rows);

/// Loads, executes and renders one circuit per `config`.
void run_once(const RunConfig &config, std::ostream &out);

/// Command-line entry point; returns the process exit status.
int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace quditsim::cli
