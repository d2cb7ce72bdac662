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

#include "quditsim/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "quditsim/circuit.h"
#include "quditsim/errors.h"
#include "quditsim/qasm.h"
#include "quditsim/templates.h"

namespace quditsim::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::vector<BenchRow> bench(const std::filesystem::path &dir, BackendKind backend, Index memory_budget) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error("'" + dir.string() + "' is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".qasm") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows;
    for (const auto &file : files) {
        BenchRow row;
        row.name = file.stem().string();
        try {
            auto start = Clock::now();
            QuantumCircuit qc = qasm::build_circuit(qasm::parse_source(read_file(file)), backend);
            qc.set_memory_budget(memory_budget);
            row.load_ms = ms_since(start);
            row.width = qc.width();
            row.depth = qc.flow().depth();
            start = Clock::now();
            qc.run();
            row.exec_ms = ms_since(start);
            row.ok = true;
        } catch (const std::exception &e) {
            row.ok = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::string out = "name,width,depth,load_ms,exec_ms,status\n";
    for (const auto &r : rows) {
        out += r.name + "," + std::to_string(r.width) + "," + std::to_string(r.depth) + "," + fixed3(r.load_ms) +
               "," + fixed3(r.exec_ms) + "," + (r.ok ? "ok" : "failed") + "\n";
    }
    return out;
}

std::string bench_table(const std::vector<BenchRow> &rows) {
    std::size_t name_w = 7;
    for (const auto &r : rows) {
        name_w = std::max(name_w, r.name.size());
    }
    char buf[512];
    std::string out;
    std::snprintf(buf, sizeof(buf), "%-*s  %14s  %12s  %12s  %s\n", static_cast<int>(name_w), "circuit",
                  "(width, depth)", "load (ms)", "exec (ms)", "status");
    out += buf;
    for (const auto &r : rows) {
        std::string shape = "(" + std::to_string(r.width) + ", " + std::to_string(r.depth) + ")";
        std::snprintf(buf, sizeof(buf), "%-*s  %14s  %12s  %12s  %s\n", static_cast<int>(name_w), r.name.c_str(),
                      shape.c_str(), fixed3(r.load_ms).c_str(), fixed3(r.exec_ms).c_str(),
                      r.ok ? "ok" : ("failed: " + r.error).c_str());
        out += buf;
    }
    return out;
}

void run_once(const RunConfig &config, std::ostream &out) {
    auto start = Clock::now();
    std::optional<QuantumCircuit> qc;
    if (!config.template_name.empty()) {
        qc.emplace(templates::by_name(config.template_name, config.backend));
    } else {
        qc.emplace(qasm::build_circuit(qasm::parse_source(read_file(config.input)), config.backend));
    }
    double load_seconds = ms_since(start) / 1000.0;
    qc->set_memory_budget(config.memory_budget);
    if (config.trace) {
        qc->set_trace(&std::cerr);
    }
    ResultSet result = config.forward ? qc->execute_forward() : qc->run();
    result.load_seconds = load_seconds;
    if (config.output_method != result.value_kind) {
        result = result.as(config.output_method);
    }
    if (config.output_type == OutputType::Print) {
        out << render_print(result, config.time_report);
    } else {
        if (config.time_report) {
            out << "Build elapsed: " << format_real(result.load_seconds) << "s\n";
            out << "Execution elapsed: " << format_real(result.execute_seconds) << "s\n\n";
        }
        out << render_state(result);
    }
}

int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Mixed-dimension qubit/qudit circuit simulator"};
    RunConfig config;
    config.memory_budget = default_memory_budget();
    std::string backend = "sparse";
    std::string output = "print";
    std::string method = "amp";
    std::string bench_dir;
    std::string csv_path;
    bool no_time = false;

    app.add_option("input", config.input, "Dialect (.qasm) file to run");
    app.add_option("--template", config.template_name, "Built-in circuit: grover_n2 or bv:<secret>");
    app.add_option("--backend", backend, "Arithmetic backend")->check(CLI::IsMember({"dense", "sparse"}));
    app.add_option("--output", output, "Print kets or list the raw state")->check(CLI::IsMember({"print", "state"}));
    app.add_option("--method", method, "Report amplitudes or probabilities")->check(CLI::IsMember({"amp", "prob"}));
    app.add_option("--budget", config.memory_budget,
                   std::string("Dense memory budget in complex entries (env ") + kBudgetEnvVar + ")");
    app.add_option("--bench", bench_dir, "Benchmark every .qasm file in a directory");
    app.add_option("--csv", csv_path, "Write the benchmark table as CSV");
    app.add_flag("--forward", config.forward, "Apply moments front to back instead of accumulating operators");
    app.add_flag("--no-time", no_time, "Omit the elapsed-time lines");
    app.add_flag("--trace", config.trace, "Trace execution to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    int sources = !config.input.empty() + !config.template_name.empty() + !bench_dir.empty();
    if (sources != 1) {
        err << "error: give exactly one of an input file, --template or --bench\n";
        return 2;
    }
    config.backend = parse_backend(backend);
    config.output_type = output == "state" ? OutputType::State : OutputType::Print;
    config.output_method = method == "prob" ? OutputMethod::Probability : OutputMethod::Amplitude;
    config.time_report = !no_time;

    try {
        if (!bench_dir.empty()) {
            auto rows = bench(bench_dir, config.backend, config.memory_budget);
            out << bench_table(rows);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path, std::ios::binary);
                if (!csv) {
                    throw Error("cannot write '" + csv_path + "'");
                }
                csv << bench_csv(rows);
            }
            return 0;
        }
        run_once(config, out);
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace quditsim::cli
