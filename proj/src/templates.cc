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

#include "quditsim/templates.h"

#include <string>

#include "quditsim/errors.h"

namespace quditsim::templates {

namespace {

// Phase flip on |11>.
Matrix controlled_z() {
    return SparseMatrix::from_triplets(
        4, 4, {{0, 0, Complex{1, 0}}, {1, 1, Complex{1, 0}}, {2, 2, Complex{1, 0}}, {3, 3, Complex{-1, 0}}});
}

}  // namespace

QuantumCircuit grover_n2(BackendKind backend) {
    QuantumCircuit qc({2, 2}, {}, backend, "grover_n2");
    qc.h(0).h(1);
    qc.custom({0, 1}, controlled_z());
    // Diffusion: inversion about the mean.
    qc.h(0).h(1);
    qc.x(0).x(1);
    qc.custom({0, 1}, controlled_z());
    qc.x(0).x(1);
    qc.h(0).h(1);
    qc.measure_all();
    return qc;
}

QuantumCircuit bernstein_vazirani(std::string_view secret, BackendKind backend) {
    if (secret.empty()) {
        throw ParameterError("Bernstein-Vazirani needs a nonempty secret");
    }
    for (char c : secret) {
        if (c != '0' && c != '1') {
            throw ParameterError("secret '" + std::string(secret) + "' must contain only 0 and 1");
        }
    }
    std::size_t n = secret.size();
    QuantumCircuit qc(std::vector<Index>(n + 1, 2), {}, backend, "bv:" + std::string(secret));
    qc.x(n);
    for (std::size_t w = 0; w <= n; w++) {
        qc.h(w);
    }
    for (std::size_t w = 0; w < n; w++) {
        if (secret[w] == '1') {
            qc.cx({w, n});
        }
    }
    for (std::size_t w = 0; w <= n; w++) {
        qc.h(w);
    }
    qc.measure_all();
    return qc;
}

QuantumCircuit by_name(std::string_view name, BackendKind backend) {
    if (name == "grover_n2") {
        return grover_n2(backend);
    }
    if (name.starts_with("bv:")) {
        return bernstein_vazirani(name.substr(3), backend);
    }
    throw ParameterError("unknown template '" + std::string(name) + "' (expected grover_n2 or bv:<secret>)");
}

}  // namespace quditsim::templates
