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

#include <string_view>

#include "quditsim/backend.h"
#include "quditsim/circuit.h"

namespace quditsim::templates {

/// Two-qubit Grover search for |11> with one oracle + diffusion round.
QuantumCircuit grover_n2(BackendKind backend = BackendKind::Sparse);

/// Bernstein-Vazirani over `secret` (a string of '0'/'1'): n data qubits
/// followed by one ancilla. The data wires read back the secret.
QuantumCircuit bernstein_vazirani(std::string_view secret, BackendKind backend = BackendKind::Sparse);

/// Resolves "grover_n2" or "bv:<secret>"; ParameterError otherwise.
QuantumCircuit by_name(std::string_view name, BackendKind backend = BackendKind::Sparse);

}  // namespace quditsim::templates
