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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "quditsim/linalg.h"

namespace quditsim {

enum class GateKind {
    NotX,
    PhaseZ,
    HadamardF,
    ControlledX,
    MultiControlledX,
    Custom,
    Identity,
    Measurement,
};

std::string_view gate_kind_name(GateKind kind);

/// Description of one gate application.
///
/// `wires` lists the acting wires in gate order (controls first, target last
/// for the controlled kinds) and `dims` their dimensions in the same order.
/// `shift` is the basis increment of the X-type kinds and is ignored otherwise.
struct GateSpec {
    GateKind kind = GateKind::Identity;
    std::vector<std::size_t> wires;
    Index shift = 0;
    std::vector<Index> dims;
};

/// Throws ParameterError if the spec violates the gate's invariants.
void validate(const GateSpec &spec);

/// Square unitary matrix over `dim` basis states.
struct Unitary {
    Matrix matrix;
    Index dim = 0;
};

/// omega^k with omega = exp(2 pi i / d), exact at the quarter turns.
Complex root_of_unity(Index d, Index k);

/// |x> -> |(x + a) mod d>.
Unitary x_gate(Index d, Index a);
/// diag(1, w, ..., w^(d-1)).
Unitary z_gate(Index d);
/// Discrete Fourier matrix F[j,k] = w^(jk) / sqrt(d). Stored dense.
Unitary h_gate(Index d);
/// Increments the target by `a` when the control holds d_control - 1.
Unitary cx_gate(Index d_control, Index d_target, Index a);
/// Increments the target by `a` when every control holds its top level.
Unitary mct_gate(std::span<const Index> control_dims, Index d_target, Index a);
Unitary identity_gate(Index d);
/// Accepts any square matrix that is unitary within `tolerance`.
Unitary custom_gate(Matrix matrix, double tolerance = 1e-10);

/// Unitary of `spec` over its wires in spec order. Custom gates need
/// `custom_matrix`; Measurement has no unitary and throws ParameterError.
Unitary gate_unitary(const GateSpec &spec, const Matrix *custom_matrix = nullptr);

/// Lifts `u`, which acts on the span positions `positions` (in gate order),
/// to the whole contiguous span described by `span_dims`. Positions not listed
/// get identities.
Unitary embed(const Unitary &u, std::span<const Index> span_dims, std::span<const std::size_t> positions);

/// Controlled increment across a contiguous span, built as
/// sum_k P_k(control) ⊗ (X^a if k = d_c - 1 else I)(target) ⊗ I(rest).
/// Control may sit above or below the target.
Unitary embed_two_wire(Index d_control, Index d_target, Index a, std::span<const Index> span_dims,
                       std::size_t control_position, std::size_t target_position);

/// max |U†U - I| over all entries.
double unitarity_error(const Matrix &m);

}  // namespace quditsim
