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

#include "quditsim/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quditsim/errors.h"

namespace quditsim {

namespace {

void require_dim(Index d) {
    if (d < 2) {
        throw ParameterError("qudit dimension must be at least 2, got " + std::to_string(d));
    }
}

void require_shift(Index d, Index a) {
    if (a < 1 || a > d - 1) {
        throw ParameterError("shift " + std::to_string(a) + " outside [1, " + std::to_string(d - 1) +
                             "] for dimension " + std::to_string(d));
    }
}

// Permutation matrix with a one at (target(x), x) for every column x.
template <typename F>
Unitary permutation(Index dim, F &&target) {
    std::vector<Triplet> ts;
    ts.reserve(dim);
    for (Index x = 0; x < dim; x++) {
        ts.push_back({target(x), x, Complex{1, 0}});
    }
    return {SparseMatrix::from_triplets(dim, dim, std::move(ts)), dim};
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::NotX:
            return "X";
        case GateKind::PhaseZ:
            return "Z";
        case GateKind::HadamardF:
            return "H";
        case GateKind::ControlledX:
            return "CX";
        case GateKind::MultiControlledX:
            return "MCT";
        case GateKind::Custom:
            return "U";
        case GateKind::Identity:
            return "I";
        case GateKind::Measurement:
            return "M";
    }
    return "?";
}

void validate(const GateSpec &spec) {
    if (spec.wires.size() != spec.dims.size()) {
        throw ParameterError("gate lists " + std::to_string(spec.wires.size()) + " wires but " +
                             std::to_string(spec.dims.size()) + " dimensions");
    }
    if (spec.wires.empty()) {
        throw ParameterError("gate acts on no wires");
    }
    for (Index d : spec.dims) {
        require_dim(d);
    }
    std::vector<std::size_t> sorted = spec.wires;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParameterError("gate wires must be distinct");
    }
    std::size_t arity = spec.wires.size();
    switch (spec.kind) {
        case GateKind::NotX:
        case GateKind::PhaseZ:
        case GateKind::HadamardF:
        case GateKind::Identity:
            if (arity != 1) {
                throw ParameterError(std::string(gate_kind_name(spec.kind)) + " acts on exactly one wire");
            }
            break;
        case GateKind::ControlledX:
            if (arity != 2) {
                throw ParameterError("CX acts on exactly two wires");
            }
            break;
        case GateKind::MultiControlledX:
            if (arity < 2) {
                throw ParameterError("multi-controlled X needs at least one control");
            }
            break;
        case GateKind::Custom:
        case GateKind::Measurement:
            break;
    }
    if (spec.kind == GateKind::NotX || spec.kind == GateKind::ControlledX ||
        spec.kind == GateKind::MultiControlledX) {
        require_shift(spec.dims.back(), spec.shift);
    }
}

Complex root_of_unity(Index d, Index k) {
    require_dim(d);
    Index m = k % d;
    if ((4 * m) % d == 0) {
        switch ((4 * m) / d) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(d));
}

Unitary x_gate(Index d, Index a) {
    require_dim(d);
    require_shift(d, a);
    return permutation(d, [&](Index x) { return (x + a) % d; });
}

Unitary z_gate(Index d) {
    require_dim(d);
    std::vector<Triplet> ts;
    for (Index k = 0; k < d; k++) {
        ts.push_back({k, k, root_of_unity(d, k)});
    }
    return {SparseMatrix::from_triplets(d, d, std::move(ts)), d};
}

Unitary h_gate(Index d) {
    require_dim(d);
    double norm = 1.0 / std::sqrt(static_cast<double>(d));
    DenseMatrix f(d, d);
    for (Index j = 0; j < d; j++) {
        for (Index k = 0; k < d; k++) {
            f(j, k) = root_of_unity(d, j * k) * norm;
        }
    }
    return {std::move(f), d};
}

Unitary cx_gate(Index d_control, Index d_target, Index a) {
    require_dim(d_control);
    require_dim(d_target);
    require_shift(d_target, a);
    Index active = d_control - 1;
    return permutation(d_control * d_target, [&](Index s) {
        Index x = s / d_target;
        Index y = s % d_target;
        return x == active ? x * d_target + (y + a) % d_target : s;
    });
}

Unitary mct_gate(std::span<const Index> control_dims, Index d_target, Index a) {
    if (control_dims.empty()) {
        throw ParameterError("multi-controlled X needs at least one control");
    }
    require_dim(d_target);
    require_shift(d_target, a);
    Index controls = 1;
    Index active = 0;
    for (Index d : control_dims) {
        require_dim(d);
        controls = checked_mul(controls, d);
        active = active * d + (d - 1);
    }
    return permutation(checked_mul(controls, d_target), [&](Index s) {
        Index c = s / d_target;
        Index y = s % d_target;
        return c == active ? c * d_target + (y + a) % d_target : s;
    });
}

Unitary identity_gate(Index d) {
    require_dim(d);
    return {identity(d), d};
}

double unitarity_error(const Matrix &m) {
    if (rows(m) != cols(m)) {
        throw ShapeError("unitarity check needs a square matrix");
    }
    Matrix product = matmul(dagger(m), m);
    if (std::holds_alternative<SparseMatrix>(product)) {
        return max_abs_diff(product, Matrix{identity(rows(m))});
    }
    return max_abs_diff(product, Matrix{dense_identity(rows(m))});
}

Unitary custom_gate(Matrix matrix, double tolerance) {
    if (rows(matrix) != cols(matrix) || rows(matrix) == 0) {
        throw ParameterError("custom gate matrix must be square and nonempty");
    }
    double err = unitarity_error(matrix);
    if (!(err <= tolerance)) {
        throw ParameterError("custom gate matrix is not unitary (|U^dag U - I| = " + std::to_string(err) + ")");
    }
    Index dim = rows(matrix);
    return {std::move(matrix), dim};
}

Unitary gate_unitary(const GateSpec &spec, const Matrix *custom_matrix) {
    validate(spec);
    switch (spec.kind) {
        case GateKind::NotX:
            return x_gate(spec.dims[0], spec.shift);
        case GateKind::PhaseZ:
            return z_gate(spec.dims[0]);
        case GateKind::HadamardF:
            return h_gate(spec.dims[0]);
        case GateKind::ControlledX:
            return cx_gate(spec.dims[0], spec.dims[1], spec.shift);
        case GateKind::MultiControlledX:
            return mct_gate(std::span(spec.dims).first(spec.dims.size() - 1), spec.dims.back(), spec.shift);
        case GateKind::Identity:
            return identity_gate(spec.dims[0]);
        case GateKind::Custom: {
            if (custom_matrix == nullptr) {
                throw ParameterError("custom gate has no matrix");
            }
            Index expected = 1;
            for (Index d : spec.dims) {
                expected = checked_mul(expected, d);
            }
            if (rows(*custom_matrix) != expected) {
                throw ParameterError("custom gate matrix is " + std::to_string(rows(*custom_matrix)) +
                                     "-dimensional but its wires span " + std::to_string(expected));
            }
            return custom_gate(*custom_matrix);
        }
        case GateKind::Measurement:
            break;
    }
    throw ParameterError("measurement has no unitary");
}

Unitary embed(const Unitary &u, std::span<const Index> span_dims, std::span<const std::size_t> positions) {
    std::size_t n = span_dims.size();
    Index local_dim = 1;
    for (std::size_t p : positions) {
        if (p >= n) {
            throw IndexError("position " + std::to_string(p) + " outside a span of " + std::to_string(n) + " wires");
        }
        local_dim = checked_mul(local_dim, span_dims[p]);
    }
    if (local_dim != u.dim) {
        throw ShapeError("operator dimension " + std::to_string(u.dim) + " does not match its wires (" +
                         std::to_string(local_dim) + ")");
    }
    Index span_dim = 1;
    for (Index d : span_dims) {
        span_dim = checked_mul(span_dim, d);
    }
    if (positions.size() == n && std::is_sorted(positions.begin(), positions.end())) {
        return u;
    }

    SparseMatrix su = to_sparse(u.matrix);
    std::vector<Index> digits(n);
    std::vector<Triplet> ts;
    ts.reserve(su.nnz() * (span_dim / u.dim));
    for (Index row = 0; row < span_dim; row++) {
        Index rem = row;
        for (std::size_t w = n; w-- > 0;) {
            digits[w] = rem % span_dims[w];
            rem /= span_dims[w];
        }
        Index local_row = 0;
        for (std::size_t p : positions) {
            local_row = local_row * span_dims[p] + digits[p];
        }
        for (Index k = su.offsets()[local_row]; k < su.offsets()[local_row + 1]; k++) {
            Index local_col = su.columns()[k];
            for (std::size_t i = positions.size(); i-- > 0;) {
                digits[positions[i]] = local_col % span_dims[positions[i]];
                local_col /= span_dims[positions[i]];
            }
            Index col = 0;
            for (std::size_t w = 0; w < n; w++) {
                col = col * span_dims[w] + digits[w];
            }
            ts.push_back({row, col, su.values()[k]});
        }
    }
    return {SparseMatrix::from_triplets(span_dim, span_dim, std::move(ts)), span_dim};
}

Unitary embed_two_wire(Index d_control, Index d_target, Index a, std::span<const Index> span_dims,
                       std::size_t control_position, std::size_t target_position) {
    std::size_t n = span_dims.size();
    if (control_position >= n || target_position >= n) {
        throw IndexError("control or target position outside a span of " + std::to_string(n) + " wires");
    }
    if (control_position == target_position) {
        throw ParameterError("control and target must differ");
    }
    if (span_dims[control_position] != d_control || span_dims[target_position] != d_target) {
        throw ShapeError("span dimensions disagree with the control/target dimensions");
    }
    SparseMatrix shift = std::get<SparseMatrix>(x_gate(d_target, a).matrix);
    Index span_dim = 1;
    for (Index d : span_dims) {
        span_dim = checked_mul(span_dim, d);
    }
    std::vector<Triplet> ts;
    for (Index k = 0; k < d_control; k++) {
        SparseMatrix term = identity(1);
        for (std::size_t w = 0; w < n; w++) {
            if (w == control_position) {
                term = kron(term, SparseMatrix::from_triplets(d_control, d_control, {{k, k, Complex{1, 0}}}));
            } else if (w == target_position && k == d_control - 1) {
                term = kron(term, shift);
            } else {
                term = kron(term, identity(span_dims[w]));
            }
        }
        for (Index r = 0; r < term.rows(); r++) {
            for (Index p = term.offsets()[r]; p < term.offsets()[r + 1]; p++) {
                ts.push_back({r, term.columns()[p], term.values()[p]});
            }
        }
    }
    return {SparseMatrix::from_triplets(span_dim, span_dim, std::move(ts)), span_dim};
}

}  // namespace quditsim
