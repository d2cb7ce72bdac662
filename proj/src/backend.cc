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

#include "quditsim/backend.h"

#include <cstdlib>
#include <string>

#include "quditsim/errors.h"

namespace quditsim {

namespace {

class DenseKernels final : public KernelSet {
   public:
    BackendKind kind() const override { return BackendKind::Dense; }

    Matrix adopt(const Matrix &m) const override { return to_dense(m); }
    Matrix identity(Index n) const override { return dense_identity(n); }
    Vector basis_state(Index n, Index k) const override { return basis_vector(n, k).to_dense(); }

    Matrix kron(const Matrix &a, const Matrix &b) const override {
        return quditsim::kron(to_dense(a), to_dense(b));
    }
    Matrix matmul(const Matrix &a, const Matrix &b) const override {
        return quditsim::matmul(to_dense(a), to_dense(b));
    }
    Vector matvec(const Matrix &a, const Vector &v) const override {
        return quditsim::matvec(to_dense(a), to_dense(v));
    }
    Vector apply_local(const Matrix &u, Index left, Index right, const Vector &v) const override {
        return quditsim::apply_local(to_dense(u), left, right, to_dense(v));
    }

    CapacityReport capacity_check(Index state_dim, Index budget) const override {
        Index required;
        if (__builtin_mul_overflow(state_dim, state_dim, &required)) {
            required = kMaxIndex;
        }
        if (required > budget) {
            return {false, required, budget,
                    "dense backend needs " + std::to_string(required) + " complex entries for a " +
                        std::to_string(state_dim) + "-dimensional operator but the budget is " +
                        std::to_string(budget)};
        }
        return {true, required, budget, ""};
    }
};

class SparseKernels final : public KernelSet {
   public:
    BackendKind kind() const override { return BackendKind::Sparse; }

    Matrix adopt(const Matrix &m) const override { return to_sparse(m); }
    Matrix identity(Index n) const override { return quditsim::identity(n); }
    Vector basis_state(Index n, Index k) const override { return basis_vector(n, k); }

    Matrix kron(const Matrix &a, const Matrix &b) const override {
        return quditsim::kron(to_sparse(a), to_sparse(b));
    }
    Matrix matmul(const Matrix &a, const Matrix &b) const override {
        return quditsim::matmul(to_sparse(a), to_sparse(b));
    }
    Vector matvec(const Matrix &a, const Vector &v) const override {
        return quditsim::matvec(to_sparse(a), to_sparse(v));
    }
    Vector apply_local(const Matrix &u, Index left, Index right, const Vector &v) const override {
        return quditsim::apply_local(to_sparse(u), left, right, to_sparse(v));
    }

    CapacityReport capacity_check(Index state_dim, Index budget) const override {
        if (state_dim > kMaxIndex) {
            return {false, state_dim, kMaxIndex, "state dimension exceeds the 64-bit index range"};
        }
        return {true, state_dim, budget, ""};
    }
};

}  // namespace

std::string_view backend_name(BackendKind kind) { return kind == BackendKind::Dense ? "dense" : "sparse"; }

BackendKind parse_backend(std::string_view name) {
    if (name == "dense") {
        return BackendKind::Dense;
    }
    if (name == "sparse") {
        return BackendKind::Sparse;
    }
    throw ParameterError("unknown backend '" + std::string(name) + "' (expected dense or sparse)");
}

Index default_memory_budget() {
    if (const char *env = std::getenv(kBudgetEnvVar)) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<Index>(v);
        }
    }
    return kDefaultMemoryBudget;
}

const KernelSet &select_backend(BackendKind kind) {
    static const DenseKernels dense;
    static const SparseKernels sparse;
    if (kind == BackendKind::Dense) {
        return dense;
    }
    return sparse;
}

CapacityReport capacity_check(BackendKind kind, Index state_dim, Index budget) {
    return select_backend(kind).capacity_check(state_dim, budget);
}

}  // namespace quditsim
