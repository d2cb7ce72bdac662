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

#include <optional>
#include <string>
#include <string_view>

#include "quditsim/linalg.h"

namespace quditsim {

enum class BackendKind { Dense, Sparse };

std::string_view backend_name(BackendKind kind);
/// "dense" or "sparse"; ParameterError otherwise.
BackendKind parse_backend(std::string_view name);

/// Default dense budget, in complex entries.
inline constexpr Index kDefaultMemoryBudget = Index{1} << 31;
/// Environment variable that overrides the default budget.
inline constexpr const char *kBudgetEnvVar = "QUDITSIM_BUDGET";

/// kDefaultMemoryBudget unless QUDITSIM_BUDGET holds a positive integer.
Index default_memory_budget();

struct CapacityReport {
    bool ok = true;
    Index required = 0;
    Index available = 0;
    std::string explanation;
};

/// Arithmetic kernels bound to one storage format.
///
/// The executor only talks to this interface, so new kinds (e.g. accelerator
/// backends) plug in by adding a subclass and a BackendKind value.
class KernelSet {
   public:
    virtual ~KernelSet() = default;

    virtual BackendKind kind() const = 0;

    /// Converts an operator into this backend's preferred storage.
    virtual Matrix adopt(const Matrix &m) const = 0;
    virtual Matrix identity(Index n) const = 0;
    virtual Vector basis_state(Index n, Index k) const = 0;

    virtual Matrix kron(const Matrix &a, const Matrix &b) const = 0;
    virtual Matrix matmul(const Matrix &a, const Matrix &b) const = 0;
    virtual Vector matvec(const Matrix &a, const Vector &v) const = 0;
    /// (I_left ⊗ u ⊗ I_right) v.
    virtual Vector apply_local(const Matrix &u, Index left, Index right, const Vector &v) const = 0;

    virtual CapacityReport capacity_check(Index state_dim, Index budget) const = 0;
};

/// Stateless process-wide kernel set for `kind`.
const KernelSet &select_backend(BackendKind kind);

/// Dense refuses when state_dim^2 exceeds `budget`; sparse refuses only when
/// state_dim leaves the index range.
CapacityReport capacity_check(BackendKind kind, Index state_dim, Index budget = default_memory_budget());

}  // namespace quditsim
