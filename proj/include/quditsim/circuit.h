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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "quditsim/backend.h"
#include "quditsim/gates.h"
#include "quditsim/linalg.h"
#include "quditsim/result.h"

namespace quditsim {

/// A gate bound to concrete wires, with its unitary lifted over the
/// contiguous span first_wire..last_wire.
struct Gate {
    GateSpec spec;
    Unitary local;
    Unitary span;
    std::size_t first_wire = 0;
    std::size_t last_wire = 0;
};

/// Resolves dims from `qregs`, validates and builds both unitaries.
std::shared_ptr<const Gate> make_gate(GateSpec spec, std::span<const Index> qregs,
                                      const Matrix *custom_matrix = nullptr);

struct InitState {
    Index level = 0;
};
struct GateAnchor {
    std::shared_ptr<const Gate> gate;
};
/// Wire covered by the span of the gate anchored at `anchor_wire`.
struct SpanMarker {
    std::size_t anchor_wire = 0;
};
struct IdentitySlot {};
struct MeasurementFlag {};

using WireSlot = std::variant<InitState, GateAnchor, SpanMarker, IdentitySlot, MeasurementFlag>;

/// One time slice: exactly one slot per wire.
class Moment {
   public:
    /// All-identity moment.
    explicit Moment(std::size_t width);

    static Moment init(std::span<const Index> levels);
    static Moment measurement(std::size_t width);

    std::size_t width() const { return slots_.size(); }
    const WireSlot &operator[](std::size_t wire) const { return slots_.at(wire); }

    /// True when every slot in [first, last] is an identity.
    bool is_free(std::size_t first, std::size_t last) const;
    /// Anchors `gate` at its first wire and marks the rest of its span.
    /// ConsistencyError if any slot of the span is taken.
    void place(std::shared_ptr<const Gate> gate);

    bool is_init() const;
    bool is_measurement() const;
    bool is_identity() const;
    std::vector<std::shared_ptr<const Gate>> gates() const;

   private:
    std::vector<WireSlot> slots_;
};

/// Ordered list of moments; moments()[0] holds the init states.
class OperatorFlow {
   public:
    explicit OperatorFlow(std::span<const Index> init_levels);

    const std::vector<Moment> &moments() const { return moments_; }
    bool sealed() const { return sealed_; }

    /// Places the gate and returns the moment index, or nullopt once sealed.
    /// With compaction the gate slides back through predecessor moments while
    /// its whole span is identity there.
    std::optional<std::size_t> push(std::shared_ptr<const Gate> gate, bool compact = true);
    /// Appends the measurement moment; idempotent.
    void seal();
    /// Number of moments holding at least one gate.
    std::size_t depth() const;

   private:
    std::vector<Moment> moments_;
    bool sealed_ = false;
};

/// Kronecker flattening of a gate moment over wires 0..width-1, in the
/// given backend's storage.
Matrix moment_unitary(const Moment &moment, std::span<const Index> qregs, const KernelSet &kernels);
Unitary moment_unitary(const Moment &moment, std::span<const Index> qregs,
                       BackendKind backend = BackendKind::Sparse);

/// Mixed-dimension register plus its operator flow.
class QuantumCircuit {
   public:
    /// Empty `init_states` means all |0>.
    explicit QuantumCircuit(std::vector<Index> qregs, std::vector<Index> init_states = {},
                            BackendKind backend = BackendKind::Sparse, std::string name = {});

    const std::vector<Index> &qregs() const { return qregs_; }
    const std::vector<Index> &init_states() const { return init_states_; }
    const std::string &name() const { return name_; }
    std::size_t width() const { return qregs_.size(); }
    Index dimension() const;

    BackendKind backend() const { return backend_; }
    void set_backend(BackendKind kind) { backend_ = kind; }
    Index memory_budget() const { return memory_budget_; }
    void set_memory_budget(Index budget) { memory_budget_ = budget; }
    bool compaction() const { return compaction_; }
    /// Only affects later pushes.
    void set_compaction(bool enabled) { compaction_ = enabled; }
    /// Per-moment execution trace goes to `out` when non-null.
    void set_trace(std::ostream *out) { trace_ = out; }

    const OperatorFlow &flow() const { return flow_; }
    /// Gates accepted so far, in push order.
    const std::vector<std::shared_ptr<const Gate>> &gates() const { return gates_; }
    bool sealed() const { return flow_.sealed(); }
    Index initial_index() const;
    /// Seconds spent constructing gate unitaries so far.
    double build_seconds() const { return build_seconds_; }

    QuantumCircuit &push(GateSpec spec, const Matrix *custom_matrix = nullptr);
    QuantumCircuit &x(std::size_t wire, Index plus = 1);
    QuantumCircuit &z(std::size_t wire);
    QuantumCircuit &h(std::size_t wire);
    QuantumCircuit &cx(std::array<std::size_t, 2> wires, Index plus = 1);
    QuantumCircuit &mct(std::vector<std::size_t> controls, std::size_t target, Index plus = 1);
    QuantumCircuit &custom(std::vector<std::size_t> wires, Matrix matrix);
    /// Three-CX decomposition through an intermediate qutrit level on the
    /// middle wire, which must have dimension >= 3.
    QuantumCircuit &toffoli(std::array<std::size_t, 3> wires, Index plus = 1);
    QuantumCircuit &measure_all();

    /// Seals the flow, multiplies the flattened moments last to first and
    /// finishes with one matrix-vector product against the init state.
    ResultSet run();
    /// Seals the flow and applies each moment to the state front to back.
    ResultSet execute_forward();

   private:
    void check_capacity() const;
    std::vector<std::size_t> gate_moment_indices() const;

    std::vector<Index> qregs_;
    std::vector<Index> init_states_;
    BackendKind backend_;
    std::string name_;
    Index memory_budget_;
    bool compaction_ = true;
    std::ostream *trace_ = nullptr;
    OperatorFlow flow_;
    std::vector<std::shared_ptr<const Gate>> gates_;
    double build_seconds_ = 0;
};

}  // namespace quditsim
