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

#include "quditsim/circuit.h"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <string>

#include "quditsim/errors.h"

namespace quditsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Index> checked_init_states(const std::vector<Index> &qregs, std::vector<Index> init) {
    if (qregs.empty()) {
        throw ParameterError("a circuit needs at least one wire");
    }
    for (std::size_t w = 0; w < qregs.size(); w++) {
        if (qregs[w] < 2) {
            throw ParameterError("wire " + std::to_string(w) + " has dimension " + std::to_string(qregs[w]) +
                                 "; dimensions must be at least 2");
        }
    }
    if (init.empty()) {
        init.assign(qregs.size(), 0);
    }
    if (init.size() != qregs.size()) {
        throw ParameterError("init_states has " + std::to_string(init.size()) + " entries for " +
                             std::to_string(qregs.size()) + " wires");
    }
    for (std::size_t w = 0; w < qregs.size(); w++) {
        if (init[w] >= qregs[w]) {
            throw ParameterError("init level " + std::to_string(init[w]) + " out of range on wire " +
                                 std::to_string(w) + " of dimension " + std::to_string(qregs[w]));
        }
    }
    // Reject registers whose state space does not fit the index range.
    state_dimension(qregs);
    return init;
}

}  // namespace

std::shared_ptr<const Gate> make_gate(GateSpec spec, std::span<const Index> qregs, const Matrix *custom_matrix) {
    for (std::size_t w : spec.wires) {
        if (w >= qregs.size()) {
            throw IndexError("wire " + std::to_string(w) + " out of range for a " + std::to_string(qregs.size()) +
                             "-wire register");
        }
    }
    spec.dims.clear();
    for (std::size_t w : spec.wires) {
        spec.dims.push_back(qregs[w]);
    }
    Gate gate;
    gate.local = gate_unitary(spec, custom_matrix);
    auto [lo, hi] = std::minmax_element(spec.wires.begin(), spec.wires.end());
    gate.first_wire = *lo;
    gate.last_wire = *hi;
    auto span_dims = qregs.subspan(gate.first_wire, gate.last_wire - gate.first_wire + 1);
    if (spec.kind == GateKind::ControlledX) {
        gate.span = embed_two_wire(spec.dims[0], spec.dims[1], spec.shift, span_dims,
                                   spec.wires[0] - gate.first_wire, spec.wires[1] - gate.first_wire);
    } else {
        std::vector<std::size_t> positions;
        for (std::size_t w : spec.wires) {
            positions.push_back(w - gate.first_wire);
        }
        gate.span = embed(gate.local, span_dims, positions);
    }
    gate.spec = std::move(spec);
    return std::make_shared<const Gate>(std::move(gate));
}

// --------------------------------------------------------------------- Moment

Moment::Moment(std::size_t width) : slots_(width, IdentitySlot{}) {}

Moment Moment::init(std::span<const Index> levels) {
    Moment m(levels.size());
    for (std::size_t w = 0; w < levels.size(); w++) {
        m.slots_[w] = InitState{levels[w]};
    }
    return m;
}

Moment Moment::measurement(std::size_t width) {
    Moment m(width);
    std::fill(m.slots_.begin(), m.slots_.end(), WireSlot{MeasurementFlag{}});
    return m;
}

bool Moment::is_free(std::size_t first, std::size_t last) const {
    if (last >= slots_.size() || first > last) {
        return false;
    }
    for (std::size_t w = first; w <= last; w++) {
        if (!std::holds_alternative<IdentitySlot>(slots_[w])) {
            return false;
        }
    }
    return true;
}

void Moment::place(std::shared_ptr<const Gate> gate) {
    if (!is_free(gate->first_wire, gate->last_wire)) {
        throw ConsistencyError("span " + std::to_string(gate->first_wire) + ".." + std::to_string(gate->last_wire) +
                               " collides with an occupied slot");
    }
    std::size_t anchor = gate->first_wire;
    for (std::size_t w = anchor + 1; w <= gate->last_wire; w++) {
        slots_[w] = SpanMarker{anchor};
    }
    slots_[anchor] = GateAnchor{std::move(gate)};
}

bool Moment::is_init() const {
    return !slots_.empty() && std::all_of(slots_.begin(), slots_.end(), [](const WireSlot &s) {
        return std::holds_alternative<InitState>(s);
    });
}

bool Moment::is_measurement() const {
    return !slots_.empty() && std::all_of(slots_.begin(), slots_.end(), [](const WireSlot &s) {
        return std::holds_alternative<MeasurementFlag>(s);
    });
}

bool Moment::is_identity() const {
    return std::all_of(slots_.begin(), slots_.end(),
                       [](const WireSlot &s) { return std::holds_alternative<IdentitySlot>(s); });
}

std::vector<std::shared_ptr<const Gate>> Moment::gates() const {
    std::vector<std::shared_ptr<const Gate>> out;
    for (const auto &s : slots_) {
        if (const auto *a = std::get_if<GateAnchor>(&s)) {
            out.push_back(a->gate);
        }
    }
    return out;
}

// --------------------------------------------------------------- OperatorFlow

OperatorFlow::OperatorFlow(std::span<const Index> init_levels) { moments_.push_back(Moment::init(init_levels)); }

std::optional<std::size_t> OperatorFlow::push(std::shared_ptr<const Gate> gate, bool compact) {
    if (sealed_) {
        return std::nullopt;
    }
    std::size_t width = moments_.front().width();
    if (gate->last_wire >= width) {
        throw IndexError("gate span reaches wire " + std::to_string(gate->last_wire) + " of a " +
                         std::to_string(width) + "-wire flow");
    }
    std::optional<std::size_t> target;
    if (compact) {
        for (std::size_t k = moments_.size() - 1; k >= 1; k--) {
            if (!moments_[k].is_free(gate->first_wire, gate->last_wire)) {
                break;
            }
            target = k;
        }
    }
    if (!target) {
        moments_.emplace_back(width);
        target = moments_.size() - 1;
    }
    moments_[*target].place(std::move(gate));
    return target;
}

void OperatorFlow::seal() {
    if (sealed_) {
        return;
    }
    moments_.push_back(Moment::measurement(moments_.front().width()));
    sealed_ = true;
}

std::size_t OperatorFlow::depth() const {
    return static_cast<std::size_t>(std::count_if(moments_.begin(), moments_.end(), [](const Moment &m) {
        return !m.is_init() && !m.is_measurement() && !m.is_identity();
    }));
}

// ------------------------------------------------------------ moment_unitary

Matrix moment_unitary(const Moment &moment, std::span<const Index> qregs, const KernelSet &kernels) {
    if (moment.width() != qregs.size()) {
        throw ShapeError("moment width " + std::to_string(moment.width()) + " does not match " +
                         std::to_string(qregs.size()) + " wires");
    }
    std::optional<Matrix> acc;
    Index pending_identity = 1;
    auto flush_identity = [&] {
        if (pending_identity > 1) {
            Matrix id = kernels.identity(pending_identity);
            acc = acc ? kernels.kron(*acc, id) : std::move(id);
        }
        pending_identity = 1;
    };
    for (std::size_t w = 0; w < moment.width();) {
        const WireSlot &slot = moment[w];
        if (std::holds_alternative<IdentitySlot>(slot)) {
            pending_identity = checked_mul(pending_identity, qregs[w]);
            w++;
        } else if (const auto *anchor = std::get_if<GateAnchor>(&slot)) {
            flush_identity();
            const Gate &g = *anchor->gate;
            for (std::size_t c = g.first_wire + 1; c <= g.last_wire; c++) {
                const auto *marker = std::get_if<SpanMarker>(&moment[c]);
                if (marker == nullptr || marker->anchor_wire != w) {
                    throw ConsistencyError("wire " + std::to_string(c) + " is not covered by the gate anchored at " +
                                           std::to_string(w));
                }
            }
            Matrix u = kernels.adopt(g.span.matrix);
            acc = acc ? kernels.kron(*acc, u) : std::move(u);
            w = g.last_wire + 1;
        } else if (std::holds_alternative<SpanMarker>(slot)) {
            throw ConsistencyError("span marker on wire " + std::to_string(w) + " has no anchor");
        } else {
            throw ConsistencyError("init and measurement moments have no unitary");
        }
    }
    if (pending_identity > 1 || !acc) {
        flush_identity();
    }
    if (!acc) {
        acc = kernels.identity(1);
    }
    return *std::move(acc);
}

Unitary moment_unitary(const Moment &moment, std::span<const Index> qregs, BackendKind backend) {
    Matrix m = moment_unitary(moment, qregs, select_backend(backend));
    Index dim = rows(m);
    return {std::move(m), dim};
}

// ------------------------------------------------------------- QuantumCircuit

QuantumCircuit::QuantumCircuit(std::vector<Index> qregs, std::vector<Index> init_states, BackendKind backend,
                               std::string name)
    : qregs_(std::move(qregs)),
      init_states_(checked_init_states(qregs_, std::move(init_states))),
      backend_(backend),
      name_(std::move(name)),
      memory_budget_(default_memory_budget()),
      flow_(init_states_) {}

Index QuantumCircuit::dimension() const { return state_dimension(qregs_); }

Index QuantumCircuit::initial_index() const { return basis_index(init_states_, qregs_); }

QuantumCircuit &QuantumCircuit::push(GateSpec spec, const Matrix *custom_matrix) {
    if (flow_.sealed()) {
        return *this;
    }
    auto start = Clock::now();
    auto gate = make_gate(std::move(spec), qregs_, custom_matrix);
    flow_.push(gate, compaction_);
    gates_.push_back(std::move(gate));
    build_seconds_ += seconds_since(start);
    return *this;
}

QuantumCircuit &QuantumCircuit::x(std::size_t wire, Index plus) {
    return push({GateKind::NotX, {wire}, plus, {}});
}

QuantumCircuit &QuantumCircuit::z(std::size_t wire) { return push({GateKind::PhaseZ, {wire}, 0, {}}); }

QuantumCircuit &QuantumCircuit::h(std::size_t wire) { return push({GateKind::HadamardF, {wire}, 0, {}}); }

QuantumCircuit &QuantumCircuit::cx(std::array<std::size_t, 2> wires, Index plus) {
    return push({GateKind::ControlledX, {wires[0], wires[1]}, plus, {}});
}

QuantumCircuit &QuantumCircuit::mct(std::vector<std::size_t> controls, std::size_t target, Index plus) {
    controls.push_back(target);
    return push({GateKind::MultiControlledX, std::move(controls), plus, {}});
}

QuantumCircuit &QuantumCircuit::custom(std::vector<std::size_t> wires, Matrix matrix) {
    return push({GateKind::Custom, std::move(wires), 0, {}}, &matrix);
}

QuantumCircuit &QuantumCircuit::toffoli(std::array<std::size_t, 3> wires, Index plus) {
    auto [c1, c2, t] = wires;
    for (std::size_t w : wires) {
        if (w >= qregs_.size()) {
            throw IndexError("wire " + std::to_string(w) + " out of range for a " + std::to_string(qregs_.size()) +
                             "-wire register");
        }
    }
    if (c1 == c2 || c2 == t || c1 == t) {
        throw ParameterError("toffoli wires must be distinct");
    }
    Index middle = qregs_[c2];
    if (middle < 3) {
        throw DecompositionError("toffoli decomposition needs a middle wire of dimension >= 3 (wire " +
                                 std::to_string(c2) + " has " + std::to_string(middle) +
                                 "); use mct for a direct multi-controlled gate");
    }
    if (plus < 1 || plus >= qregs_[t]) {
        throw ParameterError("shift " + std::to_string(plus) + " outside [1, " + std::to_string(qregs_[t] - 1) +
                             "] for the toffoli target");
    }
    // Lift the middle wire to its top level only when it held |1> and c1 is
    // active, fire the target from there, then undo the lift.
    Index lift = middle - 2;
    cx({c1, c2}, lift);
    cx({c2, t}, plus);
    cx({c1, c2}, middle - lift);
    return *this;
}

QuantumCircuit &QuantumCircuit::measure_all() {
    flow_.seal();
    return *this;
}

void QuantumCircuit::check_capacity() const {
    CapacityReport report = capacity_check(backend_, dimension(), memory_budget_);
    if (!report.ok) {
        throw CapacityError(report.explanation);
    }
}

std::vector<std::size_t> QuantumCircuit::gate_moment_indices() const {
    std::vector<std::size_t> out;
    const auto &moments = flow_.moments();
    for (std::size_t k = 0; k < moments.size(); k++) {
        const Moment &m = moments[k];
        if (!m.is_init() && !m.is_measurement() && !m.is_identity()) {
            out.push_back(k);
        }
    }
    return out;
}

ResultSet QuantumCircuit::run() {
    measure_all();
    check_capacity();
    const KernelSet &kernels = select_backend(backend_);
    auto start = Clock::now();
    Vector psi0 = kernels.basis_state(dimension(), initial_index());
    std::vector<std::size_t> order = gate_moment_indices();
    Vector state;
    if (order.empty()) {
        state = std::move(psi0);
    } else {
        std::size_t current = order.back();
        try {
            Matrix acc = moment_unitary(flow_.moments()[current], qregs_, kernels);
            for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
                current = *it;
                Matrix next = moment_unitary(flow_.moments()[current], qregs_, kernels);
                acc = kernels.matmul(acc, next);
                if (trace_ != nullptr) {
                    *trace_ << "moment " << current << ": accumulated operator holds " << stored_entries(acc)
                            << " entries\n";
                }
            }
            state = kernels.matvec(acc, psi0);
        } catch (const CapacityError &e) {
            throw CapacityError("moment " + std::to_string(current) + ": " + e.what());
        }
    }
    ResultSet result = make_result(to_sparse(state), qregs_);
    result.execute_seconds = seconds_since(start);
    result.load_seconds = build_seconds_;
    return result;
}

ResultSet QuantumCircuit::execute_forward() {
    measure_all();
    check_capacity();
    const KernelSet &kernels = select_backend(backend_);
    auto start = Clock::now();
    Vector state = kernels.basis_state(dimension(), initial_index());
    for (std::size_t k : gate_moment_indices()) {
        try {
            for (const auto &gate : flow_.moments()[k].gates()) {
                Index left = state_dimension(std::span(qregs_).first(gate->first_wire));
                Index right = state_dimension(std::span(qregs_).subspan(gate->last_wire + 1));
                state = kernels.apply_local(kernels.adopt(gate->span.matrix), left, right, state);
            }
        } catch (const CapacityError &e) {
            throw CapacityError("moment " + std::to_string(k) + ": " + e.what());
        }
        if (trace_ != nullptr) {
            *trace_ << "moment " << k << ": state holds " << length(state) << " slots\n";
        }
    }
    ResultSet result = make_result(to_sparse(state), qregs_);
    result.execute_seconds = seconds_since(start);
    result.load_seconds = build_seconds_;
    return result;
}

}  // namespace quditsim
