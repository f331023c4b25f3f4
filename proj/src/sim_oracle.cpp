#include "octabound/sim_oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace octabound {

using namespace std::complex_literals;

namespace {

constexpr int kMaxQubits = 6;

int dimension(int num_qubits) {
    return 1 << num_qubits;
}

/// Scatter target-qubit bits into a full-register index. Qubit 0 is the most
/// significant bit.
int compose_index(int rest_bits, int target_bits, const std::vector<int>& targets,
                  int num_qubits) {
    int index = 0;
    int rest_pos = 0;
    for (int q = 0; q < num_qubits; ++q) {
        const int shift = num_qubits - 1 - q;
        auto it = std::find(targets.begin(), targets.end(), q);
        int bit;
        if (it != targets.end()) {
            const int t = static_cast<int>(it - targets.begin());
            bit = (target_bits >> (static_cast<int>(targets.size()) - 1 - t)) & 1;
        } else {
            bit = (rest_bits >> rest_pos) & 1;
            ++rest_pos;
        }
        index |= bit << shift;
    }
    return index;
}

/// op acting on the given qubits, embedded into the full register.
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& op, const std::vector<int>& targets,
                       int num_qubits) {
    const int m = static_cast<int>(targets.size());
    if (op.rows() != (1 << m) || op.cols() != (1 << m)) {
        throw std::invalid_argument("embed: operator size does not match target count");
    }
    for (int q : targets) {
        if (q < 0 || q >= num_qubits) {
            throw std::invalid_argument("embed: qubit index out of range");
        }
    }
    const int dim = dimension(num_qubits);
    const int rest = dim >> m;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (int r = 0; r < rest; ++r) {
        for (int a = 0; a < (1 << m); ++a) {
            for (int b = 0; b < (1 << m); ++b) {
                full(compose_index(r, a, targets, num_qubits),
                     compose_index(r, b, targets, num_qubits)) = op(a, b);
            }
        }
    }
    return full;
}

void conjugate_in_place(MultiQubitState& state, const Eigen::MatrixXcd& full) {
    state.rho = (full * state.rho * full.adjoint()).eval();
}

MultiQubitState partial_trace(const MultiQubitState& state, int qubit) {
    const int n = state.num_qubits;
    if (qubit < 0 || qubit >= n) {
        throw std::invalid_argument("partial_trace: qubit index out of range");
    }
    const int out_dim = dimension(n - 1);
    MultiQubitState out;
    out.num_qubits = n - 1;
    out.rho = Eigen::MatrixXcd::Zero(out_dim, out_dim);
    const int shift = n - 1 - qubit;
    for (int r = 0; r < out_dim; ++r) {
        for (int c = 0; c < out_dim; ++c) {
            // splice the traced bit back into both indices
            const int high_r = (r >> shift) << (shift + 1);
            const int low_r = r & ((1 << shift) - 1);
            const int high_c = (c >> shift) << (shift + 1);
            const int low_c = c & ((1 << shift) - 1);
            std::complex<double> s = 0.0;
            for (int k = 0; k < 2; ++k) {
                s += state.rho(high_r | (k << shift) | low_r, high_c | (k << shift) | low_c);
            }
            out.rho(r, c) = s;
        }
    }
    return out;
}

void apply_single_qubit_channel(MultiQubitState& state, const AffineChannel& channel, int qubit) {
    const auto kraus = kraus_operators(channel);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(state.rho.rows(), state.rho.cols());
    for (const auto& k : kraus) {
        if (k.isZero(0.0)) continue;
        const Eigen::MatrixXcd full = embed(k, {qubit}, state.num_qubits);
        acc += full * state.rho * full.adjoint();
    }
    state.rho = acc;
}

void apply_pair_noise(MultiQubitState& state, const PauliPairDistribution& dist, int control,
                      int target) {
    if (std::abs(dist.sum() - 1.0) > 1e-12) {
        throw std::invalid_argument("apply_pair_noise: distribution does not sum to 1");
    }
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(state.rho.rows(), state.rho.cols());
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double pr = dist.prob[4 * a + b];
            if (pr == 0.0) continue;
            const Eigen::MatrixXcd full =
                embed(pauli_matrix(static_cast<Pauli>(a)), {control}, state.num_qubits) *
                embed(pauli_matrix(static_cast<Pauli>(b)), {target}, state.num_qubits);
            acc += pr * full * state.rho * full.adjoint();
        }
    }
    state.rho = acc;
}

void apply_measure_with_correction(MultiQubitState& state, const MeasureStep& step) {
    Eigen::Matrix2cd proj_plus, proj_minus;
    if (step.basis == 'X') {
        proj_plus << 0.5, 0.5, 0.5, 0.5;
        proj_minus << 0.5, -0.5, -0.5, 0.5;
    } else if (step.basis == 'Z') {
        proj_plus << 1, 0, 0, 0;
        proj_minus << 0, 0, 0, 1;
    } else {
        throw std::invalid_argument("measure: basis must be X or Z");
    }
    const Eigen::MatrixXcd p0 = embed(proj_plus, {step.qubit}, state.num_qubits);
    const Eigen::MatrixXcd p1 = embed(proj_minus, {step.qubit}, state.num_qubits);
    const Eigen::MatrixXcd corr =
        embed(pauli_matrix(step.correction), {step.correction_qubit}, state.num_qubits);
    // Both outcomes kept, with the Pauli correction on the -1 branch.
    state.rho = (p0 * state.rho * p0.adjoint() +
                 corr * p1 * state.rho * p1.adjoint() * corr.adjoint())
                    .eval();
}

}  // namespace

MultiQubitState MultiQubitState::product(const std::vector<BlochVector>& states) {
    const int n = static_cast<int>(states.size());
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("MultiQubitState: need between 1 and 6 qubits");
    }
    MultiQubitState out;
    out.num_qubits = n;
    out.rho = bloch_to_density(states[0]);
    for (int q = 1; q < n; ++q) {
        const Eigen::MatrixXcd prev = out.rho;
        const Eigen::Matrix2cd next = bloch_to_density(states[q]);
        Eigen::MatrixXcd grown(prev.rows() * 2, prev.cols() * 2);
        for (int i = 0; i < prev.rows(); ++i) {
            for (int j = 0; j < prev.cols(); ++j) {
                grown.block<2, 2>(2 * i, 2 * j) = prev(i, j) * next;
            }
        }
        out.rho = grown;
    }
    return out;
}

BlochVector MultiQubitState::single_qubit_bloch() const {
    if (num_qubits != 1) {
        throw std::logic_error("single_qubit_bloch: more than one qubit remains");
    }
    return density_to_bloch(rho);
}

double MultiQubitState::trace() const {
    return rho.trace().real();
}

Eigen::Matrix2cd hadamard_gate() {
    return (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() / std::sqrt(2.0);
}

Eigen::Matrix2cd s_gate() {
    return (Eigen::Matrix2cd() << 1, 0, 0, 1i).finished();
}

Eigen::Matrix2cd phase_gate_unitary(double theta) {
    return (Eigen::Matrix2cd() << 1, 0, 0, std::exp(1i * theta)).finished();
}

Eigen::Matrix4cd cnot_gate() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I: return Eigen::Matrix2cd::Identity();
        case Pauli::X: return (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
        case Pauli::Y: return (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished();
        case Pauli::Z: return (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    }
    throw std::invalid_argument("pauli_matrix: unknown operator");
}

Eigen::Matrix2cd unitary_from_rotation(const Eigen::Matrix3d& r) {
    if ((r * r.transpose() - Eigen::Matrix3d::Identity()).norm() > 1e-10 ||
        r.determinant() < 0.0) {
        throw std::invalid_argument("unitary_from_rotation: not a proper rotation");
    }
    const Eigen::Quaterniond q(r);
    // U = w I - i (x X + y Y + z Z) conjugates Bloch vectors by r.
    return q.w() * Eigen::Matrix2cd::Identity() -
           1i * (q.x() * pauli_matrix(Pauli::X) + q.y() * pauli_matrix(Pauli::Y) +
                 q.z() * pauli_matrix(Pauli::Z));
}

Eigen::Matrix2cd ResourceSpec::gate_unitary() const {
    if (kind == ResourceKind::PhaseGate) {
        return phase_gate_unitary(theta);
    }
    return unitary_from_rotation(gate_rotation());
}

Circuit build_injection_circuit(InjectionVariant variant, const ResourceSpec& resource,
                                const LocationNoise& noise) {
    if (noise.variant != variant) {
        throw std::invalid_argument("build_injection_circuit: noise built for the other variant");
    }
    const bool gate = variant == InjectionVariant::GateResource;
    if (gate != resource.gate_resource()) {
        throw std::invalid_argument("build_injection_circuit: resource kind mismatch");
    }
    if (gate != noise.prep_before_gate.has_value()) {
        throw std::invalid_argument("build_injection_circuit: location 7 noise mismatch");
    }

    // Wire 0: resource / control. Wire 1: decoded Bell half (teleport
    // target). Wire 2: output.
    Circuit circuit;
    circuit.num_qubits = 3;
    circuit.input_qubit = 0;

    const BlochVector plus{1.0, 0.0, 0.0};
    const BlochVector zero{0.0, 0.0, 1.0};
    circuit.steps.push_back(PrepareStep{0, gate ? plus : resource.bloch});
    circuit.steps.push_back(PrepareStep{1, zero});
    circuit.steps.push_back(PrepareStep{2, zero});

    if (gate) {
        circuit.steps.push_back(ChannelStep{"7", 0, *noise.prep_before_gate});
        circuit.steps.push_back(
            UnitaryStep{"resource-gate", {0}, resource.gate_unitary()});
    }
    circuit.steps.push_back(ChannelStep{"1", 0, noise.resource});
    circuit.steps.push_back(ChannelStep{"control-input", 0, noise.control_input});

    // Bell pair on wires 1-2.
    circuit.steps.push_back(UnitaryStep{"H", {1}, hadamard_gate()});
    circuit.steps.push_back(UnitaryStep{"CNOT", {1, 2}, cnot_gate()});
    circuit.steps.push_back(ChannelStep{"4", 1, noise.target_input});

    circuit.steps.push_back(UnitaryStep{"CNOT", {0, 1}, cnot_gate()});
    circuit.steps.push_back(PairNoiseStep{0, 1, noise.cnot_pair});  // locations 2,5

    circuit.steps.push_back(ChannelStep{"3", 0, noise.before_x_meas});
    circuit.steps.push_back(ChannelStep{"6", 1, noise.before_z_meas});

    circuit.steps.push_back(MeasureStep{'X', 0, Pauli::Z, 2});
    circuit.steps.push_back(MeasureStep{'Z', 1, Pauli::X, 2});
    circuit.steps.push_back(DiscardStep{0});
    circuit.steps.push_back(DiscardStep{1});
    return circuit;
}

MultiQubitState run_circuit(const Circuit& circuit, const BlochVector* input_override) {
    if (circuit.num_qubits < 1 || circuit.num_qubits > kMaxQubits) {
        throw std::invalid_argument("run_circuit: need between 1 and 6 qubits");
    }
    std::vector<BlochVector> initial(circuit.num_qubits, BlochVector{0.0, 0.0, 0.0});
    std::vector<bool> prepared(circuit.num_qubits, false);
    std::size_t first_op = 0;
    for (; first_op < circuit.steps.size(); ++first_op) {
        const auto* prep = std::get_if<PrepareStep>(&circuit.steps[first_op]);
        if (prep == nullptr) break;
        if (prep->qubit < 0 || prep->qubit >= circuit.num_qubits || prepared[prep->qubit]) {
            throw std::invalid_argument("run_circuit: bad or repeated preparation");
        }
        prepared[prep->qubit] = true;
        initial[prep->qubit] = prep->state;
    }
    for (bool p : prepared) {
        if (!p) throw std::invalid_argument("run_circuit: some qubit is never prepared");
    }
    if (input_override != nullptr) {
        initial[circuit.input_qubit] = *input_override;
    }

    MultiQubitState state = MultiQubitState::product(initial);
    // Track labels through discards: position of each original wire, or -1.
    std::vector<int> position(circuit.num_qubits);
    for (int q = 0; q < circuit.num_qubits; ++q) position[q] = q;
    const auto located = [&](int wire) {
        if (wire < 0 || wire >= circuit.num_qubits || position[wire] < 0) {
            throw std::invalid_argument("run_circuit: wire already discarded");
        }
        return position[wire];
    };

    for (std::size_t i = first_op; i < circuit.steps.size(); ++i) {
        const CircuitStep& step = circuit.steps[i];
        if (std::holds_alternative<PrepareStep>(step)) {
            throw std::invalid_argument("run_circuit: preparations must come first");
        } else if (const auto* u = std::get_if<UnitaryStep>(&step)) {
            if ((u->matrix * u->matrix.adjoint() -
                 Eigen::MatrixXcd::Identity(u->matrix.rows(), u->matrix.cols()))
                    .norm() > 1e-12) {
                throw std::invalid_argument("run_circuit: gate '" + u->name + "' is not unitary");
            }
            std::vector<int> targets;
            targets.reserve(u->qubits.size());
            for (int q : u->qubits) targets.push_back(located(q));
            conjugate_in_place(state, embed(u->matrix, targets, state.num_qubits));
        } else if (const auto* ch = std::get_if<ChannelStep>(&step)) {
            apply_single_qubit_channel(state, ch->channel, located(ch->qubit));
        } else if (const auto* pair = std::get_if<PairNoiseStep>(&step)) {
            apply_pair_noise(state, pair->dist, located(pair->control), located(pair->target));
        } else if (const auto* m = std::get_if<MeasureStep>(&step)) {
            MeasureStep placed = *m;
            placed.qubit = located(m->qubit);
            placed.correction_qubit = located(m->correction_qubit);
            apply_measure_with_correction(state, placed);
        } else if (const auto* d = std::get_if<DiscardStep>(&step)) {
            const int pos = located(d->qubit);
            state = partial_trace(state, pos);
            position[d->qubit] = -1;
            for (int& p : position) {
                if (p > pos) --p;
            }
        }
    }
    if (std::abs(state.trace() - 1.0) > 1e-10) {
        throw std::runtime_error("run_circuit: composite is not trace preserving");
    }
    return state;
}

AffineChannel simulate_channel(const Circuit& circuit) {
    const BlochVector mixed{0.0, 0.0, 0.0};
    const std::array<BlochVector, 3> axes = {BlochVector{1, 0, 0}, BlochVector{0, 1, 0},
                                             BlochVector{0, 0, 1}};
    const BlochVector origin_out = run_circuit(circuit, &mixed).single_qubit_bloch();

    AffineChannel ch;
    ch.c = origin_out.vec();
    for (int k = 0; k < 3; ++k) {
        const BlochVector out = run_circuit(circuit, &axes[k]).single_qubit_bloch();
        ch.M.col(k) = out.vec() - ch.c;
    }
    return ch;
}

AffineChannel oracle_effective_channel(NoiseModel model, double strength,
                                       InjectionVariant variant, const ResourceSpec& resource) {
    const LocationNoise noise = make_location_noise(model, strength, variant, resource);
    const Circuit circuit = build_injection_circuit(variant, resource, noise);
    AffineChannel full = simulate_channel(circuit);
    if (variant == InjectionVariant::GateResource) {
        // Divide out the ideal gate so the map is anchored at location 1.
        AffineChannel undo;
        undo.M = resource.gate_rotation().transpose();
        full = compose(full, undo);
    }
    return full;
}

ThresholdResult oracle_threshold(NoiseModel model, InjectionVariant variant,
                                 const ResourceSpec& resource) {
    const MapFamily family = [&](double s) {
        return EffectiveMap{oracle_effective_channel(model, s, variant, resource), std::nullopt,
                            std::nullopt};
    };
    return octahedron_threshold(family, resource.bloch, strength_cap(model, variant), 8);
}

}  // namespace octabound
