#pragma once

#include <string>
#include <variant>
#include <vector>

#include "octabound/injection.hpp"

namespace octabound {

/// Dense density matrix on up to 6 qubits. Qubit 0 is the leftmost tensor
/// factor (most significant bit of the row index).
struct MultiQubitState {
    Eigen::MatrixXcd rho;
    int num_qubits = 0;

    static MultiQubitState product(const std::vector<BlochVector>& states);
    BlochVector single_qubit_bloch() const;  // requires num_qubits == 1
    double trace() const;
};

Eigen::Matrix2cd hadamard_gate();
Eigen::Matrix2cd s_gate();
Eigen::Matrix2cd phase_gate_unitary(double theta);  // |0><0| + e^{i theta} |1><1|
Eigen::Matrix4cd cnot_gate();                       // control = first qubit
Eigen::Matrix2cd pauli_matrix(Pauli p);
/// SU(2) element whose Bloch action is the given proper rotation.
Eigen::Matrix2cd unitary_from_rotation(const Eigen::Matrix3d& r);

struct PrepareStep {
    int qubit;
    BlochVector state;
};
struct UnitaryStep {
    std::string name;
    std::vector<int> qubits;  // one or two
    Eigen::MatrixXcd matrix;
};
struct ChannelStep {
    std::string location;
    int qubit;
    AffineChannel channel;
};
struct PairNoiseStep {
    int control;
    int target;
    PauliPairDistribution dist;
};
/// Projective X or Z measurement, outcomes summed with the standard
/// teleportation Pauli correction applied on the output wire.
struct MeasureStep {
    char basis;  // 'X' or 'Z'
    int qubit;
    Pauli correction;
    int correction_qubit;
};
struct DiscardStep {
    int qubit;
};

using CircuitStep =
    std::variant<PrepareStep, UnitaryStep, ChannelStep, PairNoiseStep, MeasureStep, DiscardStep>;

struct Circuit {
    int num_qubits = 0;
    int input_qubit = 0;   // the wire whose preparation tomography overrides
    std::vector<CircuitStep> steps;
};

/// The canonical 3-qubit noisy injection circuit: resource on wire 0, Bell
/// pair on wires 1-2, teleportation by CNOT plus X and Z measurements with
/// corrections on wire 2.
Circuit build_injection_circuit(InjectionVariant variant, const ResourceSpec& resource,
                                const LocationNoise& noise);

/// Run the circuit; when input_override is non-null it replaces the input
/// wire's preparation (used for process tomography).
MultiQubitState run_circuit(const Circuit& circuit, const BlochVector* input_override = nullptr);

/// Exact process tomography of the input->output qubit channel: four runs
/// (maximally mixed and the three Pauli +1 eigenstates), no sampling.
AffineChannel simulate_channel(const Circuit& circuit);

/// The channel attacking the resource at location 1, extracted from the
/// dense simulation; for gate circuits the ideal gate rotation is divided
/// out so the map is comparable with the shift engine's.
AffineChannel oracle_effective_channel(NoiseModel model, double strength,
                                       InjectionVariant variant, const ResourceSpec& resource);

/// Threshold computed entirely through the dense simulator.
ThresholdResult oracle_threshold(NoiseModel model, InjectionVariant variant,
                                 const ResourceSpec& resource);

}  // namespace octabound
