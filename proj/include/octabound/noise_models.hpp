#pragma once

#include <array>
#include <optional>
#include <vector>

#include "octabound/channel.hpp"

namespace octabound {

/// The two teleportation state-injection circuits. The state circuit injects
/// a prepared non-Clifford qubit (error locations 1-6); the gate circuit
/// creates it by applying a non-Clifford unitary to |+> (extra location 7).
enum class InjectionVariant { StateResource, GateResource };

/// Numbered error locations of the injection circuits, plus the point on the
/// resource wire immediately before the CNOT (used by the error-per-gate
/// model, which splits the CNOT into opposite noise followed by a CNOT).
enum class Location {
    Resource = 1,      // resource wire, after preparation / after the gate
    AfterCnotControl = 2,
    BeforeXMeas = 3,
    TargetInput = 4,   // decoded Bell half, before the CNOT
    AfterCnotTarget = 5,
    BeforeZMeas = 6,
    PrepBeforeGate = 7,
    ControlInput = 8,  // resource wire, immediately before the CNOT
};

enum class ResourceKind { PhaseState, PhaseGate, GeneralState, GeneralGate };

/// The non-Clifford resource under attack, resolved to the ideal Bloch
/// vector entering location 1. Gate resources are identified with their
/// output on |+>, which fully determines the injection analysis.
struct ResourceSpec {
    ResourceKind kind = ResourceKind::PhaseState;
    double theta = 0.0;  // phase kinds only
    BlochVector bloch{1.0, 0.0, 0.0};

    bool gate_resource() const;
    bool general_resource() const;
    /// Bloch rotation of the gate (maps e_x to bloch). Gate kinds only.
    Eigen::Matrix3d gate_rotation() const;
    /// An SU(2) unitary realizing gate_rotation().
    Eigen::Matrix2cd gate_unitary() const;

    static ResourceSpec phase_state(PhaseAngle theta);
    static ResourceSpec phase_gate(PhaseAngle theta);
    static ResourceSpec general_state(const BlochVector& b);
    static ResourceSpec general_gate(const BlochVector& output_on_plus);
};

/// Joint Pauli distribution on the CNOT output pair, locations 2 (control)
/// and 5 (target). Entry (p, q) sits at index 4*p + q.
struct PauliPairDistribution {
    std::array<double, 16> prob{};

    double& at(Pauli top, Pauli bottom);
    double at(Pauli top, Pauli bottom) const;
    double sum() const;
    static PauliPairDistribution identity();
};

/// Assignment of noise channels to the error locations of one injection
/// circuit. Locations absent from the variant stay unset.
struct LocationNoise {
    InjectionVariant variant = InjectionVariant::StateResource;
    AffineChannel resource;        // location 1
    AffineChannel control_input;   // resource wire just before the CNOT
    AffineChannel before_x_meas;   // location 3
    AffineChannel target_input;    // location 4
    AffineChannel before_z_meas;   // location 6
    std::optional<AffineChannel> prep_before_gate;  // location 7, gate circuit only
    PauliPairDistribution cnot_pair = PauliPairDistribution::identity();  // locations 2,5
};

/// Knill's gamma-parameterized Pauli noise model on the injection circuit:
/// preparation flips to the orthogonal state with probability 4g/15, X (Z)
/// measurements are preceded by Z (X) with probability 4g/15, gates are
/// followed by X, Y, Z each with probability 4g/15, and the CNOT output pair
/// suffers each of the 15 non-identity Pauli pairs with probability g/15.
/// Location 4 is kept error free.
LocationNoise knill_location_noise(double gamma, InjectionVariant variant);

/// Adversarial error-per-gate noise: opposite noise aligned against the
/// resource at location 1 and at the CNOT input, dephasing at 3 and 4
/// (N^Y at 4 when general_resource), bit flip noise at 6, and for the gate
/// circuit opposite noise against |+> at location 7.
LocationNoise epg_location_noise(double p, InjectionVariant variant, const ResourceSpec& resource,
                                 bool general_resource);

/// Per-location dephasing channel N^Z_p of the two-hit analysis.
AffineChannel dephasing_two_hit_model(double p);

/// N^D_t with D the totally depolarising operation.
AffineChannel independent_depolarizing(double t);

/// Joint depolarising after a k-qubit gate: each of the 4^k - 1 non-identity
/// Pauli products with probability t/(4^k - 1). Returned in lexicographic
/// Pauli order (I,X,Y,Z per qubit), identity first.
std::vector<double> simultaneous_depolarizing(double t, int qubit_count);

/// rho -> (1 - p̃)rho + p̃ (rho + Z rho Z)/2, re-expressed as N^Z_{p̃/2}.
AffineChannel totally_dephasing(double p_tilde);

/// The t with N^Z_t ⊗ N^Z_t giving total any-error probability p:
/// p = t^2 + 2t(1-t), so t = 1 - sqrt(1-p).
double epg_split(double p);

}  // namespace octabound
