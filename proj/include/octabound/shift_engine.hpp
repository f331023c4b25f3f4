#pragma once

#include <optional>

#include "octabound/noise_models.hpp"

namespace octabound {

/// Where a Pauli error ends up after commuting it through the teleportation
/// block: either absorbed by a measurement, or an effective Pauli attacking
/// the resource at location 1.
struct ShiftOutcome {
    bool absorbed = false;
    Pauli at_resource = Pauli::I;  // I when absorbed
};

/// The paper-of-record rule table for a single Pauli error at one location
/// of the injection circuits. Rejects Pauli::I and combinations with no
/// Pauli rule (location 7 with X or Y; those are handled as opposite noise
/// at the model level).
ShiftOutcome shift_rule(Location location, Pauli p);

/// Collapse a joint Pauli distribution at the CNOT output pair (2,5) to a
/// single-qubit Pauli distribution at location 1.
std::array<double, 4> reduce_pair_noise(const PauliPairDistribution& dist);

/// All circuit noise re-expressed as one affine channel at location 1,
/// acting after the ideal resource preparation.
struct EffectiveMap {
    AffineChannel channel;
    /// (f_x, f_y, f_z) when the map is diagonal with zero offset.
    std::optional<Eigen::Vector3d> diagonal_factors;
    /// Scalar s with pre-chain(b) = s*b when the opposite-noise chain is
    /// aligned with the resource.
    std::optional<double> scalar_prefactor;
};

/// Commute every location's noise onto location 1. The opposite-noise chain
/// (locations 7/1/control-input) acts on the resource first; the shifted
/// Pauli mixtures from locations 2-6 follow as one diagonal channel.
EffectiveMap effective_map(const LocationNoise& noise, InjectionVariant variant,
                           const ResourceSpec& resource);

/// Closed form of the Knill effective transformation, independent of the
/// rule engine: with A = 1 - 16g/15 and B = 1 - 8g/15, the diagonal factors
/// are (A^n B^2, A^n B^3, A^n B^2); n = 1 for the state circuit, 2 for the
/// gate circuit.
Eigen::Vector3d knill_effective_formula(double gamma, int n);

}  // namespace octabound
