#include "octabound/shift_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace octabound {

ShiftOutcome shift_rule(Location location, Pauli p) {
    if (p == Pauli::I) {
        throw std::invalid_argument("shift_rule: identity is not an error");
    }
    // Rule table for the teleportation block. On the measured control wire
    // (locations 2, 3) X errors vanish into the X measurement and Z errors
    // commute back through the CNOT onto the resource. On the measured
    // target wire (locations 5, 6) Z errors vanish into the Z measurement
    // and X errors commute to location 4, where the Bell-projector identity
    // (P ⊗ I) B (P ⊗ I) = (I ⊗ P) B (I ⊗ P) transfers any Pauli to the
    // resource. Y splits into its X and Z parts, one of which is absorbed.
    switch (location) {
        case Location::AfterCnotControl:
        case Location::BeforeXMeas:
            if (p == Pauli::X) return {true, Pauli::I};
            return {false, Pauli::Z};
        case Location::TargetInput:
        case Location::ControlInput:
            return {false, p};
        case Location::AfterCnotTarget:
        case Location::BeforeZMeas:
            if (p == Pauli::Z) return {true, Pauli::I};
            return {false, Pauli::X};
        case Location::PrepBeforeGate:
            if (p == Pauli::Z) return {false, Pauli::Z};  // commutes with any phase gate
            throw std::invalid_argument(
                "shift_rule: no Pauli rule for X or Y before a general gate; model it as "
                "opposite noise instead");
        case Location::Resource:
            break;
    }
    throw std::invalid_argument("shift_rule: location has no shift rule");
}

std::array<double, 4> reduce_pair_noise(const PauliPairDistribution& dist) {
    if (std::abs(dist.sum() - 1.0) > 1e-12) {
        throw std::invalid_argument("reduce_pair_noise: distribution does not sum to 1");
    }
    std::array<double, 4> out{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double pr = dist.prob[4 * a + b];
            if (pr == 0.0) continue;
            const Pauli top = static_cast<Pauli>(a);
            const Pauli bottom = static_cast<Pauli>(b);
            const Pauli eff_top =
                top == Pauli::I ? Pauli::I : shift_rule(Location::AfterCnotControl, top).at_resource;
            const Pauli eff_bottom =
                bottom == Pauli::I ? Pauli::I
                                   : shift_rule(Location::AfterCnotTarget, bottom).at_resource;
            out[static_cast<int>(pauli_compose(eff_top, eff_bottom))] += pr;
        }
    }
    return out;
}

namespace {

/// Pauli mixture at a single location, pushed through its shift rule.
AffineChannel shift_location_mixture(Location loc, const AffineChannel& ch) {
    const std::array<double, 4> probs = pauli_mixture_probabilities(ch);
    std::array<double, 4> shifted{};
    for (int k = 0; k < 4; ++k) {
        if (probs[k] == 0.0) continue;
        if (k == 0) {
            shifted[0] += probs[0];
            continue;
        }
        const ShiftOutcome outcome = shift_rule(loc, static_cast<Pauli>(k));
        shifted[static_cast<int>(outcome.at_resource)] += probs[k];
    }
    return pauli_mixture(shifted);
}

}  // namespace

EffectiveMap effective_map(const LocationNoise& noise, InjectionVariant variant,
                           const ResourceSpec& resource) {
    if (noise.variant != variant) {
        throw std::invalid_argument("effective_map: noise was built for the other variant");
    }
    const bool gate = variant == InjectionVariant::GateResource;
    if (gate != resource.gate_resource()) {
        throw std::invalid_argument("effective_map: resource kind does not match variant");
    }
    if (gate != noise.prep_before_gate.has_value()) {
        throw std::invalid_argument("effective_map: location 7 noise inconsistent with variant");
    }

    // Pre-CNOT chain on the resource wire, in circuit order. Location 7
    // noise is conjugated through the ideal gate so it acts on the resource
    // port directly.
    AffineChannel pre = AffineChannel::identity();
    if (gate) {
        const Eigen::Matrix3d r = resource.gate_rotation();
        AffineChannel conj;
        conj.M = r * noise.prep_before_gate->M * r.transpose();
        conj.c = r * noise.prep_before_gate->c;
        pre = conj;
    }
    pre = compose(noise.resource, pre);
    pre = compose(noise.control_input, pre);

    // Shifted Pauli mixtures from locations 2-6: mutually commuting diagonal
    // channels, composed in any order.
    AffineChannel diag = pauli_mixture(reduce_pair_noise(noise.cnot_pair));
    diag = compose(shift_location_mixture(Location::BeforeXMeas, noise.before_x_meas), diag);
    diag = compose(shift_location_mixture(Location::TargetInput, noise.target_input), diag);
    diag = compose(shift_location_mixture(Location::BeforeZMeas, noise.before_z_meas), diag);

    EffectiveMap eff;
    eff.channel = compose(diag, pre);

    if (eff.channel.is_diagonal()) {
        eff.diagonal_factors =
            Eigen::Vector3d(eff.channel.M(0, 0), eff.channel.M(1, 1), eff.channel.M(2, 2));
    }

    // Aligned-chain scalar: pre(b) = s*b when the opposite noise points
    // against the resource.
    const Eigen::Vector3d b = resource.bloch.vec();
    const Eigen::Vector3d image = pre.M * b + pre.c;
    const double s = image.dot(b) / b.squaredNorm();
    if ((image - s * b).lpNorm<Eigen::Infinity>() <= 1e-12) {
        eff.scalar_prefactor = s;
    }
    return eff;
}

Eigen::Vector3d knill_effective_formula(double gamma, int n) {
    if (n != 1 && n != 2) {
        throw std::invalid_argument("knill_effective_formula: n must be 1 or 2");
    }
    if (!(gamma >= 0.0 && gamma <= 15.0 / 16.0)) {
        throw std::invalid_argument("knill_effective_formula: gamma outside [0, 15/16]");
    }
    const double a = 1.0 - 16.0 * gamma / 15.0;
    const double b = 1.0 - 8.0 * gamma / 15.0;
    const double an = n == 1 ? a : a * a;
    return {an * b * b, an * b * b * b, an * b * b};
}

}  // namespace octabound
