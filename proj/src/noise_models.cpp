#include "octabound/noise_models.hpp"

#include <cmath>
#include <stdexcept>

namespace octabound {

namespace {

void require_probability(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": probability outside [0, 1]");
    }
}

/// Mixture of the identity and the full Bloch negation: b -> (1-2p)b.
/// Models a preparation that produces the orthogonal pure state with
/// probability p; completely positive for p <= 2/3.
AffineChannel orthogonal_prep_flip(double p) {
    AffineChannel ch;
    ch.M = (1.0 - 2.0 * p) * Eigen::Matrix3d::Identity();
    return ch;
}

}  // namespace

bool ResourceSpec::gate_resource() const {
    return kind == ResourceKind::PhaseGate || kind == ResourceKind::GeneralGate;
}

bool ResourceSpec::general_resource() const {
    return kind == ResourceKind::GeneralState || kind == ResourceKind::GeneralGate;
}

Eigen::Matrix3d ResourceSpec::gate_rotation() const {
    if (!gate_resource()) {
        throw std::invalid_argument("gate_rotation: resource is a state, not a gate");
    }
    if (kind == ResourceKind::PhaseGate) {
        Eigen::Matrix3d r;
        const double c = std::cos(theta), s = std::sin(theta);
        r << c, -s, 0, s, c, 0, 0, 0, 1;
        return r;
    }
    // Any proper rotation taking e_x to the output direction will do; the
    // effective-map conjugation is insensitive to the residual freedom.
    const Eigen::Vector3d u = bloch.vec().normalized();
    Eigen::Vector3d seed = Eigen::Vector3d::UnitZ();
    if (std::abs(u.dot(seed)) > 0.9) {
        seed = Eigen::Vector3d::UnitY();
    }
    const Eigen::Vector3d v = (seed - seed.dot(u) * u).normalized();
    const Eigen::Vector3d w = u.cross(v);
    Eigen::Matrix3d r;
    r.col(0) = u;
    r.col(1) = v;
    r.col(2) = w;
    return r;
}

ResourceSpec ResourceSpec::phase_state(PhaseAngle theta) {
    ResourceSpec spec;
    spec.kind = ResourceKind::PhaseState;
    spec.theta = theta.radians();
    spec.bloch = octabound::phase_state(theta);
    return spec;
}

ResourceSpec ResourceSpec::phase_gate(PhaseAngle theta) {
    ResourceSpec spec = phase_state(theta);
    spec.kind = ResourceKind::PhaseGate;
    return spec;
}

ResourceSpec ResourceSpec::general_state(const BlochVector& b) {
    if (!b.is_pure()) {
        throw std::invalid_argument("ResourceSpec: resource state must be pure");
    }
    ResourceSpec spec;
    spec.kind = ResourceKind::GeneralState;
    spec.bloch = b;
    return spec;
}

ResourceSpec ResourceSpec::general_gate(const BlochVector& output_on_plus) {
    if (!output_on_plus.is_pure()) {
        throw std::invalid_argument("ResourceSpec: gate output on |+> must be pure");
    }
    ResourceSpec spec;
    spec.kind = ResourceKind::GeneralGate;
    spec.bloch = output_on_plus;
    return spec;
}

double& PauliPairDistribution::at(Pauli top, Pauli bottom) {
    return prob[4 * static_cast<int>(top) + static_cast<int>(bottom)];
}

double PauliPairDistribution::at(Pauli top, Pauli bottom) const {
    return prob[4 * static_cast<int>(top) + static_cast<int>(bottom)];
}

double PauliPairDistribution::sum() const {
    double s = 0.0;
    for (double v : prob) s += v;
    return s;
}

PauliPairDistribution PauliPairDistribution::identity() {
    PauliPairDistribution d;
    d.prob[0] = 1.0;
    return d;
}

LocationNoise knill_location_noise(double gamma, InjectionVariant variant) {
    if (!(gamma >= 0.0 && gamma <= 15.0 / 16.0)) {
        throw std::invalid_argument("knill_location_noise: gamma outside [0, 15/16]");
    }
    const double p = 4.0 * gamma / 15.0;

    LocationNoise noise;
    noise.variant = variant;
    noise.before_x_meas = mix_with(pauli_channel(Pauli::Z), p);
    noise.before_z_meas = mix_with(pauli_channel(Pauli::X), p);
    // location 4 stays error free: its noise belongs to the decoder.

    noise.cnot_pair = PauliPairDistribution{};
    noise.cnot_pair.at(Pauli::I, Pauli::I) = 1.0 - gamma;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) continue;
            noise.cnot_pair.prob[4 * a + b] = gamma / 15.0;
        }
    }

    if (variant == InjectionVariant::StateResource) {
        noise.resource = orthogonal_prep_flip(p);
    } else {
        noise.prep_before_gate = orthogonal_prep_flip(p);
        noise.resource = pauli_mixture({1.0 - 3.0 * p, p, p, p});  // gate followed by X, Y, Z
    }
    return noise;
}

LocationNoise epg_location_noise(double p, InjectionVariant variant, const ResourceSpec& resource,
                                 bool general_resource) {
    require_probability(p, "epg_location_noise");
    if ((variant == InjectionVariant::GateResource) != resource.gate_resource()) {
        throw std::invalid_argument("epg_location_noise: resource kind does not match variant");
    }

    LocationNoise noise;
    noise.variant = variant;
    noise.resource = opposite_noise(resource.bloch, p);
    noise.control_input = opposite_noise(resource.bloch, p);
    noise.before_x_meas = mix_with(pauli_channel(Pauli::Z), p);
    noise.target_input =
        mix_with(pauli_channel(general_resource ? Pauli::Y : Pauli::Z), p);
    noise.before_z_meas = mix_with(pauli_channel(Pauli::X), p);
    if (variant == InjectionVariant::GateResource) {
        noise.prep_before_gate = opposite_noise(BlochVector{1.0, 0.0, 0.0}, p);
    }
    return noise;
}

AffineChannel dephasing_two_hit_model(double p) {
    require_probability(p, "dephasing_two_hit_model");
    return mix_with(pauli_channel(Pauli::Z), p);
}

AffineChannel independent_depolarizing(double t) {
    require_probability(t, "independent_depolarizing");
    return mix_with(depolarizing(), t);
}

std::vector<double> simultaneous_depolarizing(double t, int qubit_count) {
    require_probability(t, "simultaneous_depolarizing");
    if (qubit_count < 1 || qubit_count > 15) {
        throw std::invalid_argument("simultaneous_depolarizing: unsupported qubit count");
    }
    const std::size_t cells = std::size_t{1} << (2 * qubit_count);  // 4^k
    std::vector<double> dist(cells, t / static_cast<double>(cells - 1));
    dist[0] = 1.0 - t;
    return dist;
}

AffineChannel totally_dephasing(double p_tilde) {
    require_probability(p_tilde, "totally_dephasing");
    return dephasing_two_hit_model(p_tilde / 2.0);
}

double epg_split(double p) {
    require_probability(p, "epg_split");
    return 1.0 - std::sqrt(1.0 - p);
}

}  // namespace octabound
