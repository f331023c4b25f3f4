#include "octabound/verification.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "octabound/scan.hpp"
#include "octabound/sim_oracle.hpp"

namespace octabound {

namespace {

const BlochVector kProbeResource = [] {
    // A pure state with three distinct nonzero components, so every
    // channel-identity check is sensitive on all axes.
    Eigen::Vector3d v(0.3, -0.5, 0.2);
    return BlochVector::from(v.normalized());
}();

double channel_distance(const AffineChannel& a, const AffineChannel& b) {
    return std::max((a.M - b.M).lpNorm<Eigen::Infinity>(),
                    (a.c - b.c).lpNorm<Eigen::Infinity>());
}

/// Ideal state-injection circuit with one deterministic Pauli inserted at a
/// single location, as a channel.
AffineChannel circuit_with_single_pauli(Location loc, Pauli p) {
    const ResourceSpec res = ResourceSpec::general_state(kProbeResource);
    LocationNoise noise;
    noise.variant = InjectionVariant::StateResource;
    const AffineChannel err = pauli_channel(p);
    switch (loc) {
        case Location::ControlInput: noise.control_input = err; break;
        case Location::BeforeXMeas: noise.before_x_meas = err; break;
        case Location::TargetInput: noise.target_input = err; break;
        case Location::BeforeZMeas: noise.before_z_meas = err; break;
        case Location::AfterCnotControl:
            noise.cnot_pair = PauliPairDistribution{};
            noise.cnot_pair.at(p, Pauli::I) = 1.0;
            break;
        case Location::AfterCnotTarget:
            noise.cnot_pair = PauliPairDistribution{};
            noise.cnot_pair.at(Pauli::I, p) = 1.0;
            break;
        default:
            throw std::invalid_argument("circuit_with_single_pauli: unsupported location");
    }
    return simulate_channel(
        build_injection_circuit(InjectionVariant::StateResource, res, noise));
}

ResourceSpec random_resource(std::mt19937& rng, InjectionVariant variant, bool general) {
    std::uniform_real_distribution<double> angle(0.05, 1.5);
    if (!general) {
        const PhaseAngle theta(angle(rng));
        return variant == InjectionVariant::StateResource ? ResourceSpec::phase_state(theta)
                                                          : ResourceSpec::phase_gate(theta);
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector3d v;
    do {
        v = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-3);
    const BlochVector b = BlochVector::from(v.normalized());
    return variant == InjectionVariant::StateResource ? ResourceSpec::general_state(b)
                                                      : ResourceSpec::general_gate(b);
}

}  // namespace

std::vector<CheckResult> verify_shift_rules() {
    const std::array<Location, 6> locations = {
        Location::ControlInput,     Location::AfterCnotControl, Location::BeforeXMeas,
        Location::TargetInput,      Location::AfterCnotTarget,  Location::BeforeZMeas,
    };
    const auto location_label = [](Location loc) -> std::string {
        if (loc == Location::ControlInput) return "control-input";
        return std::to_string(static_cast<int>(loc));
    };

    std::vector<CheckResult> results;
    for (Location loc : locations) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            const ShiftOutcome outcome = shift_rule(loc, p);
            const AffineChannel expected = pauli_channel(outcome.at_resource);
            const AffineChannel simulated = circuit_with_single_pauli(loc, p);
            CheckResult check;
            std::ostringstream name;
            name << "shift " << pauli_name(p) << "@" << location_label(loc) << " -> "
                 << (outcome.absorbed ? "absorbed" : pauli_name(outcome.at_resource)) << "@1";
            check.name = name.str();
            check.residual = channel_distance(simulated, expected);
            check.passed = check.residual <= 1e-12;
            results.push_back(std::move(check));
        }
    }
    return results;
}

std::vector<CheckResult> verify_map_agreement(int settings, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<CheckResult> results;
    for (int i = 0; i < settings; ++i) {
        const NoiseModel model = (i % 2 == 0) ? NoiseModel::Knill : NoiseModel::Epg;
        const InjectionVariant variant =
            (i % 4 < 2) ? InjectionVariant::StateResource : InjectionVariant::GateResource;
        const bool general = (i % 3 == 0);
        const ResourceSpec resource = random_resource(rng, variant, general);
        const double strength = 0.9 * strength_cap(model, variant) * unit(rng);

        const EffectiveMap engine = injection_effective_map(model, strength, variant, resource);
        const AffineChannel oracle =
            oracle_effective_channel(model, strength, variant, resource);

        CheckResult check;
        std::ostringstream name;
        name << "map " << noise_model_name(model) << "/" << variant_name(variant)
             << (general ? "/general" : "/phase") << " s=" << strength;
        check.name = name.str();
        check.residual = channel_distance(engine.channel, oracle);
        check.passed = check.residual <= 1e-10;
        results.push_back(std::move(check));
    }
    return results;
}

std::vector<CheckResult> verify_cptp() {
    std::vector<CheckResult> results;
    const auto record = [&](const std::string& name, const AffineChannel& ch) {
        CheckResult check;
        check.name = "cptp " + name;
        check.passed = choi_psd_check(ch);
        check.residual = 0.0;
        results.push_back(std::move(check));
    };

    const ResourceSpec phase = ResourceSpec::phase_state(PhaseAngle(0.6));
    const ResourceSpec phase_gate = ResourceSpec::phase_gate(PhaseAngle(0.6));
    for (double s : {0.02, 0.1, 0.3}) {
        const LocationNoise knill_state = knill_location_noise(s, InjectionVariant::StateResource);
        const LocationNoise knill_gate = knill_location_noise(s, InjectionVariant::GateResource);
        const LocationNoise epg_state =
            epg_location_noise(std::min(s, 0.25), InjectionVariant::StateResource, phase, false);
        const LocationNoise epg_gate = epg_location_noise(std::min(s, 0.18),
                                                          InjectionVariant::GateResource,
                                                          phase_gate, false);
        const std::string tag = " s=" + std::to_string(s);
        record("knill loc1" + tag, knill_state.resource);
        record("knill loc3" + tag, knill_state.before_x_meas);
        record("knill loc6" + tag, knill_state.before_z_meas);
        record("knill gate loc1" + tag, knill_gate.resource);
        record("knill gate loc7" + tag, *knill_gate.prep_before_gate);
        record("epg loc1" + tag, epg_state.resource);
        record("epg loc4" + tag, epg_state.target_input);
        record("epg gate loc7" + tag, *epg_gate.prep_before_gate);
        record("knill effective" + tag,
               effective_map(knill_state, InjectionVariant::StateResource, phase).channel);
        record("epg effective" + tag,
               effective_map(epg_state, InjectionVariant::StateResource, phase).channel);
    }
    record("depolarizing", depolarizing());
    record("independent depolarizing", independent_depolarizing(0.3));
    record("totally dephasing", totally_dephasing(0.159));
    record("opposite noise", opposite_noise(BlochVector{0, 1, 0}, 0.4));
    return results;
}

std::vector<CheckResult> verify_monotonicity() {
    std::vector<CheckResult> results;
    const ResourceSpec phase = ResourceSpec::phase_state(PhaseAngle(0.7853981633974483));
    const ResourceSpec gate = ResourceSpec::phase_gate(PhaseAngle(0.7853981633974483));
    const Eigen::Vector3d t_dir = Eigen::Vector3d::Ones().normalized();
    const ResourceSpec general_state = ResourceSpec::general_state(BlochVector::from(t_dir));
    const ResourceSpec general_gate = ResourceSpec::general_gate(BlochVector::from(t_dir));

    const auto record = [&](NoiseModel model, InjectionVariant variant,
                            const ResourceSpec& res, const std::string& label) {
        CheckResult check;
        check.name = "monotone " + label;
        const MapFamily family = injection_family(model, variant, res);
        const double cap = strength_cap(model, variant);
        double prev = octahedron_norm(apply(family(0.0).channel, res.bloch));
        bool decreasing = true;
        double worst = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double s = cap * static_cast<double>(i) / 100.0;
            const double v = octahedron_norm(apply(family(s).channel, res.bloch));
            worst = std::max(worst, v - prev);
            if (v >= prev) decreasing = false;
            prev = v;
        }
        check.passed = decreasing;
        check.residual = worst;
        results.push_back(std::move(check));
    };

    record(NoiseModel::Knill, InjectionVariant::StateResource, phase, "knill/state/phase");
    record(NoiseModel::Knill, InjectionVariant::GateResource, gate, "knill/gate/phase");
    record(NoiseModel::Knill, InjectionVariant::StateResource, general_state,
           "knill/state/general");
    record(NoiseModel::Knill, InjectionVariant::GateResource, general_gate, "knill/gate/general");
    record(NoiseModel::Epg, InjectionVariant::StateResource, phase, "epg/state/phase");
    record(NoiseModel::Epg, InjectionVariant::GateResource, gate, "epg/gate/phase");
    record(NoiseModel::Epg, InjectionVariant::StateResource, general_state, "epg/state/general");
    record(NoiseModel::Epg, InjectionVariant::GateResource, general_gate, "epg/gate/general");
    return results;
}

std::vector<CheckResult> verify_all() {
    std::vector<CheckResult> all = verify_shift_rules();
    for (const auto& group : {verify_map_agreement(), verify_cptp(), verify_monotonicity()}) {
        all.insert(all.end(), group.begin(), group.end());
    }
    return all;
}

}  // namespace octabound
