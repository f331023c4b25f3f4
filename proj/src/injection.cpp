#include "octabound/injection.hpp"

#include <stdexcept>

namespace octabound {

const char* noise_model_name(NoiseModel m) {
    return m == NoiseModel::Knill ? "knill" : "epg";
}

const char* variant_name(InjectionVariant v) {
    return v == InjectionVariant::StateResource ? "state" : "gate";
}

LocationNoise make_location_noise(NoiseModel model, double strength, InjectionVariant variant,
                                  const ResourceSpec& resource) {
    if (model == NoiseModel::Knill) {
        return knill_location_noise(strength, variant);
    }
    return epg_location_noise(strength, variant, resource, resource.general_resource());
}

EffectiveMap injection_effective_map(NoiseModel model, double strength, InjectionVariant variant,
                                     const ResourceSpec& resource) {
    return effective_map(make_location_noise(model, strength, variant, resource), variant,
                         resource);
}

MapFamily injection_family(NoiseModel model, InjectionVariant variant,
                           const ResourceSpec& resource) {
    return [=](double s) { return injection_effective_map(model, s, variant, resource); };
}

double strength_cap(NoiseModel model, InjectionVariant variant) {
    if (model == NoiseModel::Knill) {
        return 15.0 / 16.0;  // largest gamma with all location probabilities valid
    }
    // Stay below the first sign flip of the aligned opposite-noise prefactor:
    // (1-p)(1-2p)-p vanishes near 0.2929, (1-p)(1-4p+2p^2)-p near 0.205.
    return variant == InjectionVariant::StateResource ? 0.28 : 0.20;
}

ThresholdResult injection_threshold(NoiseModel model, InjectionVariant variant,
                                    const ResourceSpec& resource) {
    return octahedron_threshold(injection_family(model, variant, resource), resource.bloch,
                                strength_cap(model, variant));
}

Eigen::Vector3d aligned_diagonal_factors(NoiseModel model, double strength,
                                         InjectionVariant variant, bool general_resource) {
    if (model == NoiseModel::Knill) {
        return knill_effective_formula(strength,
                                       variant == InjectionVariant::StateResource ? 1 : 2);
    }
    const double p = strength;
    const double m = 1.0 - 2.0 * p;
    const double chain = variant == InjectionVariant::StateResource
                             ? (1.0 - p) * (1.0 - 2.0 * p) - p
                             : (1.0 - p) * (1.0 - 4.0 * p + 2.0 * p * p) - p;
    if (general_resource) {
        return chain * Eigen::Vector3d(m * m, m * m, m * m);
    }
    return chain * Eigen::Vector3d(m * m, m * m * m, m);
}

}  // namespace octabound
