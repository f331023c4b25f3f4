#pragma once

#include "octabound/threshold.hpp"

namespace octabound {

/// The two injection noise models with a one-parameter strength.
enum class NoiseModel { Knill, Epg };

const char* noise_model_name(NoiseModel m);
const char* variant_name(InjectionVariant v);

LocationNoise make_location_noise(NoiseModel model, double strength, InjectionVariant variant,
                                  const ResourceSpec& resource);

EffectiveMap injection_effective_map(NoiseModel model, double strength, InjectionVariant variant,
                                     const ResourceSpec& resource);

/// strength -> effective map, for the threshold solver and the scans.
MapFamily injection_family(NoiseModel model, InjectionVariant variant,
                           const ResourceSpec& resource);

/// Upper end of the bisection bracket: the largest strength for which the
/// model is defined and the octahedron gap is strictly decreasing.
double strength_cap(NoiseModel model, InjectionVariant variant);

ThresholdResult injection_threshold(NoiseModel model, InjectionVariant variant,
                                    const ResourceSpec& resource);

/// Diagonal attack factors seen by a resource aligned with the opposite
/// noise, including the aligned-chain scalar. Drives the analytic scan
/// cross-checks.
Eigen::Vector3d aligned_diagonal_factors(NoiseModel model, double strength,
                                         InjectionVariant variant, bool general_resource);

}  // namespace octabound
