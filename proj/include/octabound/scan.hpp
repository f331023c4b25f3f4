#pragma once

#include <vector>

#include "octabound/injection.hpp"

namespace octabound {

struct ProfilePoint {
    double param1 = 0.0;  // theta for phase scans, azimuth for general scans
    double param2 = 0.0;  // polar angle for general scans, unused otherwise
    double threshold = 0.0;
};

struct ScanResult {
    ResourceSpec best_resource;
    double best_threshold = 0.0;
    int param_dim = 1;
    std::vector<ProfilePoint> profile;
};

/// Maximize the entry threshold over all phase states (or phase gates,
/// per variant): theta grid on [0, pi/2] followed by golden-section
/// refinement of the best bracket to 1e-10 in theta.
ScanResult scan_phase_resources(NoiseModel model, InjectionVariant variant, int grid = 512);

/// Maximize over all pure states (gates) in the positive octant: angular
/// grid plus coordinate-wise golden-section refinement. Octahedral symmetry
/// makes the octant restriction lossless.
ScanResult scan_general_resources(NoiseModel model, InjectionVariant variant, int grid = 64);

/// Unit vector maximizing f_x|x| + f_y|y| + f_z|z| on the sphere: the
/// direction of the factors themselves.
BlochVector analytic_diagonal_optimum(const Eigen::Vector3d& factors);

/// Threshold of the analytically-best resource for a diagonal family:
/// the strength at which the factor envelope reaches the octahedron face.
/// Cross-check path for the grid scans. restrict_to_plane drops the z
/// component (phase resources).
double analytic_envelope_threshold(NoiseModel model, InjectionVariant variant,
                                   bool general_resource, bool restrict_to_plane);

}  // namespace octabound
