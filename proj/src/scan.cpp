#include "octabound/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace octabound {

namespace {

constexpr double kQuarterTurn = std::numbers::pi / 2.0;

double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    constexpr double phi = 0.6180339887498949;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        }
    }
    return 0.5 * (a + b);
}

ResourceSpec phase_resource(InjectionVariant variant, double theta) {
    return variant == InjectionVariant::StateResource
               ? ResourceSpec::phase_state(PhaseAngle(theta))
               : ResourceSpec::phase_gate(PhaseAngle(theta));
}

ResourceSpec general_resource(InjectionVariant variant, double azimuth, double polar) {
    const BlochVector b{std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
                        std::cos(polar)};
    return variant == InjectionVariant::StateResource ? ResourceSpec::general_state(b)
                                                      : ResourceSpec::general_gate(b);
}

}  // namespace

ScanResult scan_phase_resources(NoiseModel model, InjectionVariant variant, int grid) {
    if (grid < 8) grid = 8;
    const double cap = strength_cap(model, variant);
    const auto threshold_at = [&](double theta, int monotone_samples) {
        const ResourceSpec res = phase_resource(variant, theta);
        return octahedron_threshold(injection_family(model, variant, res), res.bloch, cap,
                                    monotone_samples)
            .strength;
    };

    ScanResult result;
    result.param_dim = 1;
    result.profile.reserve(grid + 1);
    double best_theta = 0.0;
    double best = -1.0;
    for (int i = 0; i <= grid; ++i) {
        const double theta = kQuarterTurn * static_cast<double>(i) / grid;
        // guard the family once in full, then sample thinly
        const double thr = threshold_at(theta, i == 1 ? 100 : 8);
        result.profile.push_back({theta, 0.0, thr});
        if (thr > best) {
            best = thr;
            best_theta = theta;
        }
    }

    const double spacing = kQuarterTurn / grid;
    const double lo = std::max(0.0, best_theta - spacing);
    const double hi = std::min(kQuarterTurn, best_theta + spacing);
    best_theta = golden_section_max([&](double t) { return threshold_at(t, 8); }, lo, hi, 1e-10);

    result.best_resource = phase_resource(variant, best_theta);
    result.best_threshold = threshold_at(best_theta, 100);
    return result;
}

ScanResult scan_general_resources(NoiseModel model, InjectionVariant variant, int grid) {
    if (grid < 8) grid = 8;
    const double cap = strength_cap(model, variant);
    const auto threshold_at = [&](double azimuth, double polar, int monotone_samples) {
        const ResourceSpec res = general_resource(variant, azimuth, polar);
        return octahedron_threshold(injection_family(model, variant, res), res.bloch, cap,
                                    monotone_samples)
            .strength;
    };

    ScanResult result;
    result.param_dim = 2;
    result.profile.reserve((grid + 1) * (grid + 1));
    double best_az = 0.0, best_pol = 0.0;
    double best = -1.0;
    bool guarded = false;
    for (int i = 0; i <= grid; ++i) {
        const double azimuth = kQuarterTurn * static_cast<double>(i) / grid;
        for (int j = 0; j <= grid; ++j) {
            const double polar = kQuarterTurn * static_cast<double>(j) / grid;
            const int samples = (!guarded && i > 0 && j > 0) ? 100 : 8;
            if (samples == 100) guarded = true;
            const double thr = threshold_at(azimuth, polar, samples);
            result.profile.push_back({azimuth, polar, thr});
            if (thr > best) {
                best = thr;
                best_az = azimuth;
                best_pol = polar;
            }
        }
    }

    // Coordinate-wise golden-section refinement around the best cell.
    double spacing = kQuarterTurn / grid;
    for (int round = 0; round < 6; ++round) {
        best_az = golden_section_max(
            [&](double a) { return threshold_at(a, best_pol, 8); },
            std::max(0.0, best_az - spacing), std::min(kQuarterTurn, best_az + spacing), 1e-10);
        best_pol = golden_section_max(
            [&](double p) { return threshold_at(best_az, p, 8); },
            std::max(0.0, best_pol - spacing), std::min(kQuarterTurn, best_pol + spacing), 1e-10);
        spacing *= 0.25;
    }

    result.best_resource = general_resource(variant, best_az, best_pol);
    result.best_threshold = threshold_at(best_az, best_pol, 100);
    return result;
}

BlochVector analytic_diagonal_optimum(const Eigen::Vector3d& factors) {
    if (!(factors.x() > 0.0 && factors.y() > 0.0 && factors.z() > 0.0)) {
        throw std::invalid_argument("analytic_diagonal_optimum: factors must be positive");
    }
    return BlochVector::from(factors.normalized());
}

double analytic_envelope_threshold(NoiseModel model, InjectionVariant variant,
                                   bool general_resource, bool restrict_to_plane) {
    const double cap = strength_cap(model, variant);
    const auto envelope_gap = [&](double s) {
        const Eigen::Vector3d f = aligned_diagonal_factors(model, s, variant, general_resource);
        const double v = restrict_to_plane ? std::hypot(f.x(), f.y()) : f.norm();
        return v - 1.0;
    };
    double lo = 0.0, hi = cap;
    if (envelope_gap(hi) > 0.0) {
        throw std::domain_error("analytic_envelope_threshold: envelope never reaches the face");
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (envelope_gap(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace octabound
