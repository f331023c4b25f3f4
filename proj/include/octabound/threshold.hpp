#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "octabound/shift_engine.hpp"

namespace octabound {

struct ThresholdResult {
    double strength = 0.0;      // minimal noise driving the image onto the octahedron face
    double residual = 0.0;      // octahedron_norm(image) - 1 at the returned strength
    double bracket = 0.0;       // final bisection interval width
    bool already_inside = false;  // resource was in the octahedron at zero noise
};

using MapFamily = std::function<EffectiveMap(double)>;

/// Minimal strength s in [0, s_max] with octahedron_norm(map(s)(resource)) = 1,
/// by bisection to bracket width 1e-12. Requires g(s) = norm - 1 strictly
/// decreasing on the interval, checked by sampling at monotone_samples
/// points; throws when g stays positive throughout. Scans thin the sampling
/// after guarding the family once.
ThresholdResult octahedron_threshold(const MapFamily& family, const BlochVector& resource,
                                     double s_max, int monotone_samples = 100);

struct TwoHitDephasingBound {
    double p;        // per-location N^Z_p strength with two hits on the resource
    double p_tilde;  // same bound for the totally-dephasing parameterization
    double q;        // single-hit strength: q = (1 - 1/sqrt(2))/2
};

/// Solve (1-2p)^2 = 1 - 2q for the dephasing model that hits every
/// non-Clifford phase operation twice.
TwoHitDephasingBound two_hit_dephasing_threshold();

/// Root of (1-2p)(1 - 2(1 - sqrt(1-p))) = 1/sqrt(2) in (0, 0.5): the
/// error-per-gate bound for phase state and phase gate architectures.
double epg_phase_threshold_general();

/// p = 1 - sqrt(1 - (6 - 2*sqrt(2))/7): two hits of independent depolarising
/// noise on the most robust single-qubit gate.
double depolarizing_two_hit_threshold();

/// The threshold rational function for one level of decoding before the
/// injection circuit: p(e) = -1/2 - f1(e)/f2(e), with f1, f2 fixed
/// integer-coefficient polynomials (f2 carries a 1125*sqrt(2) scale).
struct DecodingPolynomial {
    /// f1 in its factored form, plain double arithmetic.
    static double f1_factored(double e);
    /// f1 expanded to degree 13 (exact integer convolution of the factors),
    /// evaluated with compensated Horner.
    static double f1_expanded(double e);
    static double f2(double e);
    /// p(e); refuses to divide when f2 vanishes nearby.
    static double value(double e);
    /// Expanded coefficients of f1, ascending powers.
    static const std::array<std::int64_t, 14>& f1_coefficients();
};

/// Sole real root of the decoding polynomial in (0, 0.5), by sign-change
/// bracketing plus bisection. Asserts exactly one sign change on the
/// interval and throws a transcription-error diagnostic otherwise.
double decoding_polynomial_root();

/// Compensated Horner evaluation (error-free transformations on top of fma).
double horner_compensated(const double* coeffs_ascending, int n, double x);

}  // namespace octabound
