#include "octabound/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace octabound {

namespace {

double bisect_decreasing(const std::function<double(double)>& g, double lo, double hi,
                         double width) {
    // g(lo) > 0 >= g(hi)
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ThresholdResult octahedron_threshold(const MapFamily& family, const BlochVector& resource,
                                     double s_max, int monotone_samples) {
    if (!(s_max > 0.0)) {
        throw std::invalid_argument("octahedron_threshold: s_max must be positive");
    }
    const auto gap = [&](double s) {
        return octahedron_norm(apply(family(s).channel, resource)) - 1.0;
    };

    const double g0 = gap(0.0);
    if (g0 <= 1e-12) {
        return {0.0, g0, 0.0, true};
    }

    // The face equation has a unique solution only when the gap decreases;
    // sample before trusting bisection.
    const int samples = std::max(monotone_samples, 1);
    double prev = g0;
    for (int i = 1; i <= samples; ++i) {
        const double s = s_max * static_cast<double>(i) / samples;
        const double gi = gap(s);
        if (gi >= prev) {
            throw std::domain_error(
                "octahedron_threshold: octahedron gap is not strictly decreasing on [0, s_max]");
        }
        prev = gi;
    }
    if (prev > 0.0) {
        throw std::domain_error(
            "octahedron_threshold: image never reaches the octahedron within [0, s_max]");
    }

    constexpr double kWidth = 1e-12;
    double lo = 0.0, hi = s_max;
    while (hi - lo > kWidth) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ThresholdResult result;
    result.strength = 0.5 * (lo + hi);
    result.residual = gap(result.strength);
    result.bracket = hi - lo;
    return result;
}

TwoHitDephasingBound two_hit_dephasing_threshold() {
    TwoHitDephasingBound bound;
    bound.q = 0.5 * (1.0 - 1.0 / std::sqrt(2.0));
    // (1-2p)^2 = 1 - 2q = 1/sqrt(2)
    bound.p = 0.5 * (1.0 - std::sqrt(1.0 / std::sqrt(2.0)));
    bound.p_tilde = 2.0 * bound.p;
    return bound;
}

double epg_phase_threshold_general() {
    // The CNOT shared by two phase operations is split into N^Z_t x N^Z_t
    // with t = epg_split(p), so each resource sees one full and one split hit.
    const double target = 1.0 / std::sqrt(2.0);
    const auto h = [&](double p) {
        return (1.0 - 2.0 * p) * (1.0 - 2.0 * epg_split(p)) - target;
    };
    return bisect_decreasing(h, 0.0, 0.5, 1e-15);
}

double depolarizing_two_hit_threshold() {
    return 1.0 - std::sqrt(1.0 - (6.0 - 2.0 * std::sqrt(2.0)) / 7.0);
}

// ---------------------------------------------------------------------------
// Decoding polynomial

double horner_compensated(const double* coeffs_ascending, int n, double x) {
    // Graillat-Langlois-Louvet compensated scheme: track the rounding error
    // of every product and sum with error-free transformations.
    double s = 0.0;
    double err = 0.0;
    for (int i = n - 1; i >= 0; --i) {
        const double p = s * x;
        const double pi = std::fma(s, x, -p);
        const double t = p + coeffs_ascending[i];
        const double u = t - p;
        const double sigma = (p - (t - u)) + (coeffs_ascending[i] - u);
        s = t;
        err = err * x + (pi + sigma);
    }
    return s + err;
}

namespace {

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const __int128 term = static_cast<__int128>(a[i]) * b[j];
            const __int128 acc = static_cast<__int128>(out[i + j]) + term;
            if (acc > INT64_MAX || acc < INT64_MIN) {
                throw std::overflow_error("decoding polynomial expansion overflowed int64");
            }
            out[i + j] = static_cast<std::int64_t>(acc);
        }
    }
    return out;
}

// Printed coefficients, ascending powers.
const std::vector<std::int64_t> kLinearFactor = {-15, 16};               // 16e - 15
const std::vector<std::int64_t> kQuadraticFactor = {225, -180, 32};      // 225 - 180e + 32e^2
const std::vector<std::int64_t> kQuarticFactor = {16875, -40500, 46800, -23040, 4096};
const std::vector<std::int64_t> kF2Coefficients = {
    576650390625,    -3536789062500,  11768793750000,  -24002325000000,
    32367600000000,  -29499033600000, 18141511680000,  -7375159296000,
    1887436800000,   -273804165120,   17179869184};

std::array<std::int64_t, 14> expand_f1() {
    std::vector<std::int64_t> poly = {1};
    for (int k = 0; k < 5; ++k) {
        poly = convolve(poly, kLinearFactor);
    }
    poly = convolve(poly, convolve(kQuadraticFactor, kQuadraticFactor));
    poly = convolve(poly, kQuarticFactor);
    if (poly.size() != 14) {
        throw std::logic_error("decoding polynomial expansion has the wrong degree");
    }
    std::array<std::int64_t, 14> out{};
    std::copy(poly.begin(), poly.end(), out.begin());
    return out;
}

double horner_int(const std::vector<std::int64_t>& coeffs, double x) {
    std::vector<double> d(coeffs.begin(), coeffs.end());
    return horner_compensated(d.data(), static_cast<int>(d.size()), x);
}

/// f2 keeps a single sign; the rational form would be meaningless otherwise.
void check_f2_has_no_root_in_working_interval() {
    static const bool checked = [] {
        double prev = 0.0;
        for (int i = 0; i <= 512; ++i) {
            const double e = 0.5 * static_cast<double>(i) / 512.0;
            const double v = horner_int(kF2Coefficients, e);
            if (i > 0 && v * prev <= 0.0) {
                throw std::logic_error("decoding polynomial: f2 changes sign in (0, 0.5)");
            }
            prev = v;
        }
        return true;
    }();
    (void)checked;
}

}  // namespace

double DecodingPolynomial::f1_factored(double e) {
    const double lin = 16.0 * e - 15.0;
    const double quad = 225.0 + e * (-180.0 + e * 32.0);
    const double quart = 16875.0 + e * (-40500.0 + e * (46800.0 + e * (-23040.0 + e * 4096.0)));
    return lin * lin * lin * lin * lin * quad * quad * quart;
}

const std::array<std::int64_t, 14>& DecodingPolynomial::f1_coefficients() {
    static const std::array<std::int64_t, 14> coeffs = expand_f1();
    return coeffs;
}

double DecodingPolynomial::f1_expanded(double e) {
    const auto& coeffs = f1_coefficients();
    std::array<double, 14> d{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        d[i] = static_cast<double>(coeffs[i]);
    }
    return horner_compensated(d.data(), static_cast<int>(d.size()), e);
}

double DecodingPolynomial::f2(double e) {
    return 1125.0 * std::sqrt(2.0) * horner_int(kF2Coefficients, e);
}

double DecodingPolynomial::value(double e) {
    check_f2_has_no_root_in_working_interval();
    return -0.5 - f1_expanded(e) / f2(e);
}

double decoding_polynomial_root() {
    constexpr int kGrid = 500;
    constexpr double kLo = 1e-9;
    constexpr double kHi = 0.5 - 1e-9;

    double bracket_lo = 0.0, bracket_hi = 0.0;
    int sign_changes = 0;
    double prev_e = kLo;
    double prev_v = DecodingPolynomial::value(kLo);
    for (int i = 1; i <= kGrid; ++i) {
        const double e = kLo + (kHi - kLo) * static_cast<double>(i) / kGrid;
        const double v = DecodingPolynomial::value(e);
        if (prev_v == 0.0 || v * prev_v < 0.0) {
            ++sign_changes;
            bracket_lo = prev_e;
            bracket_hi = e;
        }
        prev_e = e;
        prev_v = v;
    }
    if (sign_changes != 1) {
        throw std::domain_error(
            "decoding_polynomial_root: expected exactly one sign change in (0, 0.5); found " +
            std::to_string(sign_changes) + " (transcription error in the coefficients?)");
    }
    return bisect_decreasing([](double e) { return DecodingPolynomial::value(e); }, bracket_lo,
                             bracket_hi, 1e-13);
}

}  // namespace octabound
