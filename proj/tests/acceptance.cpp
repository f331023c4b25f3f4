// Acceptance suite: recomputes every headline quantity from first principles
// and checks it against the published value at the pinned tolerance,
// printing one line per criterion.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "octabound/bounds_table.hpp"
#include "octabound/scan.hpp"
#include "octabound/sim_oracle.hpp"
#include "octabound/verification.hpp"

using namespace octabound;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %-46s %s\n", ok ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

bool close(double value, double expected, double tol) {
    return std::abs(value - expected) <= tol;
}

std::string delta(double value, double expected, double tol) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "value %.9f, want %.7g +- %.1g", value, expected, tol);
    return buf;
}

void criterion_1() {
    const TwoHitDephasingBound bound = two_hit_dephasing_threshold();
    report(1, "two-hit dephasing p",
           close(bound.p, 0.079552, 1e-5), delta(bound.p, 0.079552, 1e-5));
    report(1, "two-hit dephasing p~",
           close(bound.p_tilde, 0.15910, 1e-4), delta(bound.p_tilde, 0.15910, 1e-4));
    report(1, "single-hit q",
           close(bound.q, 0.146447, 1e-6), delta(bound.q, 0.146447, 1e-6));
}

void criterion_2() {
    const double p = epg_phase_threshold_general();
    report(2, "EPG general phase bound",
           close(p, 0.1041008383, 1e-9), delta(p, 0.1041008383, 1e-9));
}

void criterion_3() {
    const double p = depolarizing_two_hit_threshold();
    report(3, "depolarizing two-hit bound",
           close(p, 0.26046, 2e-4), delta(p, 0.26046, 2e-4));
}

double knill_formula_threshold(int n) {
    // closed-formula route: solve the |pi/4> face equation on the factors
    const BlochVector quarter = phase_state(PhaseAngle(kPi / 4));
    double lo = 0.0, hi = 15.0 / 16.0;
    const auto gap = [&](double g) {
        const Eigen::Vector3d f = knill_effective_formula(g, n);
        return f.x() * quarter.x + f.y() * quarter.y - 1.0;
    };
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void criterion_4() {
    const ResourceSpec state = ResourceSpec::phase_state(PhaseAngle(kPi / 4));
    const double by_engine =
        injection_threshold(NoiseModel::Knill, InjectionVariant::StateResource, state).strength;
    const double by_formula = knill_formula_threshold(1);
    report(4, "Knill |pi/4> state (bisection)",
           close(by_engine, 0.136861, 1e-5), delta(by_engine, 0.136861, 1e-5));
    report(4, "Knill |pi/4> state (closed formula)",
           close(by_formula, 0.136861, 1e-5), delta(by_formula, 0.136861, 1e-5));

    const ResourceSpec gate = ResourceSpec::phase_gate(PhaseAngle(kPi / 4));
    const double gate_engine =
        injection_threshold(NoiseModel::Knill, InjectionVariant::GateResource, gate).strength;
    const double gate_formula = knill_formula_threshold(2);
    report(4, "Knill U(pi/4) gate (bisection)",
           close(gate_engine, 0.095858, 1e-5), delta(gate_engine, 0.095858, 1e-5));
    report(4, "Knill U(pi/4) gate (closed formula)",
           close(gate_formula, 0.095858, 1e-5), delta(gate_formula, 0.095858, 1e-5));
}

void criterion_5() {
    const ResourceSpec state = ResourceSpec::phase_state(PhaseAngle(kPi / 4));
    const double p_state =
        injection_threshold(NoiseModel::Epg, InjectionVariant::StateResource, state).strength;
    report(5, "EPG |pi/4> state",
           close(p_state, 0.0368124, 1e-6), delta(p_state, 0.0368124, 1e-6));

    const ResourceSpec gate = ResourceSpec::phase_gate(PhaseAngle(kPi / 4));
    const double p_gate =
        injection_threshold(NoiseModel::Epg, InjectionVariant::GateResource, gate).strength;
    report(5, "EPG U(pi/4) gate",
           close(p_gate, 0.0300339, 1e-6), delta(p_gate, 0.0300339, 1e-6));
}

void criterion_6() {
    struct Row {
        const char* label;
        NoiseModel model;
        InjectionVariant variant;
        bool general;
        double expected;
    };
    const std::vector<Row> rows = {
        {"scan Knill phase states", NoiseModel::Knill, InjectionVariant::StateResource, false,
         0.1371},
        {"scan Knill phase gates", NoiseModel::Knill, InjectionVariant::GateResource, false,
         0.0959},
        {"scan Knill general states", NoiseModel::Knill, InjectionVariant::StateResource, true,
         0.2178},
        {"scan Knill general gates", NoiseModel::Knill, InjectionVariant::GateResource, true,
         0.1519},
        {"scan EPG phase states", NoiseModel::Epg, InjectionVariant::StateResource, false,
         0.0369},
        {"scan EPG phase gates", NoiseModel::Epg, InjectionVariant::GateResource, false, 0.0301},
        {"scan EPG general states", NoiseModel::Epg, InjectionVariant::StateResource, true,
         0.0631},
        {"scan EPG general gates", NoiseModel::Epg, InjectionVariant::GateResource, true, 0.0503},
    };
    for (const Row& row : rows) {
        const double value = row.general
                                 ? scan_general_resources(row.model, row.variant).best_threshold
                                 : scan_phase_resources(row.model, row.variant).best_threshold;
        report(6, row.label, close(value, row.expected, 2e-4), delta(value, row.expected, 2e-4));
    }
}

void criterion_7() {
    const double root = decoding_polynomial_root();
    report(7, "decoding polynomial root",
           close(root, 0.092888, 1e-5), delta(root, 0.092888, 1e-5));

    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double e = 0.5 * static_cast<double>(i) / 400.0;
        const double factored = DecodingPolynomial::f1_factored(e);
        const double expanded = DecodingPolynomial::f1_expanded(e);
        const double scale = std::max({std::abs(factored), std::abs(expanded), 1.0});
        worst = std::max(worst, std::abs(factored - expanded) / scale);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max relative gap %.2e", worst);
    report(7, "factored vs expanded f1 (10 digits)", worst < 1e-10, buf);
}

void criterion_8() {
    const auto maps = verify_map_agreement(20);
    double worst = 0.0;
    bool ok = true;
    for (const auto& check : maps) {
        worst = std::max(worst, check.residual);
        ok = ok && check.passed;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "20 settings, worst deviation %.2e (tol 1e-10)", worst);
    report(8, "oracle vs engine channels", ok, buf);

    const auto rules = verify_shift_rules();
    worst = 0.0;
    ok = rules.size() == 18;
    for (const auto& check : rules) {
        worst = std::max(worst, check.residual);
        ok = ok && check.passed;
    }
    std::snprintf(buf, sizeof(buf), "%zu identities, worst deviation %.2e (tol 1e-12)",
                  rules.size(), worst);
    report(8, "deterministic shift identities", ok, buf);
}

void criterion_9() {
    const auto cptp = verify_cptp();
    bool ok = !cptp.empty();
    for (const auto& check : cptp) ok = ok && check.passed;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu channels checked", cptp.size());
    report(9, "CPTP for every constructed channel", ok, buf);

    std::mt19937 rng(99);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
        v.normalize();
        const double reference = octahedron_norm(BlochVector::from(v));
        const auto& perm = perms[trial % 6];
        const int signs = trial % 8;
        Eigen::Vector3d w;
        for (int i = 0; i < 3; ++i) {
            w(i) = ((signs >> i) & 1 ? -1.0 : 1.0) * v(perm[i]);
        }
        worst = std::max(worst, std::abs(octahedron_norm(BlochVector::from(w)) - reference));
    }
    std::snprintf(buf, sizeof(buf), "1000 vectors, worst deviation %.2e", worst);
    report(9, "octahedral symmetry of the norm", worst < 1e-12, buf);

    const ResourceSpec res = ResourceSpec::phase_state(PhaseAngle(kPi / 4));
    LocationNoise clean;
    clean.variant = InjectionVariant::StateResource;
    const AffineChannel ideal =
        simulate_channel(build_injection_circuit(InjectionVariant::StateResource, res, clean));
    const double dist = std::max((ideal.M - Eigen::Matrix3d::Identity()).lpNorm<Eigen::Infinity>(),
                                 ideal.c.lpNorm<Eigen::Infinity>());
    std::snprintf(buf, sizeof(buf), "deviation from identity %.2e (tol 1e-12)", dist);
    report(9, "ideal injection is the identity channel", dist <= 1e-12, buf);
}

void criterion_10() {
    // The 10.0638% decoder variant and simultaneous-depolarizing thresholds
    // are out of scope; only the model constructor's distribution is checked.
    const auto dist = simultaneous_depolarizing(0.3, 2);
    bool ok = dist.size() == 16;
    double sum = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        ok = ok && dist[i] >= 0.0;
        if (i > 0) ok = ok && std::abs(dist[i] - 0.3 / 15.0) < 1e-15;
        sum += dist[i];
    }
    ok = ok && std::abs(sum - 1.0) < 1e-12;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "distribution sums to %.15f", sum);
    report(10, "simultaneous depolarizing distribution", ok, buf);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d check(s) FAILED\n", failures);
    return 1;
}
