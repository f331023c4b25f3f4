#pragma once

#include <string>
#include <vector>

namespace octabound {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;  // worst deviation observed
    std::string detail;
};

/// The 18 deterministic Pauli shift identities, each checked as a channel
/// identity against the dense oracle: locations {control-input, 2..6} x
/// {X, Y, Z} on the state circuit. Tolerance 1e-12.
std::vector<CheckResult> verify_shift_rules();

/// Shift-engine effective channel vs oracle tomography for randomized
/// (model, strength, variant, resource) settings. Tolerance 1e-10.
std::vector<CheckResult> verify_map_agreement(int settings = 20, unsigned seed = 20260810);

/// Complete positivity and trace preservation of every channel the model
/// constructors emit, plus the effective maps, across a strength sweep.
std::vector<CheckResult> verify_cptp();

/// The octahedron gap is strictly decreasing in the strength for every
/// shipped map family (sampled at 100 points).
std::vector<CheckResult> verify_monotonicity();

std::vector<CheckResult> verify_all();

}  // namespace octabound
