#pragma once

#include <functional>
#include <string>
#include <vector>

namespace octabound {

inline constexpr const char* kVersion = "0.1.0";

/// One row of the summary table of upper bounds: how the value is computed
/// from first principles, and the published reference it must reproduce.
struct BoundRow {
    std::string resources;
    std::string method;
    std::string model;
    double reference = 0.0;  // published value, as a fraction
    double tolerance = 0.0;  // absolute
    std::function<double()> compute;
};

/// All eleven summary rows, in print order.
std::vector<BoundRow> summary_rows();

}  // namespace octabound
