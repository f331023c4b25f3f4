#include "octabound/bounds_table.hpp"

#include "octabound/scan.hpp"

namespace octabound {

std::vector<BoundRow> summary_rows() {
    std::vector<BoundRow> rows;
    rows.push_back({"phase gates/states", "any", "independent N^Z_p", 0.0796, 1e-4,
                    [] { return two_hit_dephasing_threshold().p; }});
    rows.push_back({"phase gates/states", "any", "EPG", 0.1041, 1e-4,
                    [] { return epg_phase_threshold_general(); }});
    rows.push_back({"all gates", "any", "indep. depolarizing", 0.2605, 1e-4,
                    [] { return depolarizing_two_hit_threshold(); }});

    const auto scan = [](NoiseModel model, InjectionVariant variant, bool general) {
        return [=] {
            return general ? scan_general_resources(model, variant).best_threshold
                           : scan_phase_resources(model, variant).best_threshold;
        };
    };
    rows.push_back({"phase gates", "injection", "Knill", 0.0959, 2e-4,
                    scan(NoiseModel::Knill, InjectionVariant::GateResource, false)});
    rows.push_back({"phase states", "injection", "Knill", 0.1371, 2e-4,
                    scan(NoiseModel::Knill, InjectionVariant::StateResource, false)});
    rows.push_back({"phase gates", "injection", "EPG", 0.0301, 2e-4,
                    scan(NoiseModel::Epg, InjectionVariant::GateResource, false)});
    rows.push_back({"phase states", "injection", "EPG", 0.0369, 2e-4,
                    scan(NoiseModel::Epg, InjectionVariant::StateResource, false)});
    rows.push_back({"all gates", "injection", "Knill", 0.1519, 2e-4,
                    scan(NoiseModel::Knill, InjectionVariant::GateResource, true)});
    rows.push_back({"all states", "injection", "Knill", 0.2178, 2e-4,
                    scan(NoiseModel::Knill, InjectionVariant::StateResource, true)});
    rows.push_back({"all gates", "injection", "EPG", 0.0503, 2e-4,
                    scan(NoiseModel::Epg, InjectionVariant::GateResource, true)});
    rows.push_back({"all states", "injection", "EPG", 0.0631, 2e-4,
                    scan(NoiseModel::Epg, InjectionVariant::StateResource, true)});
    return rows;
}

}  // namespace octabound
