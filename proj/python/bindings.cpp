#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octabound/bounds_table.hpp"
#include "octabound/scan.hpp"
#include "octabound/sim_oracle.hpp"
#include "octabound/verification.hpp"

namespace py = pybind11;
using namespace octabound;

PYBIND11_MODULE(_octabound, m) {
    m.doc() = "Classical-simulability upper bounds on thresholds of Clifford-based "
              "architectures: Bloch-sphere noise channels, teleportation-injection "
              "shifting rules, and octahedron-entry solvers.";
    m.attr("__version__") = kVersion;

    py::class_<BlochVector>(m, "BlochVector")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &BlochVector::x)
        .def_readwrite("y", &BlochVector::y)
        .def_readwrite("z", &BlochVector::z)
        .def("norm", &BlochVector::norm)
        .def("is_pure", &BlochVector::is_pure, py::arg("tol") = 1e-9)
        .def("__repr__", [](const BlochVector& b) {
            return "BlochVector(" + std::to_string(b.x) + ", " + std::to_string(b.y) + ", " +
                   std::to_string(b.z) + ")";
        });

    m.def("phase_state", [](double theta) { return phase_state(PhaseAngle(theta)); },
          py::arg("theta"), "Bloch vector (cos t, sin t, 0) of (|0> + e^{it}|1>)/sqrt(2)");
    m.def("octahedron_norm", &octahedron_norm);
    m.def("in_octahedron", &in_octahedron, py::arg("b"), py::arg("tol") = 1e-9);
    m.def("antipode", &antipode);
    m.def("bloch_to_density", &bloch_to_density);
    m.def("density_to_bloch", &density_to_bloch);

    py::enum_<Pauli>(m, "Pauli")
        .value("I", Pauli::I)
        .value("X", Pauli::X)
        .value("Y", Pauli::Y)
        .value("Z", Pauli::Z);
    m.def("pauli_compose", &pauli_compose);

    py::class_<AffineChannel>(m, "AffineChannel")
        .def(py::init<>())
        .def_readwrite("M", &AffineChannel::M)
        .def_readwrite("c", &AffineChannel::c)
        .def_static("identity", &AffineChannel::identity)
        .def("is_diagonal", &AffineChannel::is_diagonal, py::arg("tol") = 1e-12);
    m.def("pauli_channel", &pauli_channel);
    m.def("mix_with", &mix_with, py::arg("q"), py::arg("t"));
    m.def("opposite_noise", &opposite_noise, py::arg("sigma"), py::arg("t"));
    m.def("depolarizing", &depolarizing);
    m.def("compose", &compose);
    m.def("apply", &apply, py::arg("channel"), py::arg("b"));
    m.def("choi_matrix", &choi_matrix);
    m.def("choi_psd_check", &choi_psd_check, py::arg("channel"), py::arg("tol") = 1e-10);
    m.def("pauli_mixture_probabilities", &pauli_mixture_probabilities, py::arg("channel"),
          py::arg("tol") = 1e-9);

    py::enum_<InjectionVariant>(m, "InjectionVariant")
        .value("StateResource", InjectionVariant::StateResource)
        .value("GateResource", InjectionVariant::GateResource);
    py::enum_<ResourceKind>(m, "ResourceKind")
        .value("PhaseState", ResourceKind::PhaseState)
        .value("PhaseGate", ResourceKind::PhaseGate)
        .value("GeneralState", ResourceKind::GeneralState)
        .value("GeneralGate", ResourceKind::GeneralGate);
    py::enum_<Location>(m, "Location")
        .value("Resource", Location::Resource)
        .value("AfterCnotControl", Location::AfterCnotControl)
        .value("BeforeXMeas", Location::BeforeXMeas)
        .value("TargetInput", Location::TargetInput)
        .value("AfterCnotTarget", Location::AfterCnotTarget)
        .value("BeforeZMeas", Location::BeforeZMeas)
        .value("PrepBeforeGate", Location::PrepBeforeGate)
        .value("ControlInput", Location::ControlInput);
    py::enum_<NoiseModel>(m, "NoiseModel")
        .value("Knill", NoiseModel::Knill)
        .value("Epg", NoiseModel::Epg);

    py::class_<ResourceSpec>(m, "ResourceSpec")
        .def_readonly("kind", &ResourceSpec::kind)
        .def_readonly("theta", &ResourceSpec::theta)
        .def_readonly("bloch", &ResourceSpec::bloch)
        .def("gate_resource", &ResourceSpec::gate_resource)
        .def_static("phase_state",
                    [](double t) { return ResourceSpec::phase_state(PhaseAngle(t)); })
        .def_static("phase_gate",
                    [](double t) { return ResourceSpec::phase_gate(PhaseAngle(t)); })
        .def_static("general_state", &ResourceSpec::general_state)
        .def_static("general_gate", &ResourceSpec::general_gate);

    py::class_<PauliPairDistribution>(m, "PauliPairDistribution")
        .def(py::init<>())
        .def_readwrite("prob", &PauliPairDistribution::prob)
        .def("sum", &PauliPairDistribution::sum)
        .def_static("identity", &PauliPairDistribution::identity);

    py::class_<LocationNoise>(m, "LocationNoise")
        .def_readonly("variant", &LocationNoise::variant)
        .def_readonly("resource", &LocationNoise::resource)
        .def_readonly("control_input", &LocationNoise::control_input)
        .def_readonly("before_x_meas", &LocationNoise::before_x_meas)
        .def_readonly("target_input", &LocationNoise::target_input)
        .def_readonly("before_z_meas", &LocationNoise::before_z_meas)
        .def_readonly("prep_before_gate", &LocationNoise::prep_before_gate)
        .def_readonly("cnot_pair", &LocationNoise::cnot_pair);
    m.def("knill_location_noise", &knill_location_noise, py::arg("gamma"), py::arg("variant"));
    m.def("epg_location_noise", &epg_location_noise, py::arg("p"), py::arg("variant"),
          py::arg("resource"), py::arg("general_resource"));
    m.def("dephasing_two_hit_model", &dephasing_two_hit_model);
    m.def("independent_depolarizing", &independent_depolarizing);
    m.def("simultaneous_depolarizing", &simultaneous_depolarizing, py::arg("t"),
          py::arg("qubit_count"));
    m.def("totally_dephasing", &totally_dephasing);
    m.def("epg_split", &epg_split);

    py::class_<ShiftOutcome>(m, "ShiftOutcome")
        .def_readonly("absorbed", &ShiftOutcome::absorbed)
        .def_readonly("at_resource", &ShiftOutcome::at_resource);
    m.def("shift_rule", &shift_rule, py::arg("location"), py::arg("p"));
    m.def("reduce_pair_noise", &reduce_pair_noise);

    py::class_<EffectiveMap>(m, "EffectiveMap")
        .def_readonly("channel", &EffectiveMap::channel)
        .def_readonly("diagonal_factors", &EffectiveMap::diagonal_factors)
        .def_readonly("scalar_prefactor", &EffectiveMap::scalar_prefactor);
    m.def("effective_map", &effective_map, py::arg("noise"), py::arg("variant"),
          py::arg("resource"));
    m.def("knill_effective_formula", &knill_effective_formula, py::arg("gamma"), py::arg("n"));

    py::class_<ThresholdResult>(m, "ThresholdResult")
        .def_readonly("strength", &ThresholdResult::strength)
        .def_readonly("residual", &ThresholdResult::residual)
        .def_readonly("bracket", &ThresholdResult::bracket)
        .def_readonly("already_inside", &ThresholdResult::already_inside);
    m.def("octahedron_threshold", &octahedron_threshold, py::arg("family"), py::arg("resource"),
          py::arg("s_max"), py::arg("monotone_samples") = 100);
    m.def("injection_threshold", &injection_threshold, py::arg("model"), py::arg("variant"),
          py::arg("resource"));
    m.def("injection_effective_map", &injection_effective_map, py::arg("model"),
          py::arg("strength"), py::arg("variant"), py::arg("resource"));
    m.def("strength_cap", &strength_cap);

    py::class_<TwoHitDephasingBound>(m, "TwoHitDephasingBound")
        .def_readonly("p", &TwoHitDephasingBound::p)
        .def_readonly("p_tilde", &TwoHitDephasingBound::p_tilde)
        .def_readonly("q", &TwoHitDephasingBound::q);
    m.def("two_hit_dephasing_threshold", &two_hit_dephasing_threshold);
    m.def("epg_phase_threshold_general", &epg_phase_threshold_general);
    m.def("depolarizing_two_hit_threshold", &depolarizing_two_hit_threshold);
    m.def("decoding_polynomial_root", &decoding_polynomial_root);
    m.def("decoding_polynomial_value", &DecodingPolynomial::value);

    py::class_<ProfilePoint>(m, "ProfilePoint")
        .def_readonly("param1", &ProfilePoint::param1)
        .def_readonly("param2", &ProfilePoint::param2)
        .def_readonly("threshold", &ProfilePoint::threshold);
    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("best_resource", &ScanResult::best_resource)
        .def_readonly("best_threshold", &ScanResult::best_threshold)
        .def_readonly("param_dim", &ScanResult::param_dim)
        .def_readonly("profile", &ScanResult::profile);
    m.def("scan_phase_resources", &scan_phase_resources, py::arg("model"), py::arg("variant"),
          py::arg("grid") = 512);
    m.def("scan_general_resources", &scan_general_resources, py::arg("model"), py::arg("variant"),
          py::arg("grid") = 64);
    m.def("analytic_diagonal_optimum", &analytic_diagonal_optimum);
    m.def("analytic_envelope_threshold", &analytic_envelope_threshold, py::arg("model"),
          py::arg("variant"), py::arg("general_resource"), py::arg("restrict_to_plane"));

    m.def("oracle_effective_channel", &oracle_effective_channel, py::arg("model"),
          py::arg("strength"), py::arg("variant"), py::arg("resource"));
    m.def("oracle_threshold", &oracle_threshold, py::arg("model"), py::arg("variant"),
          py::arg("resource"));

    py::class_<BoundRow>(m, "BoundRow")
        .def_readonly("resources", &BoundRow::resources)
        .def_readonly("method", &BoundRow::method)
        .def_readonly("model", &BoundRow::model)
        .def_readonly("reference", &BoundRow::reference)
        .def_readonly("tolerance", &BoundRow::tolerance)
        .def("compute", [](const BoundRow& row) { return row.compute(); });
    m.def("summary_rows", &summary_rows);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("residual", &CheckResult::residual);
    m.def("verify_shift_rules", &verify_shift_rules);
    m.def("verify_map_agreement", &verify_map_agreement, py::arg("settings") = 20,
          py::arg("seed") = 20260810u);
    m.def("verify_cptp", &verify_cptp);
    m.def("verify_monotonicity", &verify_monotonicity);
    m.def("verify_all", &verify_all);
}
