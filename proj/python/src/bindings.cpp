#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ewit/app/config.hpp"
#include "ewit/app/validate.hpp"
#include "ewit/errors.hpp"
#include "ewit/inversion.hpp"
#include "ewit/potentials.hpp"
#include "ewit/qcore.hpp"
#include "ewit/scan.hpp"
#include "ewit/units.hpp"

namespace py = pybind11;
using namespace ewit;

namespace {

potentials::Vec3 vec3(const std::vector<double>& v)
{
    if (v.size() != 3)
        fail(ErrorKind::usage, "spin directions need three components");
    return {v[0], v[1], v[2]};
}

std::vector<double> list3(const potentials::Vec3& v) { return {v[0], v[1], v[2]}; }

py::dict curve_dict(const scan::ConstraintCurve& curve, const scan::RoundTripReport& rt)
{
    std::vector<double> abscissa, coupling, omega_tau;
    std::vector<bool> valid;
    std::vector<std::optional<std::string>> errors;
    for (const auto& s : curve.samples) {
        abscissa.push_back(s.abscissa);
        coupling.push_back(s.coupling);
        omega_tau.push_back(s.omega_ent_tau);
        valid.push_back(s.valid);
        errors.push_back(s.error ? std::optional<std::string>(std::string(to_string(*s.error))) : std::nullopt);
    }
    py::dict d;
    d["model"] = std::string(scan::to_string(curve.request.model));
    d["abscissa_kind"] = std::string(scan::to_string(scan::abscissa_kind(curve.request.model)));
    d["coupling_kind"] = std::string(scan::to_string(scan::coupling_kind(curve.request.model)));
    d["abscissa"] = abscissa;
    d["coupling"] = coupling;
    d["omega_ent_tau"] = omega_tau;
    d["valid"] = valid;
    d["error_kind"] = errors;
    d["round_trip_max_relative_error"] = rt.max_relative_error;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Entanglement-witness constraints on Yukawa-type interactions";

    static py::object error_type = py::reinterpret_borrow<py::object>(
        py::exception<Error>(m, "EwitError", PyExc_ValueError));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = error_type(e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    m.def("mass_ev_to_range_m", &units::mass_ev_to_range_m, py::arg("m_phi_eV"));
    m.def("range_m_to_mass_ev", &units::range_m_to_mass_ev, py::arg("lambda_m"));
    m.def("ion_trap_delta_x", &potentials::ion_trap_delta_x, py::arg("mass"), py::arg("omega"));

    m.def("witness_closed_form", &qcore::witness_closed_form, py::arg("omega_ent"), py::arg("gamma"),
          py::arg("tau"));
    m.def(
        "evaluate_witness",
        [](double phi_1, double phi_2, double gamma, double tau, double phi_global) {
            const auto ev = qcore::evaluate_witness({phi_global, phi_1, phi_2}, gamma, tau);
            py::dict d;
            d["closed_form_W"] = ev.closed_form_W;
            d["numeric_min_pt_eigenvalue"] = ev.numeric_min_pt_eigenvalue;
            d["negativity"] = ev.negativity;
            d["gamma_tau"] = ev.gamma_tau;
            d["omega_ent_tau"] = ev.omega_ent_tau;
            d["valid_approximation"] = ev.valid_approximation;
            return d;
        },
        py::arg("phi_1"), py::arg("phi_2"), py::arg("gamma"), py::arg("tau"), py::arg("phi_global") = 0.0);

    py::class_<potentials::Geometry>(m, "Geometry")
        .def(py::init([](double d, double delta_x, double tau) {
                 potentials::Geometry g{d, delta_x, tau};
                 g.validate();
                 return g;
             }),
             py::arg("d"), py::arg("delta_x"), py::arg("tau"))
        .def_readonly("d", &potentials::Geometry::d)
        .def_readonly("delta_x", &potentials::Geometry::delta_x)
        .def_readonly("tau", &potentials::Geometry::tau);

    py::class_<inversion::WitnessTarget>(m, "WitnessTarget")
        .def(py::init([](double W, double gamma, double tau) {
                 inversion::WitnessTarget t{W, gamma, tau};
                 t.validate();
                 return t;
             }),
             py::arg("W"), py::arg("gamma"), py::arg("tau"))
        .def_readonly("W", &inversion::WitnessTarget::W)
        .def_readonly("gamma", &inversion::WitnessTarget::gamma)
        .def_readonly("tau", &inversion::WitnessTarget::tau);

    py::class_<inversion::Coupling>(m, "Coupling")
        .def_readonly("value", &inversion::Coupling::value)
        .def_readonly("omega_ent_tau", &inversion::Coupling::omega_ent_tau)
        .def_readonly("gamma_tau", &inversion::Coupling::gamma_tau)
        .def_readonly("valid", &inversion::Coupling::valid)
        .def("__repr__", [](const inversion::Coupling& c) {
            return "Coupling(value=" + std::to_string(c.value) + ", valid=" + (c.valid ? "True" : "False") + ")";
        });

    py::class_<potentials::Yukawa>(m, "Yukawa")
        .def(py::init<double, double>(), py::arg("alpha"), py::arg("lam"))
        .def_readonly("alpha", &potentials::Yukawa::alpha)
        .def_readonly("lam", &potentials::Yukawa::lambda);
    py::class_<potentials::ModifiedNewtonian>(m, "ModifiedNewtonian")
        .def(py::init<double, double, double>(), py::arg("alpha_g"), py::arg("lam"), py::arg("mass"))
        .def_readonly("alpha_g", &potentials::ModifiedNewtonian::alpha_g);
    py::class_<potentials::ScalarAlp>(m, "ScalarAlp")
        .def(py::init<double, double>(), py::arg("g_s"), py::arg("m_phi_eV"))
        .def_readonly("g_s", &potentials::ScalarAlp::g_s);
    py::class_<potentials::PseudoscalarAlp>(m, "PseudoscalarAlp")
        .def(py::init([](double g_p, double m_phi_eV, const std::vector<double>& s1, const std::vector<double>& s2) {
                 return potentials::PseudoscalarAlp{g_p, m_phi_eV, {vec3(s1), vec3(s2)}};
             }),
             py::arg("g_p"), py::arg("m_phi_eV"), py::arg("s1") = std::vector<double>{1.0, 0.0, 0.0},
             py::arg("s2") = std::vector<double>{1.0, 0.0, 0.0})
        .def_readonly("g_p", &potentials::PseudoscalarAlp::g_p)
        .def_property_readonly("s1", [](const potentials::PseudoscalarAlp& p) { return list3(p.spin.s1_hat); })
        .def_property_readonly("s2", [](const potentials::PseudoscalarAlp& p) { return list3(p.spin.s2_hat); });

    m.def(
        "potential_energy",
        [](const potentials::PotentialModel& model, const std::vector<double>& r) {
            return potentials::potential_energy(model, vec3(r));
        },
        py::arg("model"), py::arg("r"));
    m.def(
        "phase_pair",
        [](const potentials::PotentialModel& model, const potentials::Geometry& geom) {
            const auto p = potentials::phase_pair(model, geom);
            return py::make_tuple(p.phi_global, p.phi_1, p.phi_2);
        },
        py::arg("model"), py::arg("geom"), "(phi_global, phi_1, phi_2)");

    m.def("omega_ent_from_witness", &inversion::omega_ent_from_witness, py::arg("target"));
    m.def("alpha_from_witness", &inversion::alpha_from_witness, py::arg("target"), py::arg("lam"), py::arg("geom"));
    m.def("alpha_g_from_witness", &inversion::alpha_g_from_witness, py::arg("target"), py::arg("lam"),
          py::arg("mass"), py::arg("geom"));
    m.def("g_s_from_witness", &inversion::g_s_from_witness, py::arg("target"), py::arg("m_phi_eV"),
          py::arg("geom"));
    m.def(
        "g_p_from_witness",
        [](const inversion::WitnessTarget& t, double m_phi_eV, const potentials::Geometry& g,
           const std::vector<double>& s1, const std::vector<double>& s2) {
            const potentials::SpinConfig spin{vec3(s1), vec3(s2)};
            spin.validate();
            return inversion::g_p_from_witness(t, m_phi_eV, spin, g);
        },
        py::arg("target"), py::arg("m_phi_eV"), py::arg("geom"), py::arg("s1") = std::vector<double>{1.0, 0.0, 0.0},
        py::arg("s2") = std::vector<double>{1.0, 0.0, 0.0});

    m.def("preset_names", &app::preset_names);
    m.def(
        "preset_config", [](const std::string& name) { return app::dump_run_config(app::preset_config(name)); },
        py::arg("name"), "YAML text of a preset configuration");
    m.def(
        "scan",
        [](const std::string& config) {
            const auto cfg = app::parse_run_config(config);
            const auto curve = scan::run_scan(cfg.request);
            return curve_dict(curve, scan::round_trip_check(curve, cfg.request));
        },
        py::arg("config"), "Run a scan from YAML/JSON configuration text, e.g. 'preset: fig2'");

    m.def("validate", [] {
        std::vector<py::tuple> out;
        for (const auto& r : app::run_validation())
            out.push_back(py::make_tuple(r.name, r.passed, r.detail));
        return out;
    });
}
