// ewit: constraint curves from entanglement-witness targets.
//
//   ewit scan --preset fig2 --out fig2.csv
//   ewit scan --config run.yaml --format json
//   ewit witness --phi1 -0.5 --phi2 -0.5 --gamma 0.1 --tau 1
//   ewit witness --model yukawa --coupling 9e-39 --range 1e-4 --d 5e-5 --delta-x 1e-5
//   ewit classify --curve fig3.csv --exclusion data/exclusions/example_alpha_g.txt
//   ewit validate

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ewit/app/commands.hpp"
#include "ewit/app/config.hpp"
#include "ewit/errors.hpp"
#include "ewit/scan.hpp"

namespace {

using namespace ewit;

struct ScanFlags {
    std::string config;
    std::string preset;
    std::string out;
    std::string format;
    std::vector<std::string> exclusions;
    std::optional<double> gamma, tau, witness, grid_min, grid_max;
    std::optional<std::size_t> points;
};

app::RunConfig build_run_config(const ScanFlags& f)
{
    if (!f.config.empty() && !f.preset.empty())
        fail(ErrorKind::config, "--config and --preset are mutually exclusive");

    app::RunConfig cfg;
    if (!f.config.empty())
        cfg = app::load_run_config(f.config);
    else if (!f.preset.empty())
        cfg = app::preset_config(f.preset);
    else
        fail(ErrorKind::config, "scan needs --config or --preset");

    auto& r = cfg.request;
    if (f.gamma)
        r.target.gamma = *f.gamma;
    if (f.tau)
        r.geom.tau = r.target.tau = *f.tau;
    if (f.witness)
        r.target.W = *f.witness;
    if (f.grid_min)
        r.grid.min = *f.grid_min;
    if (f.grid_max)
        r.grid.max = *f.grid_max;
    if (f.points)
        r.grid.points = *f.points;
    if (!f.out.empty())
        cfg.out = f.out;
    if (!f.format.empty())
        cfg.format = app::parse_output_format(f.format);
    for (const auto& e : f.exclusions)
        cfg.exclusions.push_back(e);
    try {
        r.validate();
    } catch (const Error& e) {
        fail(ErrorKind::config, e.what());
    }
    return cfg;
}

struct WitnessFlags {
    std::optional<double> phi_global, phi1, phi2;
    std::string model;
    double coupling = 0.0;
    std::optional<double> range, mass_ev;
    double particle_mass = 0.0;
    double d = 0.0;
    double delta_x = 0.0;
    double gamma = 0.0;
    double tau = 1.0;
};

app::WitnessInput build_witness_input(const WitnessFlags& f)
{
    app::WitnessInput in;
    in.gamma = f.gamma;
    in.tau = f.tau;
    if (f.phi1 || f.phi2) {
        in.phases = qcore::PhaseSet{f.phi_global.value_or(0.0), f.phi1.value_or(0.0), f.phi2.value_or(0.0)};
        return in;
    }
    if (f.model.empty())
        fail(ErrorKind::config, "witness needs --phi1/--phi2 or --model");
    in.geom = {f.d, f.delta_x, f.tau};
    switch (scan::parse_model_kind(f.model)) {
    case scan::ModelKind::yukawa:
        in.model = potentials::Yukawa{f.coupling, f.range.value_or(0.0)};
        break;
    case scan::ModelKind::modified_newtonian:
        in.model = potentials::ModifiedNewtonian{f.coupling, f.range.value_or(0.0), f.particle_mass};
        break;
    case scan::ModelKind::scalar_alp:
        in.model = potentials::ScalarAlp{f.coupling, f.mass_ev.value_or(0.0)};
        break;
    case scan::ModelKind::pseudoscalar_alp:
        in.model = potentials::PseudoscalarAlp{f.coupling, f.mass_ev.value_or(0.0), {}};
        break;
    }
    return in;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App cli{"Entanglement-witness constraint curves for Yukawa-type interactions"};
    cli.require_subcommand(1);

    ScanFlags sf;
    auto* scan_cmd = cli.add_subcommand("scan", "Invert a witness target over a range/mass grid");
    scan_cmd->add_option("--config", sf.config, "YAML/JSON run configuration");
    scan_cmd->add_option("--preset", sf.preset, "fig2|fig3|fig4-near|fig4-far|fig5|fig5-low-gamma");
    scan_cmd->add_option("--out", sf.out, "Output path (default stdout)");
    scan_cmd->add_option("--format", sf.format, "csv|json");
    scan_cmd->add_option("--exclusion", sf.exclusions, "Exclusion file (repeatable)");
    scan_cmd->add_option("--gamma", sf.gamma, "Dephasing rate [Hz]");
    scan_cmd->add_option("--tau", sf.tau, "Interaction time [s]");
    scan_cmd->add_option("--witness", sf.witness, "Target witness value");
    scan_cmd->add_option("--points", sf.points, "Grid points");
    scan_cmd->add_option("--grid-min", sf.grid_min, "Grid start (m or eV)");
    scan_cmd->add_option("--grid-max", sf.grid_max, "Grid end (m or eV)");

    WitnessFlags wf;
    auto* wit_cmd = cli.add_subcommand("witness", "Evaluate the PPT witness for given phases or a potential");
    wit_cmd->add_option("--phi", wf.phi_global, "Global phase [rad]");
    wit_cmd->add_option("--phi1", wf.phi1, "Phase phi_1 [rad]");
    wit_cmd->add_option("--phi2", wf.phi2, "Phase phi_2 [rad]");
    wit_cmd->add_option("--model", wf.model, "yukawa|modified_newtonian|scalar_alp|pseudoscalar_alp");
    wit_cmd->add_option("--coupling", wf.coupling, "alpha [J m], alpha_g, g_S or g_P");
    wit_cmd->add_option("--range", wf.range, "Yukawa range lambda [m]");
    wit_cmd->add_option("--mass", wf.mass_ev, "Boson mass [eV]");
    wit_cmd->add_option("--particle-mass", wf.particle_mass, "Test-mass mass [kg]");
    wit_cmd->add_option("--d", wf.d, "Trap separation [m]");
    wit_cmd->add_option("--delta-x", wf.delta_x, "Superposition width [m]");
    wit_cmd->add_option("--gamma", wf.gamma, "Dephasing rate [Hz]");
    wit_cmd->add_option("--tau", wf.tau, "Interaction time [s]");

    std::string curve_file;
    std::string classify_out;
    std::vector<std::string> classify_exclusions;
    auto* cls_cmd = cli.add_subcommand("classify", "Compare a curve with exclusion regions");
    cls_cmd->add_option("--curve", curve_file, "Curve file written by scan (CSV or JSON)")->required();
    cls_cmd->add_option("--exclusion", classify_exclusions, "Exclusion file (repeatable)");
    cls_cmd->add_option("--out", classify_out, "Output path (default stdout)");

    auto* val_cmd = cli.add_subcommand("validate", "Run the built-in property suite");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : app::exit_config_error;
    }

    try {
        if (*scan_cmd)
            return app::cmd_scan(build_run_config(sf), std::cout, std::cerr);
        if (*wit_cmd)
            return app::cmd_witness(build_witness_input(wf), std::cout, std::cerr);
        if (*cls_cmd)
            return app::cmd_classify(curve_file, classify_exclusions, classify_out, std::cout, std::cerr);
        if (*val_cmd)
            return app::cmd_validate(std::cout);
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return e.kind() == ErrorKind::config || e.kind() == ErrorKind::usage ? app::exit_config_error
                                                                              : app::exit_computation_error;
    }
    return app::exit_config_error;
}
