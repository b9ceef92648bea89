#include "ewit/app/commands.hpp"

#include <fstream>
#include <sstream>

#include "ewit/app/curve_io.hpp"
#include "ewit/bounds.hpp"
#include "ewit/errors.hpp"
#include "ewit/scan.hpp"

namespace ewit::app {

namespace {

int exit_code_for(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::config:
    case ErrorKind::usage:
    case ErrorKind::parse:
    case ErrorKind::monotonicity:
    case ErrorKind::non_positive_limit:
    case ErrorKind::kind_mismatch:
    case ErrorKind::io:
        return exit_config_error;
    default:
        return exit_computation_error;
    }
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback)
{
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        fail(ErrorKind::io, "cannot write " + path);
    f << text;
    if (!f)
        fail(ErrorKind::io, "write failed for " + path);
}

std::string summary_line(const bounds::ClassificationSummary& s)
{
    std::ostringstream ss;
    ss << "allowed: " << s.allowed << ", excluded: " << s.excluded
       << ", outside_region_support: " << s.outside_region_support << ", no_coupling: " << s.no_coupling;
    return ss.str();
}

} // namespace

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& log)
{
    try {
        const scan::ConstraintCurve curve = scan::run_scan(config.request);
        const scan::RoundTripReport rt = scan::round_trip_check(curve, config.request);

        std::vector<bounds::ExclusionRegion> regions;
        for (const auto& f : config.exclusions)
            regions.push_back(bounds::load_exclusion(f));

        std::ostringstream text;
        if (config.format == OutputFormat::csv) {
            write_curve_csv(text, curve);
        } else {
            auto doc = curve_to_json(curve, config, rt);
            if (!regions.empty()) {
                const auto pts = bounds::curve_points(curve);
                const auto classes = bounds::classify_curve(scan::abscissa_kind(config.request.model),
                                                            scan::coupling_kind(config.request.model), pts, regions);
                auto& arr = doc["classification"] = nlohmann::json::array();
                for (auto c : classes)
                    arr.push_back(bounds::to_string(c));
            }
            text << doc.dump(2) << '\n';
        }

        std::size_t errors = 0;
        std::size_t valid = 0;
        for (const auto& s : curve.samples) {
            errors += s.error.has_value();
            valid += s.valid;
        }
        log << "scan " << scan::to_string(config.request.model) << ": " << curve.samples.size() << " samples, "
            << valid << " valid, " << errors << " errors; round-trip max rel err " << rt.max_relative_error
            << (rt.empty() ? " (empty)" : "") << '\n';
        if (!regions.empty()) {
            const auto pts = bounds::curve_points(curve);
            const auto classes = bounds::classify_curve(scan::abscissa_kind(config.request.model),
                                                        scan::coupling_kind(config.request.model), pts, regions);
            log << summary_line(bounds::summarize(classes)) << '\n';
        }

        if (rt.max_relative_error > kRoundTripTolerance) {
            log << "error: round-trip check exceeded " << kRoundTripTolerance << '\n';
            return exit_validation_failure;
        }
        write_text(config.out, text.str(), out);
        return exit_ok;
    } catch (const Error& e) {
        log << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int cmd_witness(const WitnessInput& input, std::ostream& out, std::ostream& log)
{
    try {
        qcore::PhaseSet phases;
        if (input.phases) {
            phases = *input.phases;
        } else if (input.model) {
            potentials::Geometry g = input.geom;
            g.tau = input.tau;
            phases = potentials::phase_pair(*input.model, g);
        } else {
            fail(ErrorKind::usage, "witness needs phases or a potential model");
        }
        const auto ev = qcore::evaluate_witness(phases, input.gamma, input.tau);
        out << "phi_global: " << format_number(phases.phi_global) << '\n'
            << "phi_1: " << format_number(phases.phi_1) << '\n'
            << "phi_2: " << format_number(phases.phi_2) << '\n'
            << "closed_form_W: " << format_number(ev.closed_form_W) << '\n'
            << "numeric_min_pt_eigenvalue: " << format_number(ev.numeric_min_pt_eigenvalue) << '\n'
            << "negativity: " << format_number(ev.negativity) << '\n'
            << "gamma_tau: " << format_number(ev.gamma_tau) << '\n'
            << "omega_ent_tau: " << format_number(ev.omega_ent_tau) << '\n'
            << "gamma_tau_below_1: " << (ev.gamma_tau < 1.0 ? "true" : "false") << '\n'
            << "omega_ent_tau_below_1: " << (std::abs(ev.omega_ent_tau) < 1.0 ? "true" : "false") << '\n'
            << "valid_approximation: " << (ev.valid_approximation ? "true" : "false") << '\n';
        return exit_ok;
    } catch (const Error& e) {
        log << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int cmd_classify(const std::string& curve_file, const std::vector<std::string>& exclusion_files,
                 const std::string& out_file, std::ostream& out, std::ostream& log)
{
    try {
        const CurveTable table = load_curve(curve_file);
        std::vector<bounds::ExclusionRegion> regions;
        for (const auto& f : exclusion_files)
            regions.push_back(bounds::load_exclusion(f));
        for (const auto& r : regions)
            if (r.metadata().contains("proxy"))
                log << "note: region '" << r.name() << "' is a proxy bound (" << r.metadata().at("proxy") << ")\n";

        const auto classes = bounds::classify_curve(table.abscissa, table.coupling, table.points, regions);
        std::ostringstream text;
        write_classification_csv(text, table.points, classes);
        write_text(out_file, text.str(), out);
        log << summary_line(bounds::summarize(classes)) << '\n';
        return exit_ok;
    } catch (const Error& e) {
        log << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int cmd_validate(std::ostream& out, const ValidationHooks& hooks)
{
    return print_validation(out, run_validation(hooks)) ? exit_ok : exit_validation_failure;
}

} // namespace ewit::app
