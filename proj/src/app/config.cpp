#include "ewit/app/config.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "ewit/errors.hpp"
#include "ewit/potentials.hpp"

namespace ewit::app {

namespace {

const std::set<std::string, std::less<>> kKnownKeys = {
    "preset", "model", "d", "delta_x", "tau", "witness", "gamma", "grid_min", "grid_max", "points",
    "log_spaced", "particle_mass", "ion_mass", "trap_frequency", "spin1", "spin2", "out", "format",
    "exclusions",
};

constexpr double kIonMass = 1e-27;
constexpr double kTrapFrequency = 1e5;

RunConfig ion_preset(scan::ModelKind model, double d, double witness, double gamma)
{
    RunConfig c;
    auto& r = c.request;
    r.model = model;
    r.ion_trap = scan::IonTrap{kIonMass, kTrapFrequency};
    r.geom = {d, potentials::ion_trap_delta_x(kIonMass, kTrapFrequency), 1e-6};
    r.target = {witness, gamma, 1e-6};
    r.grid = {1e-15, 10.0, 200, true};
    return c;
}

template <class T>
T scalar_as(const YAML::Node& node, const std::string& key)
{
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        fail(ErrorKind::config, "key '" + key + "' has an invalid value");
    }
}

potentials::Vec3 vec3_as(const YAML::Node& node, const std::string& key)
{
    if (!node.IsSequence() || node.size() != 3)
        fail(ErrorKind::config, "key '" + key + "' must be a list of three numbers");
    potentials::Vec3 v;
    for (std::size_t i = 0; i < 3; ++i)
        v[static_cast<Eigen::Index>(i)] = scalar_as<double>(node[i], key);
    return v;
}

RunConfig from_yaml(const YAML::Node& root)
{
    if (!root.IsMap())
        fail(ErrorKind::config, "configuration must be a key/value mapping");

    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        if (!kKnownKeys.contains(key))
            fail(ErrorKind::config, "unknown configuration key '" + key + "'");
    }

    RunConfig cfg;
    if (root["preset"])
        cfg = preset_config(scalar_as<std::string>(root["preset"], "preset"));
    else if (!root["model"])
        fail(ErrorKind::config, "configuration needs either 'preset' or 'model'");

    auto& r = cfg.request;
    auto get = [&](const char* key, auto& field) {
        if (root[key])
            field = scalar_as<std::decay_t<decltype(field)>>(root[key], key);
    };

    if (root["model"])
        r.model = scan::parse_model_kind(scalar_as<std::string>(root["model"], "model"));
    get("d", r.geom.d);
    if (root["tau"]) {
        r.geom.tau = scalar_as<double>(root["tau"], "tau");
        r.target.tau = r.geom.tau;
    }
    get("witness", r.target.W);
    get("gamma", r.target.gamma);
    get("grid_min", r.grid.min);
    get("grid_max", r.grid.max);
    get("points", r.grid.points);
    get("log_spaced", r.grid.log_spaced);
    get("particle_mass", r.particle_mass);
    if (root["spin1"])
        r.spin.s1_hat = vec3_as(root["spin1"], "spin1");
    if (root["spin2"])
        r.spin.s2_hat = vec3_as(root["spin2"], "spin2");

    if (root["ion_mass"] || root["trap_frequency"]) {
        scan::IonTrap trap = r.ion_trap.value_or(scan::IonTrap{kIonMass, kTrapFrequency});
        get("ion_mass", trap.mass);
        get("trap_frequency", trap.frequency);
        r.ion_trap = trap;
    }
    if (root["delta_x"])
        r.geom.delta_x = scalar_as<double>(root["delta_x"], "delta_x");
    else if (r.ion_trap)
        r.geom.delta_x = potentials::ion_trap_delta_x(r.ion_trap->mass, r.ion_trap->frequency);

    get("out", cfg.out);
    if (root["format"])
        cfg.format = parse_output_format(scalar_as<std::string>(root["format"], "format"));
    if (root["exclusions"]) {
        const auto& ex = root["exclusions"];
        if (!ex.IsSequence())
            fail(ErrorKind::config, "key 'exclusions' must be a list of paths");
        cfg.exclusions.clear();
        for (const auto& item : ex)
            cfg.exclusions.push_back(scalar_as<std::string>(item, "exclusions"));
    }
    if (root["preset"])
        cfg.preset = scalar_as<std::string>(root["preset"], "preset");

    try {
        r.validate();
    } catch (const Error& e) {
        fail(ErrorKind::config, e.what());
    }
    return cfg;
}

} // namespace

std::string_view to_string(OutputFormat f) noexcept
{
    return f == OutputFormat::csv ? "csv" : "json";
}

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "csv")
        return OutputFormat::csv;
    if (text == "json")
        return OutputFormat::json;
    fail(ErrorKind::config, "unknown output format '" + std::string(text) + "'");
}

std::vector<std::string> preset_names()
{
    return {"fig2", "fig3", "fig4-near", "fig4-far", "fig5", "fig5-low-gamma"};
}

RunConfig preset_config(std::string_view name)
{
    RunConfig c;
    auto& r = c.request;
    if (name == "fig2" || name == "fig3") {
        r.model = name == "fig2" ? scan::ModelKind::yukawa : scan::ModelKind::modified_newtonian;
        r.geom = {50e-6, 10e-6, 1.0};
        r.target = {-0.1, 0.1, 1.0};
        r.grid = {1e-6, 1e-2, 200, true};
        if (name == "fig3")
            r.particle_mass = 1e-14;
    } else if (name == "fig4-near" || name == "fig4-far") {
        // Scalar exchange is attractive: its entangling phase is positive, so
        // the closed-form witness target sits on the positive branch.
        c = ion_preset(scan::ModelKind::scalar_alp, name == "fig4-near" ? 500e-9 : 50e-6, 0.1, 1e3);
    } else if (name == "fig5" || name == "fig5-low-gamma") {
        c = ion_preset(scan::ModelKind::pseudoscalar_alp, 500e-9, -0.1, name == "fig5" ? 1e3 : 1e-3);
    } else {
        fail(ErrorKind::config, "unknown preset '" + std::string(name) + "'");
    }
    c.preset = std::string(name);
    return c;
}

RunConfig parse_run_config(std::string_view text)
{
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        fail(ErrorKind::config, std::string("malformed configuration: ") + e.what());
    }
    if (root.IsMap() && root["config"] && root["samples"])
        return from_yaml(root["config"]);
    return from_yaml(root);
}

RunConfig load_run_config(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        fail(ErrorKind::config, "cannot read configuration file " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

std::string dump_run_config(const RunConfig& config)
{
    const auto& r = config.request;
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;
    if (config.preset)
        out << YAML::Key << "preset" << YAML::Value << *config.preset;
    out << YAML::Key << "model" << YAML::Value << std::string(scan::to_string(r.model));
    out << YAML::Key << "d" << YAML::Value << r.geom.d;
    out << YAML::Key << "delta_x" << YAML::Value << r.geom.delta_x;
    out << YAML::Key << "tau" << YAML::Value << r.geom.tau;
    out << YAML::Key << "witness" << YAML::Value << r.target.W;
    out << YAML::Key << "gamma" << YAML::Value << r.target.gamma;
    out << YAML::Key << "grid_min" << YAML::Value << r.grid.min;
    out << YAML::Key << "grid_max" << YAML::Value << r.grid.max;
    out << YAML::Key << "points" << YAML::Value << r.grid.points;
    out << YAML::Key << "log_spaced" << YAML::Value << r.grid.log_spaced;
    out << YAML::Key << "particle_mass" << YAML::Value << r.particle_mass;
    if (r.ion_trap) {
        out << YAML::Key << "ion_mass" << YAML::Value << r.ion_trap->mass;
        out << YAML::Key << "trap_frequency" << YAML::Value << r.ion_trap->frequency;
    }
    for (const auto& [key, v] : {std::pair{"spin1", &r.spin.s1_hat}, std::pair{"spin2", &r.spin.s2_hat}}) {
        out << YAML::Key << key << YAML::Value << YAML::Flow << YAML::BeginSeq << (*v)[0] << (*v)[1] << (*v)[2]
            << YAML::EndSeq;
    }
    out << YAML::Key << "out" << YAML::Value << config.out;
    out << YAML::Key << "format" << YAML::Value << std::string(to_string(config.format));
    out << YAML::Key << "exclusions" << YAML::Value << YAML::Flow << config.exclusions;
    out << YAML::EndMap;
    return out.c_str();
}

nlohmann::json to_json(const RunConfig& config)
{
    const auto& r = config.request;
    nlohmann::json j;
    if (config.preset)
        j["preset"] = *config.preset;
    j["model"] = scan::to_string(r.model);
    j["d"] = r.geom.d;
    j["delta_x"] = r.geom.delta_x;
    j["tau"] = r.geom.tau;
    j["witness"] = r.target.W;
    j["gamma"] = r.target.gamma;
    j["grid_min"] = r.grid.min;
    j["grid_max"] = r.grid.max;
    j["points"] = r.grid.points;
    j["log_spaced"] = r.grid.log_spaced;
    j["particle_mass"] = r.particle_mass;
    if (r.ion_trap) {
        j["ion_mass"] = r.ion_trap->mass;
        j["trap_frequency"] = r.ion_trap->frequency;
    }
    j["spin1"] = std::array{r.spin.s1_hat[0], r.spin.s1_hat[1], r.spin.s1_hat[2]};
    j["spin2"] = std::array{r.spin.s2_hat[0], r.spin.s2_hat[1], r.spin.s2_hat[2]};
    j["out"] = config.out;
    j["format"] = to_string(config.format);
    j["exclusions"] = config.exclusions;
    return j;
}

} // namespace ewit::app
