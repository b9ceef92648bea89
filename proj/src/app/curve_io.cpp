#include "ewit/app/curve_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ewit/errors.hpp"

namespace ewit::app {

namespace {

constexpr const char* kCsvHeader = "abscissa,coupling,omega_ent_tau,valid,error_kind";

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep))
        out.push_back(cell);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

double parse_cell(const std::string& cell, const std::string& origin, std::size_t line)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        fail(ErrorKind::parse, origin + ":" + std::to_string(line) + ": not a number: '" + cell + "'");
    return v;
}

std::string strip_cr(std::string s)
{
    if (!s.empty() && s.back() == '\r')
        s.pop_back();
    return s;
}

} // namespace

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                         std::chars_format::scientific, 16);
    return std::string(buf.data(), ptr);
}

void write_curve_csv(std::ostream& out, const scan::ConstraintCurve& curve)
{
    const auto& r = curve.request;
    out << "# model: " << scan::to_string(r.model) << '\n'
        << "# abscissa: " << scan::to_string(scan::abscissa_kind(r.model)) << '\n'
        << "# coupling: " << scan::to_string(scan::coupling_kind(r.model)) << '\n'
        << "# witness: " << format_number(r.target.W) << '\n'
        << "# gamma: " << format_number(r.target.gamma) << '\n'
        << "# tau: " << format_number(r.geom.tau) << '\n'
        << "# d: " << format_number(r.geom.d) << '\n'
        << "# delta_x: " << format_number(r.geom.delta_x) << '\n'
        << kCsvHeader << '\n';
    for (const auto& s : curve.samples) {
        out << format_number(s.abscissa) << ',' << format_number(s.coupling) << ','
            << format_number(s.omega_ent_tau) << ',' << (s.valid ? "true" : "false") << ','
            << (s.error ? to_string(*s.error) : std::string_view{}) << '\n';
    }
}

nlohmann::json curve_to_json(const scan::ConstraintCurve& curve, const RunConfig& config,
                             const scan::RoundTripReport& round_trip)
{
    nlohmann::json doc;
    doc["config"] = to_json(config);
    doc["abscissa_kind"] = scan::to_string(scan::abscissa_kind(curve.request.model));
    doc["coupling_kind"] = scan::to_string(scan::coupling_kind(curve.request.model));
    doc["round_trip"] = {{"max_relative_error", round_trip.max_relative_error},
                         {"checked", round_trip.checked},
                         {"empty", round_trip.empty()}};
    auto& samples = doc["samples"] = nlohmann::json::array();
    for (const auto& s : curve.samples) {
        nlohmann::json j;
        j["abscissa"] = s.abscissa;
        j["coupling"] = s.error ? nlohmann::json(nullptr) : nlohmann::json(s.coupling);
        j["omega_ent_tau"] = s.omega_ent_tau;
        j["valid"] = s.valid;
        j["error_kind"] = s.error ? nlohmann::json(to_string(*s.error)) : nlohmann::json(nullptr);
        if (!s.warnings.empty())
            j["warnings"] = s.warnings;
        samples.push_back(std::move(j));
    }
    return doc;
}

CurveTable read_curve_csv(std::istream& in, const std::string& origin)
{
    CurveTable table;
    bool have_abscissa = false;
    bool have_coupling = false;
    bool have_header = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            const auto colon = line.find(':');
            if (colon == std::string::npos)
                continue;
            auto key = line.substr(1, colon - 1);
            auto value = line.substr(colon + 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            value.erase(0, value.find_first_not_of(' '));
            if (key == "abscissa") {
                table.abscissa = scan::parse_abscissa_kind(value);
                have_abscissa = true;
            } else if (key == "coupling") {
                table.coupling = scan::parse_coupling_kind(value);
                have_coupling = true;
            } else if (key == "model" && !(have_abscissa && have_coupling)) {
                const auto model = scan::parse_model_kind(value);
                table.abscissa = scan::abscissa_kind(model);
                table.coupling = scan::coupling_kind(model);
                have_abscissa = have_coupling = true;
            }
            continue;
        }
        if (!have_header) {
            if (line != kCsvHeader)
                fail(ErrorKind::parse, origin + ":" + std::to_string(lineno) + ": unexpected CSV header");
            have_header = true;
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 5)
            fail(ErrorKind::parse, origin + ":" + std::to_string(lineno) + ": expected 5 columns");
        table.points.push_back({parse_cell(cells[0], origin, lineno), parse_cell(cells[1], origin, lineno)});
    }
    if (!have_header)
        fail(ErrorKind::parse, origin + ": missing CSV header");
    if (!have_abscissa || !have_coupling)
        fail(ErrorKind::parse, origin + ": missing curve kind metadata");
    return table;
}

CurveTable read_curve_json(const nlohmann::json& doc)
{
    CurveTable table;
    try {
        table.abscissa = scan::parse_abscissa_kind(doc.at("abscissa_kind").get<std::string>());
        table.coupling = scan::parse_coupling_kind(doc.at("coupling_kind").get<std::string>());
        for (const auto& s : doc.at("samples")) {
            const auto& c = s.at("coupling");
            table.points.push_back({s.at("abscissa").get<double>(),
                                    c.is_null() ? std::nan("") : c.get<double>()});
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse, std::string("malformed curve JSON: ") + e.what());
    }
    return table;
}

CurveTable load_curve(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        fail(ErrorKind::io, "cannot open curve file " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return read_curve_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            fail(ErrorKind::parse, file.string() + ": " + e.what());
        }
    }
    std::istringstream is(text);
    return read_curve_csv(is, file.string());
}

void write_classification_csv(std::ostream& out, std::span<const bounds::CurvePoint> points,
                              std::span<const bounds::Classification> classes)
{
    out << "abscissa,coupling,classification\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        out << format_number(points[i].abscissa) << ',' << format_number(points[i].coupling) << ','
            << bounds::to_string(classes[i]) << '\n';
}

} // namespace ewit::app
