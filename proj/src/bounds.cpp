#include "ewit/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ewit/errors.hpp"

namespace ewit::bounds {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

bool parse_number(std::string_view token, double& out)
{
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc() && ptr == end;
}

std::vector<std::string> split_columns(const std::string& line)
{
    std::string normalized = line;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream ss(normalized);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;)
        out.push_back(tok);
    return out;
}

[[noreturn]] void fail_at(ErrorKind kind, const std::string& origin, std::size_t line, const std::string& what)
{
    fail(kind, origin + ":" + std::to_string(line) + ": " + what);
}

} // namespace

ExclusionRegion::ExclusionRegion(std::string name, std::string source, AbscissaKind abscissa,
                                 CouplingKind coupling, std::vector<std::pair<double, double>> samples,
                                 std::map<std::string, std::string> metadata)
    : name_(std::move(name)), source_(std::move(source)), abscissa_(abscissa), coupling_(coupling),
      samples_(std::move(samples)), metadata_(std::move(metadata))
{
    if (samples_.empty())
        fail(ErrorKind::parse, "exclusion region '" + name_ + "' has no samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto [x, y] = samples_[i];
        if (!(x > 0.0) || !std::isfinite(x))
            fail(ErrorKind::non_positive_limit, "exclusion abscissa must be positive");
        if (!(y > 0.0) || !std::isfinite(y))
            fail(ErrorKind::non_positive_limit, "exclusion limits must be positive");
        if (i > 0 && !(x > samples_[i - 1].first))
            fail(ErrorKind::monotonicity, "exclusion abscissa must be strictly increasing");
    }
}

bool ExclusionRegion::supports(double abscissa) const noexcept
{
    return abscissa >= samples_.front().first && abscissa <= samples_.back().first;
}

std::optional<double> ExclusionRegion::limit_at(double abscissa) const
{
    if (!supports(abscissa))
        return std::nullopt;
    const auto upper = std::lower_bound(samples_.begin(), samples_.end(), abscissa,
                                        [](const auto& s, double x) { return s.first < x; });
    if (upper->first == abscissa)
        return upper->second;
    const auto lower = std::prev(upper);
    const double t = (std::log(abscissa) - std::log(lower->first))
        / (std::log(upper->first) - std::log(lower->first));
    return std::exp(std::log(lower->second) + t * (std::log(upper->second) - std::log(lower->second)));
}

ExclusionRegion parse_exclusion(std::istream& in, const std::string& origin)
{
    std::map<std::string, std::string> meta;
    std::vector<std::pair<double, double>> samples;
    std::optional<AbscissaKind> abscissa;
    std::optional<CouplingKind> coupling;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string content = trim(line);
        if (content.empty())
            continue;
        if (content.front() == '#') {
            const std::string body = trim(std::string_view(content).substr(1));
            const auto colon = body.find(':');
            if (colon == std::string::npos)
                continue; // free-form comment
            const std::string key = trim(std::string_view(body).substr(0, colon));
            const std::string value = trim(std::string_view(body).substr(colon + 1));
            try {
                if (key == "abscissa")
                    abscissa = scan::parse_abscissa_kind(value);
                else if (key == "coupling")
                    coupling = scan::parse_coupling_kind(value);
            } catch (const Error& e) {
                fail_at(ErrorKind::parse, origin, lineno, e.what());
            }
            meta[key] = value;
            continue;
        }

        const auto cols = split_columns(content);
        double x = 0.0;
        double y = 0.0;
        if (cols.size() != 2 || !parse_number(cols[0], x) || !parse_number(cols[1], y))
            fail_at(ErrorKind::parse, origin, lineno, "expected two numeric columns, got '" + content + "'");
        if (!(x > 0.0) || !std::isfinite(x))
            fail_at(ErrorKind::non_positive_limit, origin, lineno, "abscissa must be positive");
        if (!(y > 0.0) || !std::isfinite(y))
            fail_at(ErrorKind::non_positive_limit, origin, lineno, "coupling limit must be positive");
        if (!samples.empty() && !(x > samples.back().first))
            fail_at(ErrorKind::monotonicity, origin, lineno, "abscissa not strictly increasing");
        samples.emplace_back(x, y);
    }

    if (samples.empty())
        fail(ErrorKind::parse, origin + ": no data rows");
    if (!abscissa)
        fail(ErrorKind::parse, origin + ": missing '# abscissa:' metadata");
    if (!coupling)
        fail(ErrorKind::parse, origin + ": missing '# coupling:' metadata");

    std::string name = meta.contains("name") ? meta["name"] : origin;
    std::string source = meta.contains("source") ? meta["source"] : std::string{};
    return ExclusionRegion(std::move(name), std::move(source), *abscissa, *coupling, std::move(samples),
                           std::move(meta));
}

ExclusionRegion load_exclusion(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        fail(ErrorKind::io, "cannot open exclusion file " + file.string());
    return parse_exclusion(in, file.string());
}

std::string_view to_string(Classification c) noexcept
{
    switch (c) {
    case Classification::excluded: return "excluded";
    case Classification::allowed: return "allowed";
    case Classification::outside_region_support: return "outside_region_support";
    case Classification::no_coupling: return "no_coupling";
    }
    return "unknown";
}

std::vector<Classification> classify_curve(AbscissaKind abscissa, CouplingKind coupling,
                                           std::span<const CurvePoint> points, const ExclusionRegion& region)
{
    if (abscissa != region.abscissa_kind() || coupling != region.coupling_kind())
        fail(ErrorKind::kind_mismatch,
             "region '" + region.name() + "' is " + std::string(scan::to_string(region.abscissa_kind())) + "/"
                 + std::string(scan::to_string(region.coupling_kind())) + " but the curve is "
                 + std::string(scan::to_string(abscissa)) + "/" + std::string(scan::to_string(coupling)));

    std::vector<Classification> out;
    out.reserve(points.size());
    for (const CurvePoint& p : points) {
        if (!std::isfinite(p.coupling)) {
            out.push_back(Classification::no_coupling);
            continue;
        }
        const auto limit = region.limit_at(p.abscissa);
        if (!limit)
            out.push_back(Classification::outside_region_support);
        else
            out.push_back(std::abs(p.coupling) >= *limit ? Classification::excluded : Classification::allowed);
    }
    return out;
}

std::vector<Classification> classify_curve(AbscissaKind abscissa, CouplingKind coupling,
                                           std::span<const CurvePoint> points,
                                           std::span<const ExclusionRegion> regions)
{
    std::vector<Classification> out(points.size(), Classification::outside_region_support);
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!std::isfinite(points[i].coupling))
            out[i] = Classification::no_coupling;

    for (const ExclusionRegion& region : regions) {
        const auto per_region = classify_curve(abscissa, coupling, points, region);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (per_region[i] == Classification::excluded)
                out[i] = Classification::excluded;
            else if (per_region[i] == Classification::allowed && out[i] == Classification::outside_region_support)
                out[i] = Classification::allowed;
        }
    }
    return out;
}

std::vector<CurvePoint> curve_points(const scan::ConstraintCurve& curve)
{
    std::vector<CurvePoint> out;
    out.reserve(curve.samples.size());
    for (const auto& s : curve.samples)
        out.push_back({s.abscissa, s.coupling});
    return out;
}

std::vector<Classification> classify_curve(const scan::ConstraintCurve& curve, const ExclusionRegion& region)
{
    const auto points = curve_points(curve);
    return classify_curve(scan::abscissa_kind(curve.request.model), scan::coupling_kind(curve.request.model),
                          points, region);
}

ClassificationSummary summarize(std::span<const Classification> classes)
{
    ClassificationSummary s;
    for (Classification c : classes) {
        switch (c) {
        case Classification::excluded: ++s.excluded; break;
        case Classification::allowed: ++s.allowed; break;
        case Classification::outside_region_support: ++s.outside_region_support; break;
        case Classification::no_coupling: ++s.no_coupling; break;
        }
    }
    return s;
}

} // namespace ewit::bounds
