#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "ewit/bounds.hpp"
#include "ewit/errors.hpp"

using namespace ewit;
using namespace ewit::bounds;
using scan::AbscissaKind;
using scan::CouplingKind;

namespace {

const char* kHeader = "# name: torsion\n# source: example\n# abscissa: range_m\n# coupling: alpha_g\n";

ExclusionRegion parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_exclusion(in, "limits.txt");
}

Error error_of(const std::string& text)
{
    try {
        parse(text);
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected an ewit::Error");
    return Error(ErrorKind::usage, "");
}

ExclusionRegion simple_region()
{
    return ExclusionRegion("r", "", AbscissaKind::range_m, CouplingKind::alpha_g,
                           {{1e-6, 1e4}, {1e-5, 1e2}, {1e-4, 1.0}});
}

} // namespace

TEST_CASE("parse_exclusion")
{
    SUBCASE("two rows")
    {
        const auto r = parse(std::string(kHeader) + "1e-6 1e3\n1e-5, 10\n");
        REQUIRE(r.samples().size() == 2);
        CHECK(r.samples()[1].first == 1e-5);
        CHECK(r.samples()[1].second == 10.0);
        CHECK(r.name() == "torsion");
        CHECK(r.source() == "example");
        CHECK(r.abscissa_kind() == AbscissaKind::range_m);
        CHECK(r.coupling_kind() == CouplingKind::alpha_g);
    }
    SUBCASE("extra metadata is kept")
    {
        const auto r = parse(std::string(kHeader) + "# proxy: placeholder values\n1 2\n");
        CHECK(r.metadata().at("proxy") == "placeholder values");
    }
    SUBCASE("empty file")
    {
        CHECK(error_of("").kind() == ErrorKind::parse);
        CHECK(error_of(kHeader).kind() == ErrorKind::parse);
    }
    SUBCASE("unsorted abscissa names the line")
    {
        const auto e = error_of(std::string(kHeader) + "1e-5 1\n1e-6 2\n");
        CHECK(e.kind() == ErrorKind::monotonicity);
        CHECK(std::string(e.what()).find("limits.txt:6:") != std::string::npos);
    }
    SUBCASE("non-positive limit")
    {
        CHECK(error_of(std::string(kHeader) + "1e-6 0\n").kind() == ErrorKind::non_positive_limit);
        CHECK(error_of(std::string(kHeader) + "1e-6 -3\n").kind() == ErrorKind::non_positive_limit);
    }
    SUBCASE("malformed numbers")
    {
        const auto e = error_of(std::string(kHeader) + "1e-6 abc\n");
        CHECK(e.kind() == ErrorKind::parse);
        CHECK(std::string(e.what()).find("limits.txt:5:") != std::string::npos);
        CHECK(error_of(std::string(kHeader) + "1 2 3\n").kind() == ErrorKind::parse);
    }
    SUBCASE("missing kinds")
    {
        CHECK(error_of("# coupling: alpha_g\n1 2\n").kind() == ErrorKind::parse);
        CHECK(error_of("# abscissa: range_m\n1 2\n").kind() == ErrorKind::parse);
        CHECK(error_of("# abscissa: furlongs\n# coupling: alpha_g\n1 2\n").kind() == ErrorKind::parse);
    }
}

TEST_CASE("limit_at")
{
    const auto r = simple_region();
    CHECK(*r.limit_at(1e-5) == 1e2);
    CHECK(*r.limit_at(1e-6) == 1e4);
    CHECK(*r.limit_at(1e-4) == 1.0);
    CHECK(*r.limit_at(std::sqrt(1e-6 * 1e-5)) == doctest::Approx(1e3).epsilon(1e-12));
    CHECK_FALSE(r.limit_at(1e-7));
    CHECK_FALSE(r.limit_at(1e-3));
}

TEST_CASE("classify_curve")
{
    const auto r = simple_region();
    const std::vector<CurvePoint> pts{
        {1e-5, 1.0},     // far below
        {1e-5, 1e2},     // on the boundary
        {1e-5, -1e3},    // negative alpha_g above the bound in magnitude
        {1e-3, 1e9},     // outside support
        {1e-5, std::numeric_limits<double>::quiet_NaN()},
    };
    const auto c = classify_curve(AbscissaKind::range_m, CouplingKind::alpha_g, pts, r);
    CHECK(c[0] == Classification::allowed);
    CHECK(c[1] == Classification::excluded);
    CHECK(c[2] == Classification::excluded);
    CHECK(c[3] == Classification::outside_region_support);
    CHECK(c[4] == Classification::no_coupling);

    const auto s = summarize(c);
    CHECK(s.allowed == 1);
    CHECK(s.excluded == 2);
    CHECK(s.outside_region_support == 1);
    CHECK(s.no_coupling == 1);
    CHECK(s.total() == pts.size());

    CHECK_THROWS_AS(classify_curve(AbscissaKind::mass_eV, CouplingKind::g_S, pts, r), Error);
    try {
        classify_curve(AbscissaKind::range_m, CouplingKind::alpha_J_m, pts, r);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kind_mismatch);
    }
}

TEST_CASE("raising a coupling never un-excludes it")
{
    const auto r = simple_region();
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = 1e-6 * std::pow(100.0, u01(rng));
        const double y = std::pow(10.0, -2.0 + 8.0 * u01(rng));
        const std::vector<CurvePoint> lo{{x, y}};
        const std::vector<CurvePoint> hi{{x, y * (1.0 + 3.0 * u01(rng))}};
        if (classify_curve(AbscissaKind::range_m, CouplingKind::alpha_g, lo, r)[0] == Classification::excluded)
            CHECK(classify_curve(AbscissaKind::range_m, CouplingKind::alpha_g, hi, r)[0] == Classification::excluded);
    }
}

TEST_CASE("several regions")
{
    const std::vector<ExclusionRegion> regions{
        simple_region(),
        ExclusionRegion("wide", "", AbscissaKind::range_m, CouplingKind::alpha_g, {{1e-4, 1e-1}, {1e-2, 1e-3}}),
    };
    const std::vector<CurvePoint> pts{{1e-5, 1.0}, {1e-3, 1.0}, {1e-4, 0.5}, {1.0, 1.0}};
    const auto c = classify_curve(AbscissaKind::range_m, CouplingKind::alpha_g, pts, regions);
    CHECK(c[0] == Classification::allowed);
    CHECK(c[1] == Classification::excluded);
    CHECK(c[2] == Classification::excluded); // allowed by the first, excluded by the second
    CHECK(c[3] == Classification::outside_region_support);

    const auto none = classify_curve(AbscissaKind::range_m, CouplingKind::alpha_g, pts,
                                     std::span<const ExclusionRegion>{});
    for (auto x : none)
        CHECK(x == Classification::outside_region_support);
}
