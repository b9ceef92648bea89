#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Geometry>

#include "ewit/errors.hpp"
#include "ewit/potentials.hpp"
#include "ewit/units.hpp"
#include "oracle_values.hpp"

using namespace ewit;
using namespace ewit::potentials;

namespace {

const auto& k = units::constants;

const Geometry kLab{50e-6, 10e-6, 1.0};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an ewit::Error");
    return ErrorKind::usage;
}

} // namespace

TEST_CASE("potential_energy examples")
{
    SUBCASE("Yukawa with a huge range is Coulomb-like")
    {
        const double u = potential_energy(Yukawa{1.0, 1e12}, Vec3{1.0, 0.0, 0.0});
        CHECK(std::abs(u - 1.0) < 1e-11);
    }
    SUBCASE("modified Newtonian with alpha_g = 0 is Newtonian")
    {
        const double m = 1e-14;
        const double u = potential_energy(ModifiedNewtonian{0.0, 1e-4, m}, Vec3{50e-6, 0.0, 0.0});
        CHECK(u == k.G * m * m / 50e-6);
    }
    SUBCASE("scalar ALP is an attractive Yukawa")
    {
        const ScalarAlp s{1e-3, 1e-6};
        const Vec3 r{3e-5, 1e-5, 0.0};
        const double lambda = units::mass_ev_to_range_m(s.m_phi_eV);
        const double alpha = -s.g_s * s.g_s * k.hbar * k.c / (4 * std::numbers::pi);
        CHECK(rel(potential_energy(s, r), potential_energy(Yukawa{alpha, lambda}, r)) <= 1e-12);
        CHECK(potential_energy(s, r) < 0.0);
    }
    SUBCASE("pseudoscalar massless limit with spins along r")
    {
        const double r = 1e-6;
        const double u = potential_energy(PseudoscalarAlp{1.0, 1e-20, {}}, Vec3{r, 0.0, 0.0});
        CHECK(rel(u, oracle::kPseudoAlignedLimit) <= 1e-9);
    }
    SUBCASE("zero displacement is a domain error")
    {
        CHECK(kind_of([] { potential_energy(Yukawa{1.0, 1.0}, Vec3::Zero()); }) == ErrorKind::domain);
    }
}

TEST_CASE("model validation")
{
    CHECK(kind_of([] { validate(Yukawa{1.0, 0.0}); }) == ErrorKind::domain);
    CHECK(kind_of([] { validate(ModifiedNewtonian{0.1, 1e-4, -1.0}); }) == ErrorKind::domain);
    CHECK(kind_of([] { validate(ScalarAlp{1.0, 0.0}); }) == ErrorKind::domain);
    CHECK(kind_of([] { validate(PseudoscalarAlp{1.0, 1.0, SpinConfig{Vec3{2.0, 0.0, 0.0}, Vec3::UnitX()}}); })
          == ErrorKind::domain);
    CHECK(kind_of([] { Geometry{0.0, 1e-6, 1.0}.validate(); }) == ErrorKind::domain);
    CHECK(kind_of([] { Geometry{1e-6, 1e-6, -1.0}.validate(); }) == ErrorKind::domain);

    CHECK(model_warnings(ModifiedNewtonian{0.5, 1e-4, 1e-14}).empty());
    CHECK(model_warnings(ModifiedNewtonian{1.5, 1e-4, 1e-14}).size() == 1);
}

TEST_CASE("phase_pair examples")
{
    SUBCASE("cross distance")
    {
        CHECK(rel(kLab.cross_distance(), std::sqrt(50e-6 * 50e-6 + 10e-6 * 10e-6)) <= 1e-15);
    }
    SUBCASE("zero coupling gives zero phases")
    {
        const auto p = phase_pair(Yukawa{0.0, 1e-4}, kLab);
        CHECK(p.phi_global == 0.0);
        CHECK(p.phi_1 == 0.0);
        CHECK(p.phi_2 == 0.0);
    }
    SUBCASE("pure Newtonian phase")
    {
        const auto p = phase_pair(ModifiedNewtonian{0.0, 1e-4, 1e-14}, kLab);
        CHECK(rel(p.phi_1, oracle::kNewtonPhase) <= 1e-12);
        CHECK(p.phi_1 == p.phi_2);
        CHECK(rel(p.phi_global, 1.0 * k.G * 1e-28 / 50e-6 / k.hbar) <= 1e-14);
    }
    SUBCASE("attractive Yukawa drives a negative entangling phase")
    {
        CHECK(phase_pair(Yukawa{-1e-30, 1e-4}, kLab).entangling_phase() > 0.0);
        CHECK(phase_pair(Yukawa{1e-30, 1e-4}, kLab).entangling_phase() < 0.0);
    }
}

TEST_CASE("phase invariants")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, u01(rng)); };

    SUBCASE("scalar ALP equals the mapped Yukawa")
    {
        for (int i = 0; i < 300; ++i) {
            const Geometry g{log_uniform(1e-7, 1e-4), log_uniform(1e-8, 1e-5), log_uniform(1e-6, 1.0)};
            const ScalarAlp s{log_uniform(1e-12, 1.0), log_uniform(1e-6, 1.0)};
            const double lambda = units::mass_ev_to_range_m(s.m_phi_eV);
            const double alpha = -s.g_s * s.g_s * k.hbar * k.c / (4 * std::numbers::pi);
            const auto a = phase_pair(s, g);
            const auto b = phase_pair(Yukawa{alpha, lambda}, g);
            if (b.phi_1 != 0.0)
                CHECK(rel(a.phi_1, b.phi_1) <= 1e-12);
            if (b.phi_global != 0.0)
                CHECK(rel(a.phi_global, b.phi_global) <= 1e-12);
        }
    }
    SUBCASE("modified Newtonian splits into Newtonian plus Yukawa")
    {
        const double m = 1e-14;
        for (int i = 0; i < 300; ++i) {
            const Geometry g{log_uniform(1e-6, 1e-4), log_uniform(1e-7, 1e-5), 1.0};
            const double lambda = g.d * log_uniform(0.5, 1e3);
            const double alpha_g = (u01(rng) < 0.5 ? -1.0 : 1.0) * log_uniform(1e-2, 1e2);
            const double gm2 = k.G * m * m;
            const double sum = phase_pair(ModifiedNewtonian{0.0, lambda, m}, g).phi_1
                + phase_pair(Yukawa{alpha_g * gm2, lambda}, g).phi_1;
            CHECK(rel(phase_pair(ModifiedNewtonian{alpha_g, lambda, m}, g).phi_1, sum) <= 1e-12);
        }
    }
    SUBCASE("swapping identical spins leaves the pseudoscalar phase unchanged")
    {
        for (int i = 0; i < 200; ++i) {
            Vec3 a{u01(rng) - 0.5, u01(rng) - 0.5, u01(rng) - 0.5};
            Vec3 b{u01(rng) - 0.5, u01(rng) - 0.5, u01(rng) - 0.5};
            a.normalize();
            b.normalize();
            const Geometry g{5e-7, 7e-7, 1e-6};
            const double m_phi = log_uniform(1e-6, 1.0);
            const auto p = phase_pair(PseudoscalarAlp{1.0, m_phi, SpinConfig{a, b}}, g);
            const auto q = phase_pair(PseudoscalarAlp{1.0, m_phi, SpinConfig{b, a}}, g);
            CHECK(rel(p.phi_1, q.phi_1) <= 1e-12);
            CHECK(p.phi_1 == p.phi_2);
        }
    }
    SUBCASE("pseudoscalar potential is invariant under a joint rotation")
    {
        for (int i = 0; i < 200; ++i) {
            Vec3 a{u01(rng) - 0.5, u01(rng) - 0.5, u01(rng) - 0.5};
            Vec3 b{u01(rng) - 0.5, u01(rng) - 0.5, u01(rng) - 0.5};
            Vec3 axis{u01(rng) - 0.5, u01(rng) - 0.5, u01(rng) - 0.5};
            a.normalize();
            b.normalize();
            axis.normalize();
            const Eigen::Matrix3d rot = Eigen::AngleAxisd(6.0 * u01(rng), axis).toRotationMatrix();
            const Vec3 r{4e-7, 2e-7, -1e-7};
            const double base = pseudoscalar_spatial_factor(1e-3, SpinConfig{a, b}, r);
            const double turned = pseudoscalar_spatial_factor(1e-3, SpinConfig{rot * a, rot * b}, rot * r);
            CHECK(std::abs(base - turned) <= 1e-12 * std::abs(base) + 1e-300);
        }
    }
    SUBCASE("phases are linear in tau")
    {
        const ModifiedNewtonian model{0.3, 2e-5, 1e-14};
        const auto p1 = phase_pair(model, Geometry{50e-6, 10e-6, 1.0});
        for (double t : {1e-6, 0.37, 3.0, 250.0}) {
            const auto pt = phase_pair(model, Geometry{50e-6, 10e-6, t});
            CHECK(rel(pt.phi_1, t * p1.phi_1) <= 1e-14);
            CHECK(rel(pt.phi_global, t * p1.phi_global) <= 1e-14);
        }
    }
}

TEST_CASE("dimensional consistency")
{
    // Stretching every length by s and every range with it (m_phi -> m_phi/s)
    // must rescale U like the explicit powers of length it carries.
    const double s = 3.7;
    const Vec3 r{2e-7, 1e-7, 5e-8};
    const double m_phi = 0.2;

    const double scalar = potential_energy(ScalarAlp{1e-3, m_phi}, r);
    const double scalar_s = potential_energy(ScalarAlp{1e-3, m_phi / s}, s * r);
    CHECK(rel(scalar_s, scalar / s) <= 1e-13);

    const SpinConfig spin{Vec3::UnitX(), Vec3::UnitY()};
    const double pseudo = pseudoscalar_spatial_factor(m_phi, spin, r);
    const double pseudo_s = pseudoscalar_spatial_factor(m_phi / s, spin, s * r);
    CHECK(rel(pseudo_s, pseudo / (s * s * s)) <= 1e-13);

    const double yuk = yukawa_bracket(1e-5, kLab);
    const Geometry stretched{kLab.d * s, kLab.delta_x * s, kLab.tau};
    CHECK(rel(yukawa_bracket(1e-5 * s, stretched), yuk / s) <= 1e-13);
    CHECK(rel(newtonian_bracket(stretched), newtonian_bracket(kLab) / s) <= 1e-13);
}

TEST_CASE("brackets avoid cancellation")
{
    const Geometry g{1e-3, 1e-9, 1.0};
    const double rc = g.cross_distance();
    // 1/rc - 1/d with rc - d ~ 5e-16 m: the direct difference would lose every digit.
    const double expected = -(g.delta_x * g.delta_x / (rc + g.d)) / (rc * g.d);
    CHECK(rel(newtonian_bracket(g), expected) <= 1e-14);
    CHECK(newtonian_bracket(g) < 0.0);
    CHECK(yukawa_bracket(1.0, g) < 0.0);
}

TEST_CASE("ion_trap_delta_x")
{
    CHECK(rel(ion_trap_delta_x(1e-27, 1e5), oracle::kIonDeltaX) <= 1e-14);
    CHECK(rel(ion_trap_delta_x(4e-27, 1e5), 0.5 * oracle::kIonDeltaX) <= 1e-14);
    CHECK(ion_trap_delta_x(1e10, 1e5) < 1e-21);
    CHECK(kind_of([] { ion_trap_delta_x(0.0, 1e5); }) == ErrorKind::domain);
    CHECK(kind_of([] { ion_trap_delta_x(1e-27, -1.0); }) == ErrorKind::domain);
}
