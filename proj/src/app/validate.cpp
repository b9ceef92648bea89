#include "ewit/app/validate.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "ewit/app/config.hpp"
#include "ewit/bounds.hpp"
#include "ewit/errors.hpp"
#include "ewit/inversion.hpp"
#include "ewit/potentials.hpp"
#include "ewit/qcore.hpp"
#include "ewit/scan.hpp"
#include "ewit/units.hpp"

namespace ewit::app {

namespace {

using potentials::Geometry;
constexpr double kPi = std::numbers::pi;

double rel_err(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

Geometry random_geometry(std::mt19937_64& rng)
{
    const double d = log_uniform(rng, 1e-7, 1e-4);
    return {d, d * log_uniform(rng, 0.05, 2.0), log_uniform(rng, 1e-6, 1.0)};
}

struct Recorder {
    std::vector<PropertyResult> results;

    template <class Fn>
    void check(const std::string& name, Fn&& fn)
    {
        PropertyResult r{name, false, {}};
        try {
            std::ostringstream detail;
            r.passed = fn(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

} // namespace

ValidationHooks::ValidationHooks()
    : witness(&qcore::witness_closed_form)
{
}

std::vector<PropertyResult> run_validation(const ValidationHooks& hooks)
{
    Recorder rec;
    std::mt19937_64 rng(20250101);
    std::uniform_real_distribution<double> neg_half_sum(-kPi, 0.0);
    std::uniform_real_distribution<double> any_phase(-2.0 * kPi, 2.0 * kPi);

    rec.check("units-roundtrip", [&](std::ostream& d) {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double m = log_uniform(rng, 1e-18, 1e2);
            worst = std::max(worst, rel_err(units::range_m_to_mass_ev(units::mass_ev_to_range_m(m)), m));
        }
        d << "max rel err " << worst;
        return worst <= 1e-12;
    });

    rec.check("pt-spectrum", [&](std::ostream& d) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double half = neg_half_sum(rng);
            const qcore::PhaseSet p{0.0, half, half};
            auto closed = qcore::pt_eigenvalues_closed_form(p);
            std::sort(closed.begin(), closed.end());
            const auto numeric =
                qcore::hermitian_eigenvalues(qcore::partial_transpose_second(qcore::density_with_dephasing(p, 0, 1)));
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst, std::abs(closed[k] - numeric[k]));
        }
        d << "max abs err " << worst;
        return worst <= 1e-12;
    });

    rec.check("negativity", [&](std::ostream& d) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const qcore::PhaseSet p{0.0, any_phase(rng), any_phase(rng)};
            const auto ev = qcore::evaluate_witness(p, 0.0, 1.0);
            worst = std::max(worst, std::abs(ev.negativity - qcore::negativity_closed_form(p)));
        }
        d << "max abs err " << worst;
        return worst <= 1e-12;
    });

    rec.check("witness-no-dephasing", [&](std::ostream& d) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double half = neg_half_sum(rng);
            const auto ev = qcore::evaluate_witness({0.0, half, half}, 0.0, 1.0);
            worst = std::max(worst, std::abs(hooks.witness(half, 0.0, 1.0) - ev.numeric_min_pt_eigenvalue));
        }
        d << "max abs err " << worst;
        return worst <= 1e-12;
    });

    rec.check("eq8-roundtrip", [&](std::ostream& d) {
        double worst = 0.0;
        std::uniform_real_distribution<double> wt(-1.5, 1.5);
        std::uniform_real_distribution<double> gt(0.0, 1.0);
        for (int i = 0; i < 1000; ++i) {
            const double tau = log_uniform(rng, 1e-6, 1.0);
            const double omega = wt(rng) / tau;
            const double gamma = gt(rng) / tau;
            const double w = hooks.witness(omega, gamma, tau);
            const double back = inversion::omega_ent_from_witness({w, gamma, tau});
            worst = std::max(worst, std::abs(back - omega) * tau);
        }
        d << "max |d(omega tau)| " << worst;
        return worst <= 1e-12;
    });

    rec.check("density-trace-hermitian", [&](std::ostream& d) {
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            const qcore::PhaseSet p{any_phase(rng), any_phase(rng), any_phase(rng)};
            const auto rho = qcore::density_with_dephasing(p, log_uniform(rng, 1e-3, 1e3), 1.0);
            worst = std::max(worst, std::abs(rho.entries().trace() - qcore::Complex(1.0)));
            worst = std::max(worst, (rho.entries() - rho.entries().adjoint()).cwiseAbs().maxCoeff());
            const auto pt = qcore::partial_transpose_second(rho);
            worst = std::max(worst, (pt - pt.adjoint()).cwiseAbs().maxCoeff());
        }
        d << "max deviation " << worst;
        return worst <= 1e-14;
    });

    rec.check("peres-separable", [&](std::ostream& d) {
        double lowest = 0.0;
        for (double gamma : {0.0, 0.01, 0.1, 1.0, 10.0}) {
            const auto ev = qcore::evaluate_witness({0.3, 0.0, 0.0}, gamma, 1.0);
            lowest = std::min(lowest, ev.numeric_min_pt_eigenvalue);
        }
        d << "lowest min eigenvalue " << lowest;
        return lowest >= -1e-12;
    });

    rec.check("decoherence-monotonicity", [&](std::ostream& d) {
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            const double wt = neg_half_sum(rng);
            double prev = hooks.witness(wt, 0.0, 1.0);
            for (int k = 1; k <= 50; ++k) {
                const double cur = hooks.witness(wt, k / 50.0, 1.0);
                ok = ok && cur > prev;
                prev = cur;
            }
        }
        d << (ok ? "strictly increasing" : "monotonicity violated");
        return ok;
    });

    rec.check("full-dephasing-limit", [&](std::ostream& d) {
        const auto ev = qcore::evaluate_witness({0.0, -1.0, -1.0}, 60.0, 1.0);
        const double w = hooks.witness(-1.0, 60.0, 1.0);
        d << "W " << w << ", min eig " << ev.numeric_min_pt_eigenvalue;
        // rho -> I/4, whose partial transpose is itself: every eigenvalue is 1/4.
        return std::abs(w - 0.25) <= 1e-12 && std::abs(ev.numeric_min_pt_eigenvalue - 0.25) <= 1e-12;
    });

    rec.check("scalar-yukawa-equivalence", [&](std::ostream& d) {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Geometry g = random_geometry(rng);
            const double gs = log_uniform(rng, 1e-12, 1.0);
            const double m = units::range_m_to_mass_ev(g.d * log_uniform(rng, 0.1, 100.0));
            const auto ps = potentials::phase_pair(potentials::ScalarAlp{gs, m}, g);
            const double alpha = -gs * gs / (4.0 * kPi) * units::hbar * units::c;
            const auto py = potentials::phase_pair(potentials::Yukawa{alpha, units::mass_ev_to_range_m(m)}, g);
            worst = std::max({worst, rel_err(ps.phi_1, py.phi_1), rel_err(ps.phi_global, py.phi_global)});
        }
        d << "max rel err " << worst;
        return worst <= 1e-12;
    });

    rec.check("newtonian-decomposition", [&](std::ostream& d) {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Geometry g = random_geometry(rng);
            const double lam = g.d * log_uniform(rng, 0.5, 1e3);
            const double m = log_uniform(rng, 1e-16, 1e-12);
            const double ag = (rng() % 2 ? 1.0 : -1.0) * log_uniform(rng, 1e-2, 1e3);
            const auto full = potentials::phase_pair(potentials::ModifiedNewtonian{ag, lam, m}, g);
            const auto bare = potentials::phase_pair(potentials::ModifiedNewtonian{0.0, lam, m}, g);
            const auto yuk = potentials::phase_pair(potentials::Yukawa{units::G * m * m * ag, lam}, g);
            worst = std::max({worst, rel_err(full.phi_1 - bare.phi_1, yuk.phi_1),
                              rel_err(full.phi_global - bare.phi_global, yuk.phi_global)});
        }
        d << "max rel err " << worst;
        return worst <= 1e-12;
    });

    rec.check("yukawa-phase-sign", [&](std::ostream& d) {
        bool ok = true;
        for (int i = 0; i < 100; ++i) {
            const Geometry g = random_geometry(rng);
            const double lam = g.d * log_uniform(rng, 0.1, 100.0);
            ok = ok && potentials::phase_pair(potentials::Yukawa{1e-30, lam}, g).phi_1 < 0.0;
            ok = ok && potentials::phase_pair(potentials::Yukawa{-1e-30, lam}, g).phi_1 > 0.0;
        }
        d << (ok ? "sign follows alpha" : "sign violated");
        return ok;
    });

    rec.check("pseudoscalar-spin-swap", [&](std::ostream& d) {
        std::normal_distribution<double> n(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            potentials::SpinConfig s;
            s.s1_hat = potentials::Vec3(n(rng), n(rng), n(rng)).normalized();
            s.s2_hat = potentials::Vec3(n(rng), n(rng), n(rng)).normalized();
            potentials::SpinConfig swapped{s.s2_hat, s.s1_hat};
            const potentials::Vec3 r(n(rng) * 1e-6, n(rng) * 1e-6, n(rng) * 1e-6);
            const double m = log_uniform(rng, 1e-6, 1.0);
            worst = std::max(worst, rel_err(potentials::potential_energy(potentials::PseudoscalarAlp{1e-2, m, s}, r),
                                            potentials::potential_energy(
                                                potentials::PseudoscalarAlp{1e-2, m, swapped}, r)));
        }
        d << "max rel err " << worst;
        return worst <= 1e-12;
    });

    rec.check("phase-tau-linearity", [&](std::ostream& d) {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            Geometry g = random_geometry(rng);
            const potentials::PotentialModel model = potentials::Yukawa{1e-28, g.d * 3.0};
            const auto p1 = potentials::phase_pair(model, g);
            g.tau *= 3.0;
            const auto p3 = potentials::phase_pair(model, g);
            worst = std::max(worst, rel_err(3.0 * p1.phi_1, p3.phi_1));
        }
        d << "max rel err " << worst;
        return worst <= 1e-12;
    });

    rec.check("inversion-roundtrip", [&](std::ostream& d) {
        double worst = 0.0;
        for (const char* preset : {"fig2", "fig3", "fig4-near", "fig4-far", "fig5"}) {
            scan::ScanRequest r = preset_config(preset).request;
            r.grid.points = 50;
            for (double x : r.grid.nodes()) {
                inversion::Coupling c;
                try {
                    c = scan::invert_at(r, x);
                } catch (const Error&) {
                    continue;
                }
                if (!c.valid)
                    continue;
                const auto p = potentials::phase_pair(scan::model_at(r, x, c.value), r.geom);
                const double w = hooks.witness(p.entangling_phase() / r.geom.tau, r.target.gamma, r.geom.tau);
                worst = std::max(worst, std::abs(w - r.target.W) / std::abs(r.target.W));
            }
        }
        d << "max rel err " << worst;
        return worst <= 1e-9;
    });

    rec.check("unreachable-witness-boundary", [&](std::ostream& d) {
        bool ok = true;
        std::uniform_real_distribution<double> wdist(-1.5, 1.0);
        for (int i = 0; i < 500; ++i) {
            const inversion::WitnessTarget t{wdist(rng), log_uniform(rng, 1e-4, 3.0), 1.0};
            const double lhs = std::abs(std::exp(-t.gamma) - std::exp(t.gamma) * (1.0 - 4.0 * t.W));
            bool threw = false;
            try {
                inversion::omega_ent_from_witness(t);
            } catch (const Error& e) {
                threw = e.kind() == ErrorKind::unreachable_witness;
            }
            ok = ok && (threw == (lhs > 2.0));
        }
        d << (ok ? "fires exactly outside [-1, 1]" : "boundary mismatch");
        return ok;
    });

    rec.check("alpha-monotone-in-witness", [&](std::ostream& d) {
        const Geometry g{50e-6, 10e-6, 1.0};
        bool ok = true;
        double prev = 0.0;
        for (int k = 1; k <= 40; ++k) {
            const double a = inversion::alpha_from_witness({-0.01 * k, 0.01, 1.0}, 1e-4, g).value;
            ok = ok && a > prev;
            prev = a;
        }
        d << (ok ? "alpha grows as W decreases" : "not monotone");
        return ok;
    });

    rec.check("yukawa-plateau", [&](std::ostream& d) {
        const Geometry g{50e-6, 10e-6, 1.0};
        const inversion::WitnessTarget t{-0.1, 0.1, 1.0};
        const double plateau = units::hbar * inversion::omega_ent_from_witness(t) / potentials::newtonian_bracket(g);
        const double a = inversion::alpha_from_witness(t, 1e2 * g.cross_distance(), g).value;
        d << "rel dev " << rel_err(a, plateau);
        return rel_err(a, plateau) <= 1e-3;
    });

    rec.check("scan-determinism", [&](std::ostream& d) {
        scan::ScanRequest r;
        r.geom = {50e-6, 10e-6, 1.0};
        r.target = {-0.1, 0.1, 1.0};
        r.grid = {1e-6, 1e-2, 64, true};
        const auto a = scan::run_scan(r);
        const auto b = scan::run_scan(r);
        bool same = a.samples.size() == b.samples.size();
        for (std::size_t i = 0; same && i < a.samples.size(); ++i)
            same = a.samples[i].coupling == b.samples[i].coupling && a.samples[i].abscissa == b.samples[i].abscissa;
        d << (same ? "bit-identical" : "outputs differ");
        return same;
    });

    rec.check("classify-monotone", [&](std::ostream& d) {
        const bounds::ExclusionRegion region("probe", "", scan::AbscissaKind::range_m, scan::CouplingKind::alpha_g,
                                             {{1e-6, 1e6}, {1e-5, 1e2}, {1e-4, 1e-1}, {1e-3, 1e-2}});
        std::vector<bounds::CurvePoint> pts;
        for (int i = 0; i < 100; ++i)
            pts.push_back({log_uniform(rng, 1e-7, 1e-2), log_uniform(rng, 1e-4, 1e8)});
        auto base = bounds::classify_curve(scan::AbscissaKind::range_m, scan::CouplingKind::alpha_g, pts, region);
        bool ok = true;
        for (double f : {1.5, 10.0, 1e3}) {
            auto scaled = pts;
            for (auto& p : scaled)
                p.coupling *= f;
            const auto after =
                bounds::classify_curve(scan::AbscissaKind::range_m, scan::CouplingKind::alpha_g, scaled, region);
            for (std::size_t i = 0; i < pts.size(); ++i)
                ok = ok && !(base[i] == bounds::Classification::excluded && after[i] != bounds::Classification::excluded);
        }
        for (const auto& [x, y] : region.samples())
            ok = ok && region.limit_at(x) == y;
        d << (ok ? "monotone, exact at nodes" : "violated");
        return ok;
    });

    return rec.results;
}

bool print_validation(std::ostream& out, const std::vector<PropertyResult>& results)
{
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(30) << r.name << ' ' << r.detail
            << '\n';
        all = all && r.passed;
    }
    out << (all ? "all properties hold" : "validation failed") << '\n';
    return all;
}

} // namespace ewit::app
