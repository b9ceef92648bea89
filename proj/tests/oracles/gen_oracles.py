"""Independent high-precision evaluation of the frozen values used in the C++ tests.

Run with `python3 tests/oracles/gen_oracles.py`; it prints the constants that
are pasted into tests/oracle_values.hpp. Written directly from the closed-form
expressions with mpmath, sharing no code with the library.
"""
import mpmath as mp

mp.mp.dps = 50

HBAR = mp.mpf("1.054571817e-34")
G = mp.mpf("6.67430e-11")
M_E = mp.mpf("9.1093837015e-31")
C = mp.mpf("299792458")
E = mp.mpf("1.602176634e-19")
HBAR_C_EV_M = HBAR * C / E


def omega_tau(W, gt):
    return mp.asin((mp.e ** (-gt) - mp.e ** gt * (1 - 4 * W)) / 2)


def witness(wt, gt):
    D = mp.e ** (-gt)
    return mp.mpf(1) / 4 - D / 4 * (D - 2 * mp.sin(wt))


def bracket(d, dx, lam):
    rc = mp.sqrt(d * d + dx * dx)
    return mp.e ** (-rc / lam) / rc - mp.e ** (-d / lam) / d


def ps_factor(vec, lam_phi, s1, s2):
    r = mp.sqrt(sum(v * v for v in vec))
    rhat = [v / r for v in vec]
    s12 = sum(a * b for a, b in zip(s1, s2)) / 4
    proj = sum(a * b for a, b in zip(s1, rhat)) * sum(a * b for a, b in zip(s2, rhat)) / 4
    lam_e = HBAR / (M_E * C)
    t1 = s12 * (1 / (lam_phi * r**2) + 1 / r**3)
    t2 = proj * (1 / (lam_phi**2 * r) + 3 / (lam_phi * r**2) + 3 / r**3)
    return -(HBAR * C * lam_e**2) / (4 * mp.pi) * mp.e ** (-r / lam_phi) * (t1 - t2)


def show(name, v):
    print(f"inline constexpr double {name} = {mp.nstr(v, 17)};")


show("kRangeOf1eV", HBAR_C_EV_M)
show("kRangeOf1e_10eV", HBAR_C_EV_M / mp.mpf("1e-10"))
show("kOmegaTauW01Gt01", omega_tau(mp.mpf("-0.1"), mp.mpf("0.1")))
show("kWitnessAtArgGt01", witness(mp.mpf("-0.321201"), mp.mpf("0.1")))
show("kIonDeltaX", mp.sqrt(HBAR / (2 * mp.mpf("1e-27") * mp.mpf("1e5"))))

# Fig. 2 point: d=50um, dx=10um, tau=1s, W=-0.01, gamma=1e-2, lambda=1e-4.
d, dx = mp.mpf("50e-6"), mp.mpf("10e-6")
wt = omega_tau(mp.mpf("-0.01"), mp.mpf("1e-2"))
show("kFig2Alpha", HBAR * wt / bracket(d, dx, mp.mpf("1e-4")))

# Fig. 3 point: m=1e-14 kg, W=-0.01, gamma=1e-3, lambda=1e-4.
m = mp.mpf("1e-14")
rc = mp.sqrt(d * d + dx * dx)
wt = omega_tau(mp.mpf("-0.01"), mp.mpf("1e-3"))
show("kFig3AlphaG", (HBAR / (G * m * m) * wt - (1 / rc - 1 / d)) / bracket(d, dx, mp.mpf("1e-4")))
show("kNewtonPhase", G * m * m / HBAR * (1 / rc - 1 / d))

# Fig. 4 point (attractive scalar needs W > 0): tau=1us, gamma=1e3, d=50um, m_phi=1e-6 eV.
tau = mp.mpf("1e-6")
dxi = mp.sqrt(HBAR / (2 * mp.mpf("1e-27") * mp.mpf("1e5")))
lam = HBAR_C_EV_M / mp.mpf("1e-6")
w = omega_tau(mp.mpf("0.1"), mp.mpf("1e3") * tau) / tau
alpha_y = HBAR * w / bracket(d, dxi, lam)
show("kFig4GS", mp.sqrt(-4 * mp.pi * alpha_y / (HBAR * C)))

# Fig. 5 points: d=500nm, spins along separation axis, W=-0.1.
d5 = mp.mpf("500e-9")
w5 = omega_tau(mp.mpf("-0.1"), mp.mpf("1e3") * tau) / tau
sx = [mp.mpf(1), mp.mpf(0), mp.mpf(0)]
for tag, mphi in (("Light", "1e-3"), ("Heavy", "1")):
    lp = HBAR_C_EV_M / mp.mpf(mphi)
    df = ps_factor([d5, dxi, 0], lp, sx, sx) - ps_factor([d5, 0, 0], lp, sx, sx)
    show(f"kFig5GP{tag}", mp.sqrt(HBAR * w5 / df))

# Pseudoscalar long-range limit check: spins along r, r = 1 um.
r = mp.mpf("1e-6")
show("kPseudoAlignedLimit", HBAR**3 / C / (8 * mp.pi * M_E**2 * r**3))
