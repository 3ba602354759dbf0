"""Reference values for the integration tests, computed with mpmath at 40 digits.

Run: python3 generate.py > values.rs
Every value printed here is independent of the Rust implementation: Gamma and erfc
come from mpmath's own arbitrary-precision routines, and transform values come from
adaptive quadrature of the vertical-contour integral in extended precision.
"""
from mpmath import mp, mpf, mpc, quad, gamma, exp, log, pi, inf, sqrt, erfc, taylor, diff

mp.dps = 40


def f(x):
    return repr(float(x))


def c(x):
    x = mpc(x)
    return "(%s, %s)" % (f(x.real), f(x.imag))


def contour(lz, mu, s, k, extra=lambda s_: 1):
    g = lambda y: gamma(k + 1j * y) * extra(k + 1j * y) * exp(-(mu + lz) * (k + 1j * y) + s ** 2 * (k + 1j * y) ** 2 / 2)
    pts = [-inf, -60, -20, -5, 0, 5, 20, 60, inf]
    return quad(g, pts) / (2 * pi)


def transform(lz, mu, s):
    return contour(lz, mu, s, 1)


print("// @generated by tests/reference/generate.py (mpmath, 40 digits). Do not edit.")
print("#![allow(dead_code, clippy::approx_constant)]\n")

gamma_pts = [mpc(1, 1), mpc(0.5, 3), mpc(2.5, -7), mpc(10, 20), mpc(0.1, 0.1), mpc(-2.5, 1.5),
             mpc(-0.5, 0), mpc(30, 45), mpc(45, 1), mpc(0.75, -49), mpc(3, 0)]
print("pub const GAMMA: &[((f64, f64), (f64, f64))] = &[")
for s in gamma_pts:
    print("    (%s, %s)," % (c(s), c(gamma(s))))
print("];\n")

erfcx = lambda w: exp(w * w) * erfc(w)
erfcx_pts = []
for re in [-5, -2, -0.5, 0, 0.3, 1, 2.5, 3.9, 4.1, 6, 8, 15, 29]:
    for im in [0, 0.5, 2.2, 5, 12, -3.3]:
        if abs(mpc(re, im)) <= 30:
            erfcx_pts.append(mpc(re, im))
erfcx_pts += [mpc(0, 25), mpc(0.01, 29), mpc(20, 20), mpc(-3, 8), mpc(1e-3, 1e-3)]
print("pub const ERFCX: &[((f64, f64), (f64, f64))] = &[")
for w in erfcx_pts:
    print("    (%s, %s)," % (c(w), c(erfcx(w))))
print("];\n")

erfc_pts = [mpc(1, 0), mpc(0.7, 0), mpc(-0.7, 0), mpc(1, 1), mpc(-2, 0.5), mpc(3, -2), mpc(0.2, 4)]
print("pub const ERFC: &[((f64, f64), (f64, f64))] = &[")
for w in erfc_pts:
    print("    (%s, %s)," % (c(w), c(erfc(w))))
print("];\n")

# Gamma(s) - 1/s = sum b_j s^j, b_j = Gamma^{(j+1)}(1)/(j+1)!
tay = taylor(gamma, 1, 42)
print("pub const GAMMA_TAYLOR_B: &[f64] = &[")
for j in range(41):
    print("    %s," % f(tay[j + 1]))
print("];\n")

# (label, ln z, mu, sigma, value)
cases = [
    ("z=2+i s=1", log(mpc(2, 1)), 0, 1),
    ("z=-1+i0 s=1", mpc(0, pi), 0, 1),
    ("z=-3+i0 s=0.5", log(3) + 1j * pi, 0, 0.5),
    ("z=-0.2+i0 s=2 mu=0.3", log(mpf('0.2')) + 1j * pi, 0.3, 2),
    ("z=0.5i s=0.75", log(mpf('0.5')) + 1j * pi / 2, 0, 0.75),
    ("z=1 s=1", mpf(0), 0, 1),
    ("z=3 s=2", log(3), 0, 2),
    ("z=10 s=0.25", log(10), 0, 0.25),
    ("z=-10+i0 s=1", log(10) + 1j * pi, 0, 1),
    ("z=-81+i0 s=1", log(81) + 1j * pi, 0, 1),
    ("z=-2+5i s=1.5 mu=-0.4", log(mpc(-2, 5)), -0.4, 1.5),
]
print("/// (label, ln z re, ln z im, mu, sigma, value)")
print("pub const TRANSFORM: &[(&str, f64, f64, f64, f64, (f64, f64))] = &[")
for lab, lz, mu, s in cases:
    lz = mpc(lz)
    v = transform(lz, mu, s)
    print('    ("%s", %s, %s, %s, %s, %s),' % (lab, f(lz.real), f(lz.imag), f(mu), f(s), c(v)))
print("];\n")

# characteristic function E[e^{itX}] = phi(-it)
print("/// (t, mu, sigma, value)")
print("pub const CHARACTERISTIC: &[(f64, f64, f64, (f64, f64))] = &[")
for t, mu, s in [(1, 0, 1), (1e-2, 0, 1), (2, 0, 1), (10, 0.2, 0.5)]:
    lz = log(abs(t)) - 1j * pi / 2
    print("    (%s, %s, %s, %s)," % (f(t), f(mu), f(s), c(transform(lz, mu, s))))
print("];\n")


def leipnik(t, s, k):
    g = lambda y: (pi / gamma(1 - (k + 1j * y))) * exp(-(log(t) + 1j * pi / 2) * (k + 1j * y) + s ** 2 * (k + 1j * y) ** 2 / 2)
    return 1j * quad(g, [-inf, -20, -5, 0, 5, 20, inf]) / (2 * pi)


print("/// (t, sigma, k, value) of the vertical-contour sin(pi s) Gamma(s) integral")
print("pub const LEIPNIK: &[(f64, f64, f64, (f64, f64))] = &[")
for t, s, k in [(1, 1, 0.5), (1e-2, 1, -1), (1e-2, 1, 0.5)]:
    print("    (%s, %s, %s, %s)," % (f(t), f(s), f(k), c(leipnik(mpf(t), s, k))))
print("];\n")

# Thorin density U(t) = Im[phi'/phi]/pi at the upper boundary; phi' from the (-s/z) integrand.
print("/// (t, mu, sigma, U(t))")
print("pub const THORIN: &[(f64, f64, f64, f64)] = &[")
for t, mu, s in [(0.1, 0, 1), (1, 0, 1), (10, 0, 1), (100, 0, 1), (1, 0.5, 0.8)]:
    t = mpf(t)
    z = mpc(-t, 0)
    lz = log(t) + 1j * pi
    k = 1 if t < 5 else 3
    ph = contour(lz, mu, s, k)
    dph = contour(lz, mu, s, k, extra=lambda q: -q / z)
    print("    (%s, %s, %s, %s)," % (f(t), f(mu), f(s), f((dph / ph).imag / pi)))
print("];\n")

print("pub const SMALL_Z_BOUND_ALPHA10_SIGMA1: f64 = %s;" % f(exp(pi ** 2 / 2 - 10) / sqrt(2 * pi)))
