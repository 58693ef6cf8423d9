"""Regenerates oracle_values.hpp from mpmath at 30 significant digits.

Every value here is computed by a route independent of the C++ library:
  - Bessel functions: mpmath.
  - Free-space Green tensor: textbook dyadic closed form, sign flipped.
  - Imaginary-frequency cavity tensor: analytic continuation k -> iu of the
    mode sums (K-Bessel sums), cross-checked against the defining q-integral.
  - Real-frequency cavity tensor and its k-derivative: mode sums in extended
    precision; the derivative by mpmath numerical differentiation.
  - Off-resonant tensor potential: QUADPACK (scipy) integral of the continued
    sums in double precision, after checking them against the 30-digit sums.
  - Electrostatic tensor potential: image-charge sums divided by pi.

Usage: python3 generate_oracles.py > oracle_values.hpp
"""

import sys

import numpy as np
from scipy import integrate, special

from mpmath import (besselj, bessely, besselk, diff, exp, expm1, floor, inf, mp, mpc, mpf, nsum, pi, quad,
                    sqrt)

mp.dps = 30


def fmt(x):
    return mp.nstr(mpf(x), 20, min_fixed=-1, max_fixed=-1) if x != 0 else "0.0"


def free_green(r, k):
    """Minus the standard dyadic Green function at real k (complex par, perp)."""
    r, k = mpf(r), mpf(k)
    x = k * r
    pre = exp(mpc(0, 1) * x) / (4 * pi * r)
    a = 1 + mpc(0, 1) / x - 1 / x**2
    b = -1 - 3 * mpc(0, 1) / x + 3 / x**2
    return -pre * (a + b), -pre * a


def free_green_imag(r, u):
    r, u = mpf(r), mpf(u)
    x = u * r
    pre = exp(-x) / (4 * pi * r)
    a = 1 + 1 / x + 1 / x**2
    b = -1 - 3 / x - 3 / x**2
    return -pre * (a + b), -pre * a, -pre * a


def sum_until_small(term, start, step=1):
    total = mpf(0)
    n = start
    small = 0
    while small < 3:
        t = term(n)
        total += t
        small = small + 1 if abs(t) <= mpf(10) ** -(mp.dps + 3) * abs(total) else 0
        n += step
    return total


def green_imag_modesum(r, d, u):
    r, d, u = mpf(r), mpf(d), mpf(u)

    def q(n):
        return sqrt((n * pi / d) ** 2 + u**2)

    par = sum_until_small(lambda n: (n * pi / d) ** 2 * besselk(0, r * q(n)) + q(n) / r * besselk(1, r * q(n)), 1, 2)
    perp = sum_until_small(lambda n: u**2 * besselk(0, r * q(n)) + q(n) / r * besselk(1, r * q(n)), 1, 2)
    g00 = u**2 * besselk(0, r * u) / 2 + sum_until_small(
        lambda n: ((2 * n * pi / d) ** 2 + u**2) * besselk(0, r * sqrt((2 * n * pi / d) ** 2 + u**2)), 1)
    s = 1 / (pi * d * u**2)
    return par * s, -perp * s, -g00 * s


def green_imag_qintegral(r, d, u):
    r, d, u = mpf(r), mpf(d), mpf(u)
    fp, fq, f0 = free_green_imag(r, u)

    def comp(qq, c):
        kap = sqrt(u**2 + qq**2)
        x = qq * r
        jz = besselj(0, x)
        jx = besselj(1, x) / x if x != 0 else mpf(1) / 2
        a = 2 * exp(-kap * d) / (1 + exp(-kap * d)) / (u**2 * kap)
        b = 2 / expm1(kap * d) / (u**2 * kap)
        if c == 0:
            return qq * a * (qq * qq * (jz - jx) + u**2 * jz) / (4 * pi)
        if c == 1:
            return qq * a * (qq * qq * jx + u**2 * jz) / (4 * pi)
        return qq * b * qq * qq * jz / (4 * pi)

    per = pi / r
    pts = [mpf(0)] + [per * (i + 1) for i in range(int(60 * max(1, d / r)))]
    out = [quad(lambda qq: comp(qq, c), pts) + quad(lambda qq: comp(qq, c), [pts[-1], inf]) for c in range(3)]
    return fp + out[0], fq + out[1], f0 + out[2]


def k2_re_green(r, d, k):
    r, d, k = mpf(r), mpf(d), mpf(k)
    k2 = k * k
    n_prop = int(floor(k * d / pi))
    par = perp = mpf(0)
    for n in range(1, n_prop + 1, 2):
        kn = n * pi / d
        p = sqrt(k2 - kn * kn)
        par += (kn * kn * bessely(0, r * p) + p / r * bessely(1, r * p)) / (2 * d)
        perp += (k2 * bessely(0, r * p) - p / r * bessely(1, r * p)) / (2 * d)
    first = n_prop + 1 if n_prop % 2 == 0 else n_prop + 2

    def qn(n):
        return sqrt((n * pi / d) ** 2 - k2)

    par -= sum_until_small(
        lambda n: ((n * pi / d) ** 2 * besselk(0, r * qn(n)) + qn(n) / r * besselk(1, r * qn(n))) / (pi * d), first, 2)
    perp -= sum_until_small(lambda n: (k2 * besselk(0, r * qn(n)) - qn(n) / r * besselk(1, r * qn(n))) / (pi * d),
                            first, 2)
    g00 = k2 * bessely(0, k * r) / (4 * d)
    n_prop2 = int(floor(k * d / (2 * pi)))
    for n in range(1, n_prop2 + 1):
        p2 = k2 - (2 * n * pi / d) ** 2
        g00 += p2 * bessely(0, r * sqrt(p2)) / (2 * d)

    def q2(n):
        return (2 * n * pi / d) ** 2 - k2

    g00 += sum_until_small(lambda n: q2(n) * besselk(0, r * sqrt(q2(n))) / (pi * d), n_prop2 + 1)
    return par, perp, g00


def im_green(r, d, k):
    r, d, k = mpf(r), mpf(d), mpf(k)
    k2 = k * k
    c = -1 / (2 * d * k2)
    par = perp = mpf(0)
    for n in range(1, int(floor(k * d / pi)) + 1, 2):
        kn = n * pi / d
        p = sqrt(k2 - kn * kn)
        par += c * (kn * kn * besselj(0, r * p) + p / r * besselj(1, r * p))
        perp += c * (k2 * besselj(0, r * p) - p / r * besselj(1, r * p))
    g00 = -besselj(0, k * r) / (4 * d)
    for n in range(1, int(floor(k * d / (2 * pi))) + 1):
        p2 = k2 - (2 * n * pi / d) ** 2
        g00 -= p2 * besselj(0, r * sqrt(p2)) / (2 * k2 * d)
    return par, perp, g00


def spherical(par, perp, g00):
    return (par + perp) / 2, (par - perp) / 2, g00


def green_imag_modesum_np(r, d, u):
    """Double-precision K-Bessel mode sums at imaginary frequency (numpy/scipy)."""
    n_odd = np.arange(1, 2 * int(60 * d / (np.pi * r)) + 41, 2)
    kn = n_odd * np.pi / d
    q = np.sqrt(kn**2 + u**2)
    k0, k1 = special.kv(0, r * q), special.kv(1, r * q)
    par = np.sum(kn**2 * k0 + q / r * k1)
    perp = np.sum(u**2 * k0 + q / r * k1)
    m = np.arange(1, int(30 * d / (np.pi * r)) + 21)
    q2 = np.sqrt((2 * m * np.pi / d) ** 2 + u**2)
    g00 = u**2 * special.kv(0, r * u) / 2 + np.sum(q2**2 * special.kv(0, r * q2))
    s = 1 / (np.pi * d * u**2)
    return par * s, -perp * s, -g00 * s


def green_imag_free_np(r, u):
    x = u * r
    pre = np.exp(-x) / (4 * np.pi * r)
    a = 1 + 1 / x + 1 / x**2
    b = -1 - 3 / x - 3 / x**2
    return -pre * (a + b), -pre * a, -pre * a


def v_off(kr, kd):
    """QUADPACK integral of the squared continued mode sums (K = 1)."""

    def f(qq, c):
        g = green_imag_free_np(kr, qq) if kd is None else green_imag_modesum_np(kr, kd, qq)
        pm, pp, zz = spherical(*g)
        w = qq * qq / (1 + qq * qq)
        return (w * (pm, pp, zz)[c]) ** 2

    s = 1 / kr
    edges = [1e-300, s / 4, s, 4 * s, 16 * s, np.inf]
    return [sum(integrate.quad(f, a, b, args=(c,), epsabs=0, epsrel=1e-13, limit=1000)[0]
                for a, b in zip(edges[:-1], edges[1:])) for c in range(3)]


def static_tensor(x):
    r, d = mpf(x), mpf(1)

    def R(m):
        return sqrt(r**2 + (m * d) ** 2)

    par = -2 / (4 * pi * r**3) + 2 * nsum(lambda m: (-1) ** int(m) * (1 - 3 * r**2 / R(m) ** 2) / (4 * pi * R(m) ** 3),
                                          [1, inf])
    perp = 1 / (4 * pi * r**3) + 2 * nsum(lambda m: (-1) ** int(m) / (4 * pi * R(m) ** 3), [1, inf])
    g00 = 1 / (4 * pi * r**3) + 2 * nsum(lambda m: (1 - 3 * (m * d) ** 2 / R(m) ** 2) / (4 * pi * R(m) ** 3), [1, inf])
    pm, pp, zz = spherical(par, perp, g00)
    return zz / pi, pp / pi, pm / pi


def log(msg):
    print(msg, file=sys.stderr, flush=True)


def main():
    out = sys.stdout
    out.write("// Generated by tests/oracles/generate_oracles.py. Do not edit.\n")
    out.write("#pragma once\n\nnamespace oracle {\n\n")

    xs = ["0.001", "0.1", "1", "2.404825557695773", "5", "12.5", "30", "100", "600"]
    out.write("struct BesselRow { double x, j0, j1, y0, y1, k0, k1; };\n")
    out.write("inline constexpr BesselRow kBessel[] = {\n")
    for s in xs:
        x = mpf(s)
        vals = [besselj(0, x), besselj(1, x), bessely(0, x), bessely(1, x), besselk(0, x), besselk(1, x)]
        out.write("    {" + s + ", " + ", ".join(fmt(v) for v in vals) + "},\n")
    out.write("};\n\n")

    out.write("struct FreeGreenRow { double kr, re_par, im_par, re_perp, im_perp; };\n")
    out.write("inline constexpr FreeGreenRow kFreeGreen[] = {\n")
    for kr in ["0.1", "1", "7.5"]:
        par, perp = free_green(mpf(kr), 1)
        out.write("    {%s, %s, %s, %s, %s},\n" % (kr, fmt(par.real), fmt(par.imag), fmt(perp.real), fmt(perp.imag)))
    out.write("};\n\n")

    log("cavity green")
    out.write("struct CavityGreenRow { double kr, kd, re_par, im_par, re_perp, im_perp, re_00, im_00; };\n")
    out.write("inline constexpr CavityGreenRow kCavityGreen[] = {\n")
    for kr, kd in [("1", "5"), ("0.2", "2"), ("2", "20"), ("0.5", "8"), ("3", "2.5")]:
        re = k2_re_green(kr, kd, 1)
        im = im_green(kr, kd, 1)
        vals = [re[0], im[0], re[1], im[1], re[2], im[2]]
        out.write("    {%s, %s, %s},\n" % (kr, kd, ", ".join(fmt(v) for v in vals)))
    out.write("};\n\n")

    log("derivative")
    out.write("struct DerivativeRow { double kr, kd, par, perp, g00; };\n")
    out.write("inline constexpr DerivativeRow kDerivative[] = {\n")
    for kr, kd in [("0.3", "2"), ("2", "5"), ("1.5", "8")]:
        vals = [diff(lambda k: k2_re_green(kr, kd, k)[c], 1) for c in range(3)]
        out.write("    {%s, %s, %s},\n" % (kr, kd, ", ".join(fmt(v) for v in vals)))
    out.write("};\n\n")

    log("q-integral cross-check")
    check = green_imag_qintegral("0.5", "2", "1")
    ref = green_imag_modesum("0.5", "2", "1")
    for a, b in zip(check, ref):
        assert abs(a / b - 1) < mpf(10) ** -25, (a, b)
    out.write("struct ImagGreenRow { double ur, ud, par, perp, g00; };\n")
    out.write("inline constexpr ImagGreenRow kImagGreen[] = {\n")
    for ur, ud in [("0.5", "2"), ("2", "10"), ("1", "0.5"), ("0.2", "1"), ("3", "0.4")]:
        vals = green_imag_modesum(ur, ud, 1)
        out.write("    {%s, %s, %s},\n" % (ur, ud, ", ".join(fmt(v) for v in vals)))
    out.write("};\n\n")

    log("off-resonant potential")
    # The double-precision mode sums must agree with the 30-digit ones.
    for q in (0.05, 1.0, 7.0):
        hi = green_imag_modesum("0.2", "2", q)
        lo = green_imag_modesum_np(0.2, 2.0, q)
        for a, b in zip(hi, lo):
            assert abs(b / float(a) - 1) < 1e-13, (q, a, b)
    out.write("// Kd = 0 marks the free-space form.\n")
    out.write("struct VOffRow { double kr, kd, v00, vpp, vpm; };\n")
    out.write("inline constexpr VOffRow kVOff[] = {\n")
    for kr, kd in [("0.2", "0.2"), ("0.2", "2"), ("1", "5"), ("0.2", None), ("1", None)]:
        log("  %s %s" % (kr, kd))
        pm, pp, zz = v_off(float(kr), None if kd is None else float(kd))
        out.write("    {%s, %s, %s, %s, %s},\n" % (kr, kd or "0", repr(zz), repr(pp), repr(pm)))
    out.write("};\n\n")

    mp.dps = 30
    log("static")
    out.write("struct VStaticRow { double r_over_d, v00, vpp, vpm; };\n")
    out.write("inline constexpr VStaticRow kVStatic[] = {\n")
    for x in ["0.01", "0.1", "0.5", "1", "2", "5"]:
        vals = static_tensor(x)
        out.write("    {%s, %s},\n" % (x, ", ".join(fmt(v) for v in vals)))
    out.write("};\n\n}  // namespace oracle\n")


if __name__ == "__main__":
    main()
