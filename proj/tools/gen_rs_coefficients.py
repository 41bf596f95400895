#!/usr/bin/env python3
"""Generate Taylor coefficients of the Riemann-Siegel correction terms C0..C4.

Each C_k(p) is expanded in powers of u = p - 1/2 on p in [0, 1). The output is
a C++ include file consumed by src/zeta_core.cpp.

    python3 tools/gen_rs_coefficients.py > src/rs_coefficients.inc
"""
import mpmath as mp

mp.mp.dps = 80
DEGREE = 64          # kept degree of each C_k in u
WORK = DEGREE + 14   # Psi needs 12 extra orders for C4


def series_cos_affine(a_coeffs, phase, n):
    """cos(f(u) + phase) where f(u) = 2*pi*u^2, as a power series to degree n."""
    # cos(x + c) = cos(c) cos(x) - sin(c) sin(x), x = 2 pi u^2
    out = [mp.mpf(0)] * (n + 1)
    k = 0
    while 2 * k <= n:
        term = (2 * mp.pi) ** k / mp.factorial(k)
        if k % 4 == 0:
            cx, sx = term, 0
        elif k % 4 == 1:
            cx, sx = 0, term
        elif k % 4 == 2:
            cx, sx = -term, 0
        else:
            cx, sx = 0, -term
        out[2 * k] += mp.cos(phase) * cx - mp.sin(phase) * sx
        k += 1
    return out


def psi_series(n):
    num = series_cos_affine(None, -5 * mp.pi / 8, n)
    num = [-c for c in num]
    den = [mp.mpf(0)] * (n + 1)
    for k in range(0, n // 2 + 1):
        den[2 * k] = (-1) ** k * (2 * mp.pi) ** (2 * k) / mp.factorial(2 * k)
    q = [mp.mpf(0)] * (n + 1)
    for i in range(n + 1):
        s = num[i] - sum(q[j] * den[i - j] for j in range(i))
        q[i] = s / den[0]
    return q


def deriv(c, m):
    return [c[j + m] * mp.factorial(j + m) / mp.factorial(j) for j in range(len(c) - m)]


psi = psi_series(WORK)
pi = mp.pi
d = {m: deriv(psi, m)[: DEGREE + 1] for m in range(0, 13)}


def comb(*terms):
    out = [mp.mpf(0)] * (DEGREE + 1)
    for scale, m in terms:
        for j in range(DEGREE + 1):
            out[j] += scale * d[m][j]
    return out


C = [
    comb((1, 0)),
    comb((-1 / (96 * pi**2), 3)),
    comb((1 / (64 * pi**2), 2), (1 / (18432 * pi**4), 6)),
    comb((-1 / (64 * pi**2), 1), (-1 / (3840 * pi**4), 5), (-1 / (5308416 * pi**6), 9)),
    comb((1 / (128 * pi**2), 0), (19 / (24576 * pi**4), 4),
         (11 / (5898240 * pi**6), 8), (1 / (2038431744 * pi**8), 12)),
]

print("// Generated by tools/gen_rs_coefficients.py. Do not edit.")
print("// Taylor coefficients of the Riemann-Siegel corrections C_k(p), u = p - 1/2.")
print(f"inline constexpr int kRsDegree = {DEGREE};")
print(f"inline constexpr double kRsCoeff[5][{DEGREE + 1}] = {{")
for k, ck in enumerate(C):
    print("    {")
    for j in range(DEGREE + 1):
        print(f"        {mp.nstr(ck[j], 20, min_fixed=0, max_fixed=0)},")
    print("    },")
print("};")
