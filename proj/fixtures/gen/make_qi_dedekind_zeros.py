#!/usr/bin/env python3
"""Generate zeros of the Dedekind zeta function of Q(i) on (0, 45].

zeta_Q(i)(s) = zeta(s) * L(s, chi_-4), so the zero set is the union of the
zeta zeros and the zeros of the Dirichlet L-function for the odd character
mod 4.  L(s, chi_-4) is evaluated through Hurwitz zeta values,
L(s) = 4^-s (zeta(s,1/4) - zeta(s,3/4)), and its completed form
Lambda(s) = (4/pi)^((s+1)/2) Gamma((s+1)/2) L(s) is real on the critical
line (root number +1), so zeros are located by sign changes and bisection.

Output: fixtures/qi_dedekind_zeros_0_45.txt (merged, sorted ordinates).
"""
import os
import mpmath as mp

mp.mp.dps = 30
HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..")
TMAX = 45


def lambda_chi4(t):
    s = mp.mpf("0.5") + mp.mpc(0, 1) * t
    L = mp.power(4, -s) * (mp.zeta(s, mp.mpf(1) / 4) - mp.zeta(s, mp.mpf(3) / 4))
    val = mp.power(mp.mpf(4) / mp.pi, (s + 1) / 2) * mp.gamma((s + 1) / 2) * L
    assert abs(val.imag) < 1e-18 * (1 + abs(val.real)), f"not real at t={t}: {val}"
    return val.real


def chi4_zeros():
    zeros = []
    step = mp.mpf("0.04")
    t = step
    prev_t, prev_v = t, lambda_chi4(t)
    t += step
    while t <= TMAX + step:
        v = lambda_chi4(t)
        if mp.sign(v) != mp.sign(prev_v):
            root = mp.findroot(lambda_chi4, (prev_t, t), solver="bisect", tol=mp.mpf("1e-24"))
            if root <= TMAX:
                zeros.append(mp.mpf(root))
        prev_t, prev_v = t, v
        t += step
    return zeros


def main():
    chi = chi4_zeros()
    print("chi_-4 zeros:", [mp.nstr(z, 10) for z in chi])

    zz = []
    n = 1
    while True:
        g = mp.zetazero(n).imag
        if g > TMAX:
            break
        zz.append(g)
        n += 1

    merged = sorted(chi + zz)
    path = os.path.join(OUT, "qi_dedekind_zeros_0_45.txt")
    with open(path, "w") as f:
        f.write("# delta=1e-8\n")
        f.write("# source=zeta: mpmath zetazero; L(s,chi_-4): Hurwitz-zeta bisection, dps=30\n")
        for g in merged:
            f.write(mp.nstr(g, 18, strip_zeros=False) + "\n")
    print(f"wrote {path}: {len(merged)} zeros")


if __name__ == "__main__":
    main()
