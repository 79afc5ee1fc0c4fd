#!/usr/bin/env python3
"""Generate zeros of L(E,s) for the elliptic curve 11a1 on [-25, 25].

The completed L-function Lambda(s) = (sqrt(N)/2pi)^s Gamma(s) L(E,s) with
N = 11 satisfies Lambda(s) = Lambda(2-s) (root number +1 for 11a1) and is
evaluated by the incomplete-gamma approximate functional equation

  Lambda(s) = sum_n a_n [ (sqrt(N)/2pi n)^s     Gamma(s,   2 pi n/sqrt(N))
                        + (sqrt(N)/2pi n)^(2-s) Gamma(2-s, 2 pi n/sqrt(N)) ].

a_p comes from naive point counting mod p; a_n is extended multiplicatively
with a_{p^k} = a_p a_{p^(k-1)} - p a_{p^(k-2)} for good p and a_{11^k} = 1.
Lambda(1+it) is real, zeros are found by sign scan + bisection and mirrored
to negative t (real coefficients).

Output: fixtures/ec11a1_zeros_m25_25.txt
"""
import os
import mpmath as mp

mp.mp.dps = 25
HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..")

N = 11
TMAX = 25
NMAX = 48  # 2*pi*48/sqrt(11) ~ 91, e^-91 is far below target accuracy
AINV = (0, -1, 1, -10, -20)  # y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6


def ap_naive(p):
    a1, a2, a3, a4, a6 = [a % p for a in AINV]
    count = 1  # point at infinity
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y) % p == rhs:
                count += 1
    return p + 1 - count


def coefficients(nmax):
    a = [0] * (nmax + 1)
    a[1] = 1
    primes = [p for p in range(2, nmax + 1) if all(p % q for q in range(2, p))]
    for p in primes:
        if p > nmax:
            break
        ap = 1 if p == N else ap_naive(p)
        # prime powers
        pk, prev2, prev1 = p, 1, ap
        while pk <= nmax:
            a[pk] = prev1
            nxt = ap * prev1 - (0 if p == N else p) * prev2
            prev2, prev1 = prev1, nxt
            pk *= p
    # multiplicative extension
    for n in range(2, nmax + 1):
        if a[n] == 0 and n > 1:
            for p in primes:
                if n % p == 0:
                    pk = p
                    while n % (pk * p) == 0:
                        pk *= p
                    m = n // pk
                    if m > 1 and mp.libmp.gcd(pk, m) == 1:
                        a[n] = a[pk] * a[m]
                    break
    return a


A = coefficients(NMAX)
SQN = mp.sqrt(N)
X = [2 * mp.pi * n / SQN for n in range(NMAX + 1)]


def lam(t):
    s = 1 + mp.mpc(0, 1) * t
    tot = mp.mpc(0)
    for n in range(1, NMAX + 1):
        if A[n] == 0:
            continue
        q = SQN / (2 * mp.pi * n)
        tot += A[n] * (mp.power(q, s) * mp.gammainc(s, a=X[n])
                       + mp.power(q, 2 - s) * mp.gammainc(2 - s, a=X[n]))
    assert abs(tot.imag) < 1e-15 * (1 + abs(tot.real)), f"not real at t={t}: {tot}"
    return tot.real


def main():
    # sanity: known q-expansion of 11a1
    assert A[2] == -2 and A[3] == -1 and A[4] == 2 and A[5] == 1 and A[9] == -2

    zeros = []
    step = mp.mpf("0.04")
    prev_t, prev_v = mp.mpf(0), lam(0)
    assert prev_v != 0  # rank 0: L(E,1) != 0
    t = step
    while t <= TMAX + step:
        v = lam(t)
        if mp.sign(v) != mp.sign(prev_v):
            root = mp.findroot(lam, (prev_t, t), solver="bisect", tol=mp.mpf("1e-20"))
            if root <= TMAX:
                zeros.append(mp.mpf(root))
        prev_t, prev_v = t, v
        t += step

    print("positive zeros:", [mp.nstr(z, 10) for z in zeros])
    both = sorted([-z for z in zeros] + zeros)
    path = os.path.join(OUT, "ec11a1_zeros_m25_25.txt")
    with open(path, "w") as f:
        f.write("# delta=1e-8\n")
        f.write("# source=incomplete-gamma AFE for Lambda(E,s), 11a1, dps=25\n")
        for g in both:
            f.write(mp.nstr(g, 18, strip_zeros=False) + "\n")
    print(f"wrote {path}: {len(both)} zeros")


if __name__ == "__main__":
    main()
