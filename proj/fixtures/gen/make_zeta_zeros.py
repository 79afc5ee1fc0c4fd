#!/usr/bin/env python3
"""Generate Riemann zeta zero fixtures with mpmath's Riemann-Siegel based zetazero().

Outputs (ordinates of zeros 1/2 + i*gamma, sorted, one per line):
  fixtures/zeta_zeros_0_103.txt    all zeros with gamma <= 103
  fixtures/zeta_zeros_990_1030.txt all zeros with gamma in [990, 1030]
"""
import os
import mpmath as mp

mp.mp.dps = 30
HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..")


def write_list(path, ordinates, delta, source):
    with open(path, "w") as f:
        f.write(f"# delta={delta}\n")
        f.write(f"# source={source}\n")
        for g in ordinates:
            f.write(mp.nstr(g, 20, strip_zeros=False) + "\n")
    print(f"wrote {path}: {len(ordinates)} zeros")


def main():
    # Low zeros: gamma <= 103 (the next zero is at ~103.7255).
    low = []
    n = 1
    while True:
        g = mp.zetazero(n).imag
        if g > 103:
            break
        low.append(g)
        n += 1
    write_list(os.path.join(OUT, "zeta_zeros_0_103.txt"), low, "1e-9",
               "mpmath zetazero (Riemann-Siegel), dps=30")

    # Band [990, 1030]. N(990) ~ 640, so start scanning well below.
    band = []
    n = 620
    while True:
        g = mp.zetazero(n).imag
        if g > 1030:
            break
        if g >= 990:
            band.append(g)
        n += 1
    write_list(os.path.join(OUT, "zeta_zeros_990_1030.txt"), band, "1e-9",
               "mpmath zetazero (Riemann-Siegel), dps=30")


if __name__ == "__main__":
    main()
