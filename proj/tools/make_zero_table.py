#!/usr/bin/env python3
"""Write the imaginary parts of the first N nontrivial zeta zeros, one per line.

Usage: make_zero_table.py N OUTPUT

The output uses the "index value" layout accepted by `hizeta zeros-import`.
"""
import sys

import mpmath as mp


def main():
    count = int(sys.argv[1])
    out = sys.argv[2]
    mp.mp.dps = 25
    with open(out, "w") as fh:
        fh.write(f"# imaginary parts of the first {count} nontrivial zeros of zeta(s)\n")
        fh.write("# generated with mpmath.zetazero at 25 digits\n")
        for n in range(1, count + 1):
            gamma = mp.zetazero(n).imag
            fh.write(f"{n} {mp.nstr(gamma, 18)}\n")


if __name__ == "__main__":
    main()
