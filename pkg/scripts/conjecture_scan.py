#!/usr/bin/env python3
"""Scan the two observed patterns in the signed-count polynomials.

For each genus: (i) does every monomial P^m C^n with m > 0 have m odd, and
(ii) is the C = 0 specialization divisible by P(P^2 - 1)/24?  When (ii)
holds, print the exact quotient.

Example:
    python scripts/conjecture_scan.py --gmax 8
"""

import argparse
from fractions import Fraction

from tqftdims.polylab import BiPoly, conjecture_scan, interpolate_delta


def _quotient_by_base(poly: BiPoly):
    """Divide a P-only polynomial by P(P^2 - 1)/24; None if not divisible."""
    deg = poly.degree_in_p()
    num = [poly.coefficient(i, 0) for i in range(deg + 1)]
    den = [Fraction(0), Fraction(-1, 24), Fraction(0), Fraction(1, 24)]
    quo = [Fraction(0)] * max(deg - 2, 0)
    while num and not num[-1]:
        num.pop()
    while len(num) >= len(den):
        f = num[-1] / den[-1]
        quo[len(num) - len(den)] = f
        for i, dv in enumerate(den):
            num[len(num) - len(den) + i] -= f * dv
        while num and not num[-1]:
            num.pop()
    if num:
        return None
    return BiPoly({(i, 0): q for i, q in enumerate(quo) if q})


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gmin", type=int, default=2)
    ap.add_argument("--gmax", type=int, default=8)
    ns = ap.parse_args()

    for g in range(ns.gmin, ns.gmax + 1):
        scan = conjecture_scan(g)
        print(
            f"g={g}: odd_P_powers_only={scan.no_positive_even_p_powers} "
            f"base_divisible={scan.base_specialization_divisible}"
        )
        if scan.base_specialization_divisible:
            quo = _quotient_by_base(interpolate_delta(g).subs_c(0))
            print(f"      quotient at C=0: {quo.canonical_str()}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
