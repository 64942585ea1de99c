#!/usr/bin/env python3
"""Survey least critical exponents of small monomial ideals across primes.

Prints lce(<x,y>^d) and lce(<x^a, y^b>) with certification flags, side by
side with the characteristic-independent F-pure threshold of the Newton
polyhedron.  The lce depends on p mod small integers; the fpt does not.

Usage: python3 scripts/lce_survey.py [e_max]
"""

import sys

from frobpow import Ideal, PolyRing, ideal_power, lce, newton_fpt

PRIMES = (2, 3, 5, 7, 11)


def survey(label, build, e_max):
    print(label)
    fpt = None
    for p in PRIMES:
        R = PolyRing(p, ("x", "y"))
        a = build(R)
        if fpt is None:
            fpt = newton_fpt(a.to_monomial())
        rep = lce(a, e_max=e_max)
        tag = "certified" if rep.certified_exact else "heuristic"
        print(f"  p = {p:>2}:  lce = {str(rep.candidate):>9}  ({tag})")
    print(f"  fpt (all p): {fpt}")


def main():
    e_max = int(sys.argv[1]) if len(sys.argv) > 1 else 5

    def mpow(d):
        return lambda R: ideal_power(Ideal(R, [R.var("x"), R.var("y")]), d)

    def diag(a, b):
        return lambda R: Ideal(R, [R.parse(f"x^{a}"), R.parse(f"y^{b}")])

    survey("<x,y>^5", mpow(5), e_max)
    survey("<x,y>^7", mpow(7), e_max)
    survey("<x^2, y^3>", diag(2, 3), e_max)
    survey("<x^5, y^5>", diag(5, 5), e_max)


if __name__ == "__main__":
    main()
