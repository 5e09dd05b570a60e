"""Random sweep checking that the two Calabi-Yau routes always agree.

Draws random Lie algebras (structured families, unimodular basis changes of
those, and sparse rejection-sampled tables), decides the Calabi-Yau property
through the homological route (Betti numbers and the top differential) and
through the trace route (unimodularity), and tallies agreement.  A mismatch
would be a bug in one of the routes; the run aborts on the first one.

Usage: python3 scripts/random_route_sweep.py [--count N] [--seed S]
"""

import argparse
import random
import sys
from collections import Counter

from cyalg import betti_numbers, is_cy_universal, is_unimodular
from cyalg.selftest import random_lie_algebra


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=20260819)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    tally = Counter()
    for k in range(args.count):
        L = random_lie_algebra(rng)
        cy = is_cy_universal(L)
        uni = is_unimodular(L).ok
        if cy.verdict != uni:
            print(f"MISMATCH at draw {k}: cy={cy.verdict} unimodular={uni}")
            print(f"  table: {L!r}")
            return 1
        top = betti_numbers(L)[-1]
        if cy.verdict != (top != 0):
            print(f"MISMATCH at draw {k}: cy={cy.verdict} top betti={top}")
            return 1
        tally[("cy" if cy.verdict else "not-cy", L.dim)] += 1

    print(f"{args.count} random algebras, routes agree on every one")
    for (kind, dim), n in sorted(tally.items()):
        print(f"  dim {dim} {kind}: {n}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
