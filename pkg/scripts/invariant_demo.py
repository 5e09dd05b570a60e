"""Worked example: integral invariants of diagonal cyclic actions.

Takes the abelian Lie algebra of dimension 3 and acts by diag(w, 1, 1) with w
a primitive n-th root of unity.  For n > 1 the determinant leaves SL, the
smash product stops being Calabi-Yau, and the 1-dimensional space of integral
invariants twists away from the full group sum.  Contrast with a planar
rotation inside SL, where the invariant is exactly the sum over the group.

Usage: python3 scripts/invariant_demo.py [--order N]
"""

import argparse
import sys

from cyalg import (ONE, Matrix, group_closure, in_special_linear,
                   integral_character, new_lie_algebra, skew_integral_invariants,
                   skew_is_cy, zeta)


def diagonal_example(n):
    w = zeta(n)
    L = new_lie_algebra(3)
    G = group_closure([Matrix.from_rows([(w, 0, 0), (0, 1, 0), (0, 0, 1)])])
    print(f"== diag(w, 1, 1) with w a primitive root of unity of order {n}")
    print(f"   group order: {G.order}")
    sl = in_special_linear(G)
    print(f"   inside SL: {sl.ok}")
    cy = skew_is_cy(L, G)
    print(f"   smash product Calabi-Yau: {cy.verdict}")
    chi = integral_character(L, G)
    print(f"   integral character: {[str(c) for c in chi.values]}")
    t = skew_integral_invariants(L, G)
    print(f"   invariant vector over the group algebra: {[str(c) for c in t]}")
    print(f"   equals the full group sum: {t == (ONE,) * len(t)}")
    print()


def rotation_example():
    L = new_lie_algebra(2)
    G = group_closure([Matrix.from_rows([(0, -1), (1, 0)])])
    print("== planar rotation of order 4 (inside SL)")
    print(f"   group order: {G.order}")
    cy = skew_is_cy(L, G)
    print(f"   smash product Calabi-Yau: {cy.verdict} (dimension {cy.dimension})")
    t = skew_integral_invariants(L, G)
    print(f"   invariant vector: {[str(c) for c in t]}  <- full group sum")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=3,
                    help="order of the diagonal root of unity (default 3)")
    args = ap.parse_args(argv)
    if args.order < 2:
        print("order must be at least 2", file=sys.stderr)
        return 2
    diagonal_example(args.order)
    rotation_example()
    return 0


if __name__ == "__main__":
    sys.exit(main())
