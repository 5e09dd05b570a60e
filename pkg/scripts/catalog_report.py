"""Print a full report on every bundled catalog algebra.

For each entry: the defining relations, the Calabi-Yau verdict with the
homological routes, the Betti numbers of the underlying Lie algebra, the
dualizing translation, and (where a potential is stored) whether the relations
are exactly the cyclic derivatives of that potential.

Usage: python3 scripts/catalog_report.py [names...]
"""

import sys

from cyalg import (CATALOG_NAMES, betti_numbers, format_ncpoly, is_cy_sridharan,
                   load_catalog, verify_potential, zeta_dualizing_automorphism)
from cyalg.sridharan import TwoCocycle, build_sridharan


def report(name):
    problem = load_catalog(name)
    L = problem.lie()
    f = problem.cocycle2 if problem.cocycle2 is not None else TwoCocycle.zero(L.dim)
    A = build_sridharan(L, f, name=name)
    cy = is_cy_sridharan(L, f)

    print(f"== {name}")
    if problem.comment:
        print(f"   {problem.comment}")
    for rel in A.relations():
        print(f"   relation: {format_ncpoly(rel, L.basis_names)} = 0")
    print(f"   calabi-yau: {cy.verdict}"
          + (f" (dimension {cy.dimension})" if cy.verdict else ""))
    print(f"   betti numbers of the lie algebra: {betti_numbers(L)}")
    zf = zeta_dualizing_automorphism(A)
    print(f"   dualizing translation: {list(map(str, zf.shift))}"
          f" (identity: {zf.is_identity()})")
    if problem.potential_text is not None:
        phi = problem.potential()
        ok = verify_potential(phi, A)
        print(f"   potential: {problem.potential_text}")
        print(f"   relations match its cyclic derivatives: {ok}")
    print()


def main(argv):
    names = argv or list(CATALOG_NAMES)
    unknown = [n for n in names if n not in CATALOG_NAMES]
    if unknown:
        print(f"unknown catalog names: {unknown}", file=sys.stderr)
        print(f"available: {list(CATALOG_NAMES)}", file=sys.stderr)
        return 2
    for name in names:
        report(name)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
