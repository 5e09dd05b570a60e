"""Command-line front end.

    cyalg check      <input ...>   validate a Lie structure table (Jacobi verdict)
    cyalg classify   <input ...>   classify a 3-dim algebra with CY enveloping algebra
    cyalg homology   <input ...>   Betti numbers and the CY decision for U(g)
    cyalg sridharan  <input ...>   cocycle validation and the CY decision for U_f(g)
    cyalg skew       <input ...>   the CY decision for U(g)#kG
    cyalg potential  <input ...>   does the potential define the algebra?
    cyalg catalog    [name ...]    list or dump the shipped problem files
    cyalg selftest                 run the full acceptance battery

Inputs are problem-file paths or catalog names ("case1" or "catalog:case1").
A query key inside the file overrides the subcommand default.  Exit codes:
0 = verdict true / success, 1 = a definite mathematical "no", 2 = input error.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CyalgError, JacobiViolation, NotUnimodular, ParseError
from .groupact import (group_closure, in_special_linear, integral_character,
                       is_lie_action, skew_is_cy, skew_integral_invariants)
from .homology import betti_numbers, is_cy_universal
from .lie import classify_cy3, derived_dim, is_unimodular, sextuple_extract
from .linalg import Matrix
from .potential import cyclic_derivative, verify_potential
from .problemfile import (CATALOG_NAMES, Problem, catalog_text, load,
                          load_catalog)
from .scalar import Scalar
from .sridharan import (TwoCocycle, build_sridharan, format_ncpoly,
                        is_cy_sridharan, xi_automorphism,
                        zeta_dualizing_automorphism)

_DEFAULT_QUERY = {
    "check": "check-lie",
    "classify": "classify",
    "homology": "homology",
    "sridharan": "sridharan-cy",
    "skew": "skew-cy",
    "potential": "potential-verify",
}

DEFAULT_CAP = 10000


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, (Scalar, Fraction)):
        return str(x)
    if isinstance(x, enum.Enum):
        return x.name
    if isinstance(x, Matrix):
        return [[str(x[i, j]) for j in range(x.cols)] for i in range(x.rows)]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


@dataclass
class Report:
    query: str
    source: str
    verdict: bool = None
    dimension: int = None
    routes: dict = None
    data: dict = field(default_factory=dict)
    notes: tuple = ()
    error: dict = None

    @property
    def exit_code(self):
        if self.error is not None:
            return 2
        if self.verdict is False:
            return 1
        return 0

    def to_dict(self):
        return {"query": self.query, "source": self.source,
                "verdict": self.verdict, "dimension": self.dimension,
                "routes": self.routes, "data": self.data,
                "notes": list(self.notes), "error": self.error}

    def to_text(self):
        lines = [f"== {self.source}  [{self.query}]"]
        if self.error is not None:
            lines.append(f"   error ({self.error['type']}): {self.error['message']}")
            return "\n".join(lines)
        if self.verdict is not None:
            lines.append(f"   verdict: {'yes' if self.verdict else 'no'}")
        if self.dimension is not None:
            lines.append(f"   dimension: {self.dimension}")
        if self.routes:
            routes = ", ".join(f"{k}={v}" for k, v in self.routes.items())
            lines.append(f"   routes: {routes}")
        for key, value in self.data.items():
            if isinstance(value, dict):
                lines.append(f"   {key}:")
                for k, v in value.items():
                    lines.append(f"     {k}: {v}")
            elif isinstance(value, list) and value and isinstance(value[0], str) and len(value) > 6:
                lines.append(f"   {key}: {', '.join(value)}")
            else:
                lines.append(f"   {key}: {value}")
        for note in self.notes:
            lines.append(f"   note: {note}")
        return "\n".join(lines)


def _report_from_cyreport(query, source, rep, **extra):
    return Report(query, source, verdict=rep.verdict, dimension=rep.dimension,
                  routes=rep.routes.as_dict() if rep.routes else None,
                  notes=tuple(rep.notes), data=extra.get("data", {}))


def _handle_check_lie(p: Problem, cap):
    try:
        L = p.lie()
    except JacobiViolation as e:
        return Report("check-lie", p.source, verdict=False,
                      data={"jacobi_triple": _jsonable(e.triple),
                            "jacobi_residual": _jsonable(e.residual)})
    uni = is_unimodular(L)
    return Report("check-lie", p.source, verdict=True, dimension=L.dim,
                  data={"unimodular": uni.ok, "derived_dim": derived_dim(L)})


def _handle_classify(p: Problem, cap):
    L = p.lie()
    try:
        cls = classify_cy3(L)
    except NotUnimodular as e:
        return Report("classify", p.source, verdict=False,
                      data={"trace_witness": _jsonable(e.witness)},
                      notes=("not unimodular, so the enveloping algebra is not Calabi-Yau",))
    s = sextuple_extract(L)
    return Report("classify", p.source, verdict=True, dimension=L.dim,
                  data={"class": cls.name,
                        "sextuple": _jsonable((s.a, s.b, s.c, s.u, s.v, s.w))})


def _handle_homology(p: Problem, cap):
    L = p.lie()
    rep = is_cy_universal(L)
    betti = betti_numbers(L)
    return _report_from_cyreport("homology", p.source, rep,
                                 data={"betti": list(betti)})


def _handle_sridharan(p: Problem, cap):
    L = p.lie()
    f = p.cocycle2 if p.cocycle2 is not None else TwoCocycle.zero(L.dim)
    A = build_sridharan(L, f, name=p.name)
    rep = is_cy_sridharan(L, f)
    data = {"relations": [format_ncpoly(r, L.basis_names) for r in A.relations()]}
    zeta = zeta_dualizing_automorphism(A)
    data["dualizing_shift"] = _jsonable(zeta.shift)
    data["dualizing_is_identity"] = zeta.is_identity()
    if p.cocycle1 is not None:
        xi = xi_automorphism(A, p.cocycle1)
        data["translation_images"] = [
            format_ncpoly(xi.image(i), L.basis_names) for i in range(L.dim)]
    report = _report_from_cyreport("sridharan-cy", p.source, rep)
    report.data = data
    return report


def _group_of(p: Problem, cap):
    if p.group_generators is None:
        raise ParseError(f"{p.source}: this query needs a group section")
    effective = cap if cap is not None else (p.group_cap or DEFAULT_CAP)
    return group_closure(p.group_generators, cap=effective)


def _handle_skew(p: Problem, cap):
    L = p.lie()
    G = _group_of(p, cap)
    rep = skew_is_cy(L, G)
    sl = in_special_linear(G)
    data = {"group_order": G.order, "group_in_sl": sl.ok}
    if not sl.ok:
        data["sl_witness"] = {"element": sl.witness[0],
                              "determinant": str(sl.witness[1])}
    report = _report_from_cyreport("skew-cy", p.source, rep)
    report.data = data
    return report


def _handle_invariants(p: Problem, cap):
    L = p.lie()
    G = _group_of(p, cap)
    chi = integral_character(L, G)
    t = skew_integral_invariants(L, G)
    return Report("integral-invariants", p.source, dimension=L.dim,
                  data={"group_order": G.order,
                        "character": _jsonable(chi.values),
                        "invariant": _jsonable(t),
                        "is_full_group_sum": all(c == t[0] for c in t)})


def _handle_potential(p: Problem, cap):
    L = p.lie()
    f = p.cocycle2 if p.cocycle2 is not None else TwoCocycle.zero(L.dim)
    A = build_sridharan(L, f, name=p.name)
    phi = p.potential()
    ok = verify_potential(phi, A)
    derivs = {nm: format_ncpoly(cyclic_derivative(phi, g), L.basis_names)
              for g, nm in enumerate(L.basis_names)}
    return Report("potential-verify", p.source, verdict=ok, dimension=L.dim,
                  data={"derivatives": derivs,
                        "relations": [format_ncpoly(r, L.basis_names)
                                      for r in A.relations()]})


_HANDLERS = {
    "check-lie": _handle_check_lie,
    "classify": _handle_classify,
    "homology": _handle_homology,
    "sridharan-cy": _handle_sridharan,
    "skew-cy": _handle_skew,
    "integral-invariants": _handle_invariants,
    "potential-verify": _handle_potential,
}


def _load_input(source) -> Problem:
    if source.startswith("catalog:"):
        return load_catalog(source[len("catalog:"):])
    if source in CATALOG_NAMES:
        return load_catalog(source)
    return load(source)


def _process_input(task):
    cmd, source, cap = task
    query = _DEFAULT_QUERY[cmd]
    try:
        problem = _load_input(source)
        if problem.query is not None:
            query = problem.query
        return _HANDLERS[query](problem, cap)
    except CyalgError as e:
        return Report(query, source,
                      error={"type": type(e).__name__, "message": str(e)})
    except OSError as e:
        return Report(query, source,
                      error={"type": "IOError", "message": str(e)})
    except Exception as e:
        return Report(query, source,
                      error={"type": f"internal:{type(e).__name__}",
                             "message": str(e)})


def _run_catalog(args):
    reports = []
    if not args.names:
        for name in CATALOG_NAMES:
            problem = load_catalog(name)
            reports.append(Report("catalog", name,
                                  data={"comment": problem.comment}))
            print(f"{name:12s} {problem.comment}")
        return 0, reports
    for name in args.names:
        try:
            text = catalog_text(name)
        except ParseError as e:
            report = Report("catalog", name,
                            error={"type": "ParseError", "message": str(e)})
            reports.append(report)
            print(report.to_text())
            return 2, reports
        print(text, end="")
        reports.append(Report("catalog", name,
                              data={"document": json.loads(text)}))
    return 0, reports


def _run_selftest(args):
    from . import selftest

    reports = []
    ok_all = True
    for result in selftest.run_all():
        ok_all = ok_all and result.ok
        reports.append(Report("selftest", result.name, verdict=result.ok,
                              data={"detail": result.detail,
                                    "seconds": round(result.seconds, 3)}))
        status = "pass" if result.ok else "FAIL"
        print(f"[{status}] {result.name} ({result.seconds:.2f}s) {result.detail}")
    print("selftest:", "all criteria pass" if ok_all else "FAILURES PRESENT")
    return (0 if ok_all else 1), reports


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cyalg",
        description="Exact Calabi-Yau decisions for enveloping algebras, "
                    "their cocycle deformations, and finite-group smash products.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="+",
                        help="problem file path or catalog name (catalog:case1 or case1)")
    common.add_argument("--json", metavar="PATH", default=None,
                        help="also write reports as JSON to PATH")
    common.add_argument("--cap", type=int, default=None,
                        help="group closure cap (overrides the file's cap)")
    common.add_argument("--jobs", type=int, default=1,
                        help="process inputs in parallel")

    sub.add_parser("check", parents=[common],
                   help="validate a Lie structure table")
    sub.add_parser("classify", parents=[common],
                   help="classify a 3-dim Lie algebra with CY enveloping algebra")
    sub.add_parser("homology", parents=[common],
                   help="Betti numbers and the CY decision")
    sub.add_parser("sridharan", parents=[common],
                   help="cocycle deformation CY decision")
    sub.add_parser("skew", parents=[common],
                   help="smash product CY decision")
    sub.add_parser("potential", parents=[common],
                   help="verify a potential presents the algebra")

    cat = sub.add_parser("catalog", help="list or dump shipped problem files")
    cat.add_argument("names", nargs="*")
    cat.add_argument("--json", metavar="PATH", default=None)

    st = sub.add_parser("selftest", help="run the acceptance battery")
    st.add_argument("--json", metavar="PATH", default=None)
    return parser


def run(argv=None):
    """Returns (exit_code, reports); prints human-readable reports to stdout."""
    args = _build_parser().parse_args(argv)

    if args.cmd == "catalog":
        code, reports = _run_catalog(args)
    elif args.cmd == "selftest":
        code, reports = _run_selftest(args)
    else:
        tasks = [(args.cmd, source, args.cap) for source in args.inputs]
        if args.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_process_input, tasks))
        else:
            reports = [_process_input(t) for t in tasks]
        for report in reports:
            print(report.to_text())
        code = max(r.exit_code for r in reports)

    if getattr(args, "json", None):
        doc = {"exit_code": code, "reports": [r.to_dict() for r in reports]}
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    return code, reports


def main():
    sys.exit(run()[0])


if __name__ == "__main__":
    main()
