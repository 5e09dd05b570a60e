"""Problem files: the JSON input format of the CLI and the shipped catalog.

A problem document is a JSON object with optional sections

    name, comment    strings
    lie              {"dim": n, "basis": [names], "brackets": [{"left", "right",
                     "value": {name: scalar-string}}]}
    cocycle2         [{"left", "right", "value": scalar-string}]
    cocycle1         {name: scalar-string}
    group            {"generators": [matrix of scalar-strings], "cap": n}
    potential        {"expression": string}
    query            one of check-lie | classify | homology | sridharan-cy |
                     skew-cy | integral-invariants | potential-verify

Scalar strings follow the cyclotomic grammar ("3/4", "1 + 2*z@8").  The Lie
algebra itself is constructed lazily so that a Jacobi failure can be reported
as a verdict by the check-lie query rather than a load error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import ParseError
from .lie import LieAlgebra, new_lie_algebra
from .linalg import Matrix
from .potential import parse_potential
from .scalar import Scalar, as_scalar
from .sridharan import TwoCocycle

QUERIES = ("check-lie", "classify", "homology", "sridharan-cy", "skew-cy",
           "integral-invariants", "potential-verify")

CATALOG_CASE_NAMES = tuple(f"case{i}" for i in range(1, 8))
CATALOG_NAMES = CATALOG_CASE_NAMES + ("sl2", "heisenberg", "abelian2",
                                      "abelian3", "solvable2b")

_SECTIONS = {"name", "comment", "lie", "cocycle2", "cocycle1", "group",
             "potential", "query"}


@dataclass
class Problem:
    source: str = "<dict>"
    name: str = ""
    comment: str = ""
    dim: int = None
    basis: tuple = None
    constants: dict = field(default_factory=dict)
    cocycle2: TwoCocycle = None
    cocycle1: tuple = None
    group_generators: list = None
    group_cap: int = None
    potential_text: str = None
    query: str = None

    @property
    def has_lie(self):
        return self.dim is not None

    def lie(self) -> LieAlgebra:
        if not self.has_lie:
            raise ParseError(f"{self.source}: no lie section")
        return new_lie_algebra(self.dim, basis_names=self.basis,
                               constants=self.constants)

    def potential(self):
        if self.potential_text is None:
            raise ParseError(f"{self.source}: no potential section")
        return parse_potential(self.potential_text, self.basis)


def _fail(source, msg):
    raise ParseError(f"{source}: {msg}")


def _parse_scalar(source, text, where) -> Scalar:
    try:
        return as_scalar(text)
    except (ParseError, TypeError, ValueError) as e:
        _fail(source, f"bad scalar {text!r} in {where}: {e}")


def _name_index(source, basis, name, where):
    if name not in basis:
        _fail(source, f"unknown basis name {name!r} in {where}")
    return basis.index(name)


def _parse_pair_list(source, doc, basis, section):
    """Entries {"left": name, "right": name, "value": ...} -> (i, j, value)."""
    if not isinstance(doc, list):
        _fail(source, f"{section} must be a list")
    out = []
    for entry in doc:
        if not isinstance(entry, dict) or not {"left", "right", "value"} <= set(entry):
            _fail(source, f"each {section} entry needs left, right, value")
        i = _name_index(source, basis, entry["left"], section)
        j = _name_index(source, basis, entry["right"], section)
        out.append((i, j, entry["value"]))
    return out


def problem_from_dict(doc, source="<dict>") -> Problem:
    if not isinstance(doc, dict):
        _fail(source, "document must be a JSON object")
    unknown = set(doc) - _SECTIONS
    if unknown:
        _fail(source, f"unknown sections: {sorted(unknown)}")
    p = Problem(source=source, name=doc.get("name", ""),
                comment=doc.get("comment", ""))

    if "lie" in doc:
        lie = doc["lie"]
        if not isinstance(lie, dict) or "dim" not in lie:
            _fail(source, "lie section needs a dim")
        dim = lie["dim"]
        if not isinstance(dim, int) or dim < 0:
            _fail(source, f"bad dimension {dim!r}")
        basis = tuple(lie.get("basis") or (f"x{i+1}" for i in range(dim)))
        if len(basis) != dim or len(set(basis)) != dim:
            _fail(source, "basis must list dim distinct names")
        constants = {}
        for entry in lie.get("brackets", []):
            if not isinstance(entry, dict) or not {"left", "right", "value"} <= set(entry):
                _fail(source, "each bracket entry needs left, right, value")
            i = _name_index(source, basis, entry["left"], "brackets")
            j = _name_index(source, basis, entry["right"], "brackets")
            if i == j:
                _fail(source, f"bracket of {entry['left']!r} with itself")
            if not isinstance(entry["value"], dict):
                _fail(source, "bracket value must map basis names to scalars")
            vec = [as_scalar(0)] * dim
            for nm, sc in entry["value"].items():
                k = _name_index(source, basis, nm, "brackets")
                vec[k] = _parse_scalar(source, sc, "brackets")
            key, val = (i, j), tuple(vec)
            if i > j:
                key, val = (j, i), tuple(-c for c in vec)
            if key in constants:
                _fail(source, f"duplicate bracket for pair {key}")
            constants[key] = val
        p.dim, p.basis, p.constants = dim, basis, constants

    if "cocycle2" in doc:
        if not p.has_lie:
            _fail(source, "cocycle2 requires a lie section")
        vals = {}
        for i, j, sc in _parse_pair_list(source, doc["cocycle2"], p.basis, "cocycle2"):
            if i == j:
                _fail(source, "cocycle2 pairs must be distinct")
            vals[(i, j)] = _parse_scalar(source, sc, "cocycle2")
        try:
            p.cocycle2 = TwoCocycle(p.dim, vals)
        except ValueError as e:
            _fail(source, f"cocycle2: {e}")

    if "cocycle1" in doc:
        if not p.has_lie:
            _fail(source, "cocycle1 requires a lie section")
        if not isinstance(doc["cocycle1"], dict):
            _fail(source, "cocycle1 must map basis names to scalars")
        vec = [as_scalar(0)] * p.dim
        for nm, sc in doc["cocycle1"].items():
            k = _name_index(source, p.basis, nm, "cocycle1")
            vec[k] = _parse_scalar(source, sc, "cocycle1")
        p.cocycle1 = tuple(vec)

    if "group" in doc:
        grp = doc["group"]
        if not isinstance(grp, dict) or "generators" not in grp:
            _fail(source, "group section needs generators")
        gens = []
        for gm in grp["generators"]:
            rows = [tuple(_parse_scalar(source, sc, "group") for sc in row)
                    for row in gm]
            if not rows or any(len(r) != len(rows) for r in rows):
                _fail(source, "group generators must be square matrices")
            gens.append(Matrix.from_rows(rows))
        p.group_generators = gens
        cap = grp.get("cap")
        if cap is not None and (not isinstance(cap, int) or cap < 1):
            _fail(source, f"bad group cap {cap!r}")
        p.group_cap = cap

    if "potential" in doc:
        pot = doc["potential"]
        if not isinstance(pot, dict) or "expression" not in pot:
            _fail(source, "potential section needs an expression")
        if not p.has_lie:
            _fail(source, "potential requires a lie section")
        p.potential_text = pot["expression"]
        try:
            p.potential()
        except ParseError:
            raise
        except Exception as e:
            _fail(source, f"potential does not parse: {e}")

    if "query" in doc:
        if doc["query"] not in QUERIES:
            _fail(source, f"unknown query {doc['query']!r} (choose from {', '.join(QUERIES)})")
        p.query = doc["query"]

    return p


def problem_to_dict(p: Problem) -> dict:
    doc = {}
    if p.name:
        doc["name"] = p.name
    if p.comment:
        doc["comment"] = p.comment
    if p.has_lie:
        brackets = []
        for (i, j), vec in sorted(p.constants.items()):
            value = {p.basis[k]: str(c) for k, c in enumerate(vec) if c}
            if value:
                brackets.append({"left": p.basis[i], "right": p.basis[j],
                                 "value": value})
        doc["lie"] = {"dim": p.dim, "basis": list(p.basis), "brackets": brackets}
    if p.cocycle2 is not None and not p.cocycle2.is_zero:
        doc["cocycle2"] = [{"left": p.basis[i], "right": p.basis[j], "value": str(c)}
                           for (i, j), c in sorted(p.cocycle2.values.items())]
    if p.cocycle1 is not None:
        doc["cocycle1"] = {p.basis[k]: str(c) for k, c in enumerate(p.cocycle1) if c}
    if p.group_generators is not None:
        doc["group"] = {"generators": [[[str(M[i, j]) for j in range(M.cols)]
                                        for i in range(M.rows)]
                                       for M in p.group_generators]}
        if p.group_cap is not None:
            doc["group"]["cap"] = p.group_cap
    if p.potential_text is not None:
        doc["potential"] = {"expression": p.potential_text}
    if p.query is not None:
        doc["query"] = p.query
    return doc


def loads(text, source="<string>") -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        _fail(source, f"invalid JSON: {e}")
    return problem_from_dict(doc, source=source)


def load(path) -> Problem:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return loads(text, source=str(path))


def dump_text(p: Problem) -> str:
    return json.dumps(problem_to_dict(p), indent=2) + "\n"


def catalog_text(name) -> str:
    if name not in CATALOG_NAMES:
        raise ParseError(f"unknown catalog entry {name!r} "
                         f"(choose from {', '.join(CATALOG_NAMES)})")
    return (resources.files("cyalg") / "data" / "catalog" / f"{name}.json").read_text()


def load_catalog(name) -> Problem:
    return loads(catalog_text(name), source=f"catalog:{name}")
