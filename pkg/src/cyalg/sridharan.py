"""Sridharan enveloping algebras: cocycles, PBW rewriting, and automorphisms.

U_f(g) is the free algebra on the basis of g modulo

    x_i x_j - x_j x_i = [x_i, x_j] + f(x_i, x_j),

with f a 2-cocycle.  Rewriting swaps adjacent out-of-order generator pairs
(x_j x_i -> x_i x_j - [x_i,x_j] - f(x_i,x_j) for j > i) under the
degree-then-lexicographic order, so every element has a unique normal form
supported on sorted words.  Confluence of the overlap words x_k x_j x_i
(k > j > i) is certified at construction; it is a consequence of the Jacobi
and cocycle identities, but verified anyway.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (CheckResult, CocycleInvalid, ConfluenceFailure,
                     DimensionMismatch, InvalidOneCocycle, ParseError)
from .homology import CYReport, is_cy_universal
from .lie import LieAlgebra, adjoint_trace
from .linalg import Matrix, invert
from .scalar import ONE, ZERO, Scalar, as_scalar


class NCPolynomial:
    """Element of the free algebra: mapping from words (index tuples) to Scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            coeff = as_scalar(coeff)
            if coeff:
                clean[tuple(word)] = coeff
        self.terms = clean

    @classmethod
    def generator(cls, i):
        return cls({(i,): ONE})

    @classmethod
    def constant(cls, c):
        return cls({(): as_scalar(c)})

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def coefficient(self, word) -> Scalar:
        return self.terms.get(tuple(word), ZERO)

    def support(self):
        return sorted(self.terms, key=lambda w: (len(w), w))

    def __add__(self, other):
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return NCPolynomial(out)

    def __neg__(self):
        return NCPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, ZERO) + c1 * c2
            return NCPolynomial(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s):
        s = as_scalar(s)
        return NCPolynomial({w: s * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"NCPolynomial({self.terms!r})"


class TwoCocycle:
    """Antisymmetric bilinear form on basis pairs, f(x_i, x_j) for i < j."""

    def __init__(self, dim, values=None):
        self.dim = dim
        vals = {}
        for (i, j), c in (values or {}).items():
            c = as_scalar(c)
            if i == j:
                if c:
                    raise ValueError("f(x, x) must vanish")
                continue
            if i > j:
                i, j, c = j, i, -c
            if not (0 <= i < j < dim):
                raise ValueError(f"pair ({i},{j}) out of range")
            if (i, j) in vals:
                raise ValueError(f"duplicate cocycle value for pair ({i},{j})")
            if c:
                vals[(i, j)] = c
        self.values = vals

    @classmethod
    def zero(cls, dim):
        return cls(dim, {})

    def __call__(self, i, j) -> Scalar:
        if i == j:
            return ZERO
        if i < j:
            return self.values.get((i, j), ZERO)
        c = self.values.get((j, i), ZERO)
        return -c

    def against_vector(self, i, vec) -> Scalar:
        """f(x_i, v) for a coefficient vector v, by bilinearity."""
        total = ZERO
        for m, c in enumerate(vec):
            if c:
                total = total + c * self(i, m)
        return total

    @property
    def is_zero(self):
        return not self.values

    def __eq__(self, other):
        if not isinstance(other, TwoCocycle):
            return NotImplemented
        return self.dim == other.dim and self.values == other.values

    def __repr__(self):
        return f"TwoCocycle(dim={self.dim}, {self.values!r})"


@dataclass(frozen=True)
class OneCocycle:
    """Linear functional on g, as the tuple of values h(x_i)."""

    values: tuple

    @classmethod
    def of(cls, values):
        return cls(tuple(as_scalar(v) for v in values))


def check_two_cocycle(L: LieAlgebra, f: TwoCocycle) -> CheckResult:
    """Cocycle identity f(x,[y,z]) + f(y,[z,x]) + f(z,[x,y]) = 0 on basis triples."""
    if f.dim != L.dim:
        raise DimensionMismatch(f"cocycle dimension {f.dim} vs algebra dimension {L.dim}")
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                residual = (f.against_vector(i, L.bracket_basis(j, k))
                            + f.against_vector(j, L.bracket_basis(k, i))
                            + f.against_vector(k, L.bracket_basis(i, j)))
                if residual:
                    return CheckResult(False, (i, j, k, residual))
    return CheckResult(True)


class SridharanAlgebra:
    """U_f(g) with a confluent rewriting system to the PBW normal form."""

    def __init__(self, lie: LieAlgebra, cocycle: TwoCocycle, name=""):
        self.lie = lie
        self.cocycle = cocycle
        self.name = name
        self._nf_cache = {}

    @property
    def dim(self):
        return self.lie.dim

    def generators(self):
        return [NCPolynomial.generator(i) for i in range(self.dim)]

    def relation(self, i, j) -> NCPolynomial:
        """x_i x_j - x_j x_i - [x_i, x_j] - f(x_i, x_j), for i < j."""
        terms = {(i, j): ONE, (j, i): -ONE}
        for k, c in enumerate(self.lie.bracket_basis(i, j)):
            if c:
                terms[(k,)] = terms.get((k,), ZERO) - c
        fv = self.cocycle(i, j)
        if fv:
            terms[()] = -fv
        return NCPolynomial(terms)

    def relations(self):
        return [self.relation(i, j) for i in range(self.dim) for j in range(i + 1, self.dim)]

    def normal_form(self, p: NCPolynomial) -> NCPolynomial:
        return normal_form(self, p)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"SridharanAlgebra(dim={self.dim}{tag}, cocycle={'0' if self.cocycle.is_zero else self.cocycle.values})"


def _rewrite_once(A: SridharanAlgebra, word, t):
    """One rewriting step at position t, where word[t] > word[t+1]."""
    a, b = word[t], word[t + 1]
    head, tail = word[:t], word[t + 2:]
    out = {head + (b, a) + tail: ONE}
    for k, c in enumerate(A.lie.bracket_basis(b, a)):
        if c:
            w = head + (k,) + tail
            out[w] = out.get(w, ZERO) - c
    fv = A.cocycle(b, a)
    if fv:
        w = head + tail
        out[w] = out.get(w, ZERO) - fv
    return out


def _first_inversion(word):
    for t in range(len(word) - 1):
        if word[t] > word[t + 1]:
            return t
    return None


def _reduce_word(A: SridharanAlgebra, word):
    """Normal form of a single word as a dict, memoized on the algebra."""
    cached = A._nf_cache.get(word)
    if cached is not None:
        return cached
    t = _first_inversion(word)
    if t is None:
        result = {word: ONE}
    else:
        acc = {}
        for w, c in _rewrite_once(A, word, t).items():
            for w2, c2 in _reduce_word(A, w).items():
                acc[w2] = acc.get(w2, ZERO) + c * c2
        result = {w: c for w, c in acc.items() if c}
    A._nf_cache[word] = result
    return result


def normal_form(A: SridharanAlgebra, p: NCPolynomial) -> NCPolynomial:
    """Unique representative supported on nondecreasing (PBW) words."""
    acc = {}
    for word, coeff in p.terms.items():
        for w, c in _reduce_word(A, word).items():
            acc[w] = acc.get(w, ZERO) + coeff * c
    return NCPolynomial(acc)


def _certify_confluence(A: SridharanAlgebra):
    """Resolve every overlap word x_k x_j x_i (k > j > i) along both reduction paths."""
    d = A.dim
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                word = (k, j, i)
                results = []
                for pos in (0, 1):
                    acc = {}
                    for w, c in _rewrite_once(A, word, pos).items():
                        for w2, c2 in _reduce_word(A, w).items():
                            acc[w2] = acc.get(w2, ZERO) + c * c2
                    results.append({w: c for w, c in acc.items() if c})
                if results[0] != results[1]:
                    raise ConfluenceFailure(
                        f"overlap {word} resolves differently: {results[0]} vs {results[1]}")


def build_sridharan(L: LieAlgebra, f: TwoCocycle = None, name="") -> SridharanAlgebra:
    """Validate the cocycle, construct, and certify confluence of the rewriting."""
    if f is None:
        f = TwoCocycle.zero(L.dim)
    chk = check_two_cocycle(L, f)
    if not chk:
        raise CocycleInvalid(chk.witness)
    A = SridharanAlgebra(L, f, name=name)
    _certify_confluence(A)
    return A


def is_cy_sridharan(L: LieAlgebra, f: TwoCocycle) -> CYReport:
    """The deformation by f never changes the Calabi-Yau verdict of U(g)."""
    if f is None:
        f = TwoCocycle.zero(L.dim)
    chk = check_two_cocycle(L, f)
    if not chk:
        raise CocycleInvalid(chk.witness)
    base = is_cy_universal(L)
    note = ("two-cocycle validated; the verdict depends only on the Lie algebra",)
    return CYReport(base.verdict, base.dimension, base.routes, base.witness, base.notes + note)


@dataclass
class Endomorphism:
    """Affine map on generators (x_j -> sum_k linear[k][j] x_k + shift[j]), extended multiplicatively."""

    algebra: SridharanAlgebra
    linear: Matrix
    shift: tuple

    def image(self, i) -> NCPolynomial:
        terms = {}
        for k in range(self.algebra.dim):
            c = self.linear[k, i]
            if c:
                terms[(k,)] = c
        if self.shift[i]:
            terms[()] = self.shift[i]
        return NCPolynomial(terms)

    def apply(self, p: NCPolynomial) -> NCPolynomial:
        out = NCPolynomial()
        for word, coeff in p.terms.items():
            prod = NCPolynomial.constant(coeff)
            for i in word:
                prod = prod * self.image(i)
            out = out + prod
        return normal_form(self.algebra, out)

    def is_identity(self) -> bool:
        return self.linear == Matrix.identity(self.algebra.dim) and not any(self.shift)

    def inverse(self) -> "Endomorphism":
        inv = invert(self.linear)
        # solving phi(psi(x_j)) = x_j gives shift t = -(A^{-1})^T s
        new_shift = inv.transpose().apply(tuple(-s for s in self.shift))
        return Endomorphism(self.algebra, inv, new_shift)

    def preserves_relations(self) -> bool:
        return all(self.apply(r).is_zero for r in self.algebra.relations())


def xi_automorphism(A: SridharanAlgebra, h) -> Endomorphism:
    """x_i -> x_i + h(x_i) for a functional h vanishing on [g, g]."""
    values = h.values if isinstance(h, OneCocycle) else tuple(as_scalar(v) for v in h)
    if len(values) != A.dim:
        raise DimensionMismatch(f"functional has {len(values)} values, dimension is {A.dim}")
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            val = ZERO
            for k, c in enumerate(A.lie.bracket_basis(i, j)):
                if c:
                    val = val + c * values[k]
            if val:
                raise InvalidOneCocycle((i, j, val))
    endo = Endomorphism(A, Matrix.identity(A.dim), values)
    if not endo.preserves_relations():
        raise RuntimeError("translation by a 1-cocycle failed to preserve relations (internal defect)")
    return endo


def zeta_dualizing_automorphism(A: SridharanAlgebra) -> Endomorphism:
    """x_i -> x_i - trace(ad x_i); the identity exactly on unimodular algebras."""
    shifts = tuple(-adjoint_trace(A.lie, i) for i in range(A.dim))
    # adjoint traces vanish on brackets, so this is always a valid 1-cocycle
    return xi_automorphism(A, shifts)


def catalog():
    """The seven named 3-dimensional presentations, loaded from packaged data."""
    from .problemfile import CATALOG_CASE_NAMES, load_catalog

    out = []
    for name in CATALOG_CASE_NAMES:
        problem = load_catalog(name)
        L = problem.lie()
        f = problem.cocycle2 if problem.cocycle2 is not None else TwoCocycle.zero(L.dim)
        out.append(build_sridharan(L, f, name=name))
    return out


# -- text grammar ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<paren>\([^()]*\))|(?P<op>[+\-*^]))")


def _tokenize(text):
    s = str(text).replace("−", "-").replace("–", "-")
    pos = 0
    tokens = []
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m or m.end() == pos:
            rest = s[pos:].strip()
            if not rest:
                break
            raise ParseError(f"cannot tokenize {rest!r}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        elif m.group("paren"):
            tokens.append(("scalar", m.group("paren")[1:-1]))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


def parse_ncpoly(text, names) -> NCPolynomial:
    """Parse expressions like "3/2*x*y*z - z + 1" over the given generator names."""
    index = {nm: i for i, nm in enumerate(names)}
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    result = {}
    pos = 0

    def parse_factor(p):
        kind, val = tokens[p]
        if kind == "num":
            return Scalar.parse(val), (), p + 1
        if kind == "scalar":
            return Scalar.parse(val), (), p + 1
        if kind == "name":
            if val not in index:
                raise ParseError(f"unknown generator {val!r}")
            word = (index[val],)
            p += 1
            if p < len(tokens) and tokens[p] == ("op", "^"):
                p += 1
                if p >= len(tokens) or tokens[p][0] != "num" or "/" in tokens[p][1]:
                    raise ParseError("power must be a nonnegative integer")
                word = word * int(tokens[p][1])
                p += 1
            return ONE, word, p
        raise ParseError(f"unexpected token {val!r}")

    while pos < len(tokens):
        sign = ONE
        while pos < len(tokens) and tokens[pos][0] == "op" and tokens[pos][1] in "+-":
            if tokens[pos][1] == "-":
                sign = -sign
            pos += 1
        if pos >= len(tokens):
            raise ParseError("dangling sign")
        coeff, word, pos = parse_factor(pos)
        while pos < len(tokens) and tokens[pos] == ("op", "*"):
            pos += 1
            if pos >= len(tokens):
                raise ParseError("dangling '*'")
            c2, w2, pos = parse_factor(pos)
            coeff = coeff * c2
            word = word + w2
        coeff = sign * coeff
        result[word] = result.get(word, ZERO) + coeff
    return NCPolynomial(result)


def format_ncpoly(p: NCPolynomial, names) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for word in p.support():
        c = p.terms[word]
        body = "*".join(names[i] for i in word)
        cs = str(c)
        negative = cs.startswith("-") and "@" not in cs
        if negative:
            cs = cs[1:]
        if "@" in cs:
            cs = f"({cs})"
            negative = False
        if word and cs == "1":
            text = body
        elif word:
            text = f"{cs}*{body}"
        else:
            text = cs
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f" - {text}" if negative else f" + {text}")
    return "".join(parts)
