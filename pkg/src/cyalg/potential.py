"""Cyclic potentials and the derivative calculus that recovers defining relations.

A potential lives in the free algebra modulo cyclic permutation of words, so
each term is stored under the lexicographically least rotation of its word.
The cyclic derivative with respect to a generator rotates each occurrence of
that generator to the front and deletes it.  An algebra with relations r_ij is
"defined by the potential" Phi when span{dPhi/dx_i} = span{r_ij} in the free
algebra; both sides have degree at most 2 here, so the comparison is a finite
exact rank computation.
"""

from __future__ import annotations

from .errors import GeneratorMismatch
from .linalg import Matrix, rank_kernel, stack_rows
from .scalar import ZERO, as_scalar
from .sridharan import NCPolynomial, SridharanAlgebra, parse_ncpoly


def least_rotation(word):
    word = tuple(word)
    if len(word) < 2:
        return word
    return min(word[t:] + word[:t] for t in range(len(word)))


class CyclicPotential:
    """Formal sum of cyclic words; every stored word is its own least rotation."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if word != least_rotation(word):
                raise ValueError(f"word {word} is not a canonical rotation")
            coeff = as_scalar(coeff)
            if coeff:
                clean[word] = coeff
        self.terms = clean

    @property
    def is_zero(self):
        return not self.terms

    def max_generator(self):
        return max((max(w) for w in self.terms if w), default=-1)

    def support(self):
        return sorted(self.terms, key=lambda w: (len(w), w))

    def __eq__(self, other):
        if not isinstance(other, CyclicPotential):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"CyclicPotential({self.terms!r})"


def cyclic_reduce(p: NCPolynomial) -> CyclicPotential:
    """Project a free-algebra element onto cyclic words (merge rotations)."""
    acc = {}
    for word, coeff in p.terms.items():
        canon = least_rotation(word)
        acc[canon] = acc.get(canon, ZERO) + coeff
    return CyclicPotential(acc)


def cyclic_derivative(phi: CyclicPotential, g: int) -> NCPolynomial:
    """Rotate each occurrence of generator g to the front and delete it."""
    acc = {}
    for word, coeff in phi.terms.items():
        for t, letter in enumerate(word):
            if letter == g:
                tail = word[t + 1:] + word[:t]
                acc[tail] = acc.get(tail, ZERO) + coeff
    return NCPolynomial(acc)


def parse_potential(text, names) -> CyclicPotential:
    return cyclic_reduce(parse_ncpoly(text, names))


def _span_rank(polys, columns):
    col = {w: i for i, w in enumerate(columns)}
    rows = []
    for p in polys:
        row = [ZERO] * len(columns)
        for w, c in p.terms.items():
            row[col[w]] = c
        rows.append(tuple(row))
    rank, _ = rank_kernel(Matrix.from_rows(rows))
    return rank


def verify_potential(phi: CyclicPotential, A: SridharanAlgebra) -> bool:
    """True iff span{dPhi/dx_i} equals the span of A's defining relations."""
    if phi.max_generator() >= A.dim:
        raise GeneratorMismatch(
            f"potential uses generator index {phi.max_generator()}, algebra has dimension {A.dim}")
    derivatives = [cyclic_derivative(phi, g) for g in range(A.dim)]
    relations = A.relations()
    support = set()
    for p in derivatives + relations:
        support.update(p.terms)
    columns = sorted(support, key=lambda w: (len(w), w))
    rank_d = _span_rank(derivatives, columns)
    rank_r = _span_rank(relations, columns)
    rank_union = _span_rank(derivatives + relations, columns)
    return rank_d == rank_r == rank_union
