"""Exception types and the witness-carrying check result."""

from dataclasses import dataclass
from typing import Any, Optional


class CyalgError(Exception):
    """Base class for all library errors."""


class ParseError(CyalgError):
    pass


class DivisionByZero(CyalgError, ZeroDivisionError):
    pass


class NotSquare(CyalgError):
    pass


class DimensionMismatch(CyalgError):
    pass


class NotInvertible(CyalgError):
    pass


class JacobiViolation(CyalgError):
    """Carries the offending basis triple and the nonzero residual vector."""

    def __init__(self, triple, residual, message=None):
        self.triple = triple
        self.residual = residual
        super().__init__(message or f"Jacobi identity fails on basis triple {triple}: residual {residual}")


class NotDimensionThree(CyalgError):
    pass


class NotCYForm(CyalgError):
    """Structure constants violate the sextuple constraints k11=k33, k12=-k23, k21=-k32."""

    def __init__(self, constraint, values, message=None):
        self.constraint = constraint
        self.values = values
        super().__init__(message or f"constraint {constraint} fails: {values[0]} vs {values[1]}")


class NotUnimodular(CyalgError):
    """Carries (basis index, nonzero adjoint trace)."""

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"nonzero adjoint trace at basis index {witness[0]}: trace {witness[1]}")


class CocycleInvalid(CyalgError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"2-cocycle identity fails on triple {witness[:3]}: residual {witness[3]}")


class InvalidOneCocycle(CyalgError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"functional does not vanish on bracket of pair {witness[:2]}: value {witness[2]}")


class ConfluenceFailure(CyalgError):
    pass


class GeneratorMismatch(CyalgError):
    pass


class OrderExceedsCap(CyalgError):
    pass


class NotLieAction(CyalgError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"generator {witness[0]} does not preserve the bracket on pair {witness[1]}")


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus a witness describing the first failure, if any."""

    ok: bool
    witness: Optional[Any] = None

    def __bool__(self):
        return self.ok
