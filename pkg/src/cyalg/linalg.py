"""Dense exact linear algebra over Scalar.

Row reduction is plain Gauss-Jordan over the field; the determinant uses
Bareiss-style fraction-free elimination.  Kernel bases come out of the reduced
echelon form, so they are canonical and golden tests can compare exactly.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NotInvertible, NotSquare
from .scalar import ONE, ZERO, Scalar, as_scalar

Vector = tuple


class Matrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        data = tuple(as_scalar(x) for x in data)
        if len(data) != rows * cols:
            raise DimensionMismatch(f"need {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(nr, nc, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r * self.cols + c]

    def row(self, i) -> Vector:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def col(self, j) -> Vector:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = ri[k]
                    if a:
                        acc = acc + a * other.data[k * other.cols + j]
                out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def apply(self, v) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector length {len(v)} vs {self.cols} columns")
        v = [as_scalar(x) for x in v]
        out = []
        for i in range(self.rows):
            acc = ZERO
            ri = self.row(i)
            for k, x in enumerate(v):
                if x:
                    acc = acc + ri[k] * x
            out.append(acc)
        return tuple(out)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.data])

    def scale(self, s) -> "Matrix":
        s = as_scalar(s)
        return Matrix(self.rows, self.cols, [s * a for a in self.data])

    def is_zero(self) -> bool:
        return all(x.is_zero for x in self.data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def _rref(M: Matrix):
    """Reduced row echelon form as a list of row lists, plus pivot columns."""
    rows = [list(M.row(i)) for i in range(M.rows)]
    pivots = []
    r = 0
    for c in range(M.cols):
        if r == M.rows:
            break
        sel = next((i for i in range(r, M.rows) if rows[i][c]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(M.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, tuple(pivots)


def rank_kernel(M: Matrix):
    """Rank and the canonical reduced-echelon kernel basis (one vector per free column)."""
    rows, pivots = _rref(M)
    pivot_set = set(pivots)
    kernel = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * M.cols
        v[free] = ONE
        for ridx, pc in enumerate(pivots):
            v[pc] = -rows[ridx][free]
        kernel.append(tuple(v))
    return len(pivots), kernel


def determinant(M: Matrix) -> Scalar:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not M.is_square():
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no determinant")
    n = M.rows
    if n == 0:
        return ONE
    a = [list(M.row(i)) for i in range(n)]
    sign = ONE
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero:
            sel = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sel is None:
                return ZERO
            a[k], a[sel] = a[sel], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = ZERO
        prev = pivot
    return sign * a[n - 1][n - 1]


def invert(M: Matrix) -> Matrix:
    if not M.is_square():
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no inverse")
    n = M.rows
    aug = Matrix(n, 2 * n, [x for i in range(n) for x in (list(M.row(i)) + list(Matrix.identity(n).row(i)))])
    rows, pivots = _rref(aug)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise NotInvertible(f"rank {sum(1 for p in pivots if p < n)} < {n}")
    return Matrix(n, n, [rows[i][n + j] for i in range(n) for j in range(n)])


def stack_rows(matrices) -> Matrix:
    cols = matrices[0].cols
    if any(m.cols != cols for m in matrices):
        raise DimensionMismatch("column counts differ")
    data = [x for m in matrices for x in m.data]
    return Matrix(sum(m.rows for m in matrices), cols, data)


def fixed_space(Ms, weights):
    """Canonical basis of the simultaneous eigenspace: all v with M_g v = weight_g v."""
    Ms = list(Ms)
    weights = [as_scalar(w) for w in weights]
    if not Ms:
        raise DimensionMismatch("need at least one matrix")
    if len(Ms) != len(weights):
        raise DimensionMismatch("weights not aligned with matrices")
    n = Ms[0].rows
    for M in Ms:
        if not M.is_square():
            raise NotSquare("fixed_space needs square matrices")
        if M.rows != n:
            raise DimensionMismatch("matrices of unequal size")
    blocks = [M - Matrix.identity(n).scale(w) for M, w in zip(Ms, weights)]
    _, kernel = rank_kernel(stack_rows(blocks))
    return kernel
