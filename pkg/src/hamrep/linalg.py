"""Exact dense linear algebra over Q.

Matrices are tuples of row tuples of Fractions so that they are immutable,
hashable and compare structurally. Vectors are tuples of Fractions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import DimensionError, rational

Vector = tuple
Matrix = tuple

ZERO = Fraction(0)
ONE = Fraction(1)


def vector(entries: Iterable) -> Vector:
    return tuple(rational(x) for x in entries)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(vector(row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise DimensionError("ragged matrix")
    return out


def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return tuple((ZERO,) * cols for _ in range(rows))


def identity(d: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d))


def unit_matrix(d: int, a: int, b: int) -> Matrix:
    """E_{ab} with 1-based (a, b)."""
    return tuple(
        tuple(ONE if (i, j) == (a - 1, b - 1) else ZERO for j in range(d)) for i in range(d)
    )


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def _check_same_shape(a: Matrix, b: Matrix) -> None:
    if shape(a) != shape(b):
        raise DimensionError(f"shape mismatch {shape(a)} vs {shape(b)}")


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    _check_same_shape(a, b)
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    _check_same_shape(a, b)
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = rational(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_sum(terms: Iterable[Matrix], d: int) -> Matrix:
    acc = [[ZERO] * d for _ in range(d)]
    for t in terms:
        for i, row in enumerate(t):
            acc_row = acc[i]
            for j, x in enumerate(row):
                if x:
                    acc_row[j] += x
    return tuple(tuple(row) for row in acc)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    cols = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in cols)
        for row in a
    )


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(matmul(a, b), matmul(b, a))


def matvec(a: Matrix, v: Vector) -> Vector:
    if shape(a)[1] != len(v):
        raise DimensionError(f"cannot apply {shape(a)} matrix to length {len(v)}")
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def block_diag(*blocks: Matrix) -> Matrix:
    d = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        k = len(b)
        for row in b:
            rows.append((ZERO,) * offset + tuple(row) + (ZERO,) * (d - offset - k))
        offset += k
    return tuple(rows)


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch {len(u)} vs {len(v)}")
    return tuple(x + y for x, y in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def is_zero_vec(v: Vector) -> bool:
    return all(x == 0 for x in v)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [[rational(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : A x = 0}, one vector per free column."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One solution of A x = b, or None if inconsistent."""
    ncols = shape(a)[1]
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(a: Matrix) -> Matrix:
    d = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(d))]
    reduced, pivots = rref(aug)
    if pivots[:d] != list(range(d)) or len(reduced) < d:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[d:]) for row in reduced)


class EchelonBasis:
    """Incrementally maintained basis of a subspace of Q^n.

    Rows are kept sparse (dict column -> value) and reduced against each
    other's pivots, so membership tests and insertions are exact.
    """

    def __init__(self, n: int):
        self.n = n
        self._rows: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence) -> dict[int, Fraction]:
        w = {i: rational(x) for i, x in enumerate(v) if x}
        for p in sorted(self._rows):
            c = w.get(p)
            if c:
                for j, y in self._rows[p].items():
                    nv = w.get(j, ZERO) - c * y
                    if nv:
                        w[j] = nv
                    else:
                        w.pop(j, None)
        return w

    def contains(self, v: Sequence) -> bool:
        return not self.reduce(v)

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        if len(v) != self.n:
            raise DimensionError(f"expected length {self.n}, got {len(v)}")
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = 1 / w[p]
        w = {j: y * inv for j, y in w.items()}
        for q, row in self._rows.items():
            c = row.get(p)
            if c:
                for j, y in w.items():
                    nv = row.get(j, ZERO) - c * y
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
        self._rows[p] = w
        return True

    def basis(self) -> list[Vector]:
        return [
            tuple(self._rows[p].get(j, ZERO) for j in range(self.n)) for p in sorted(self._rows)
        ]
