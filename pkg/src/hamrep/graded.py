"""Polynomial Hamiltonian vector fields X(r), their grading, and sp_N.

``X(r) = sum_i r_{m+i} x^{r-e_{m+i}} d/dx_i - r_i x^{r-e_i} d/dx_{m+i}`` for
r in Z_{>=0}^N, with bracket

    [X(r), X(s)] = sum_i (r_{m+i} s_i - r_i s_{m+i}) X(r + s - e_i - e_{m+i}).

The component L_n is spanned by X(r) with |r| = n + 2. L_0 is identified
with sp_N through linear vector fields ``x_a d/dx_b``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from . import exact, linalg
from .exact import DimensionError
from .linalg import EchelonBasis, Matrix
from .report import Report


class PolyField:
    """Finite rational combination of X(r), r >= 0, with X(0) dropped."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping = ()):
        if m < 1:
            raise ValueError(f"m must be positive, got {m}")
        out: dict[tuple, Fraction] = {}
        for r, c in dict(terms).items():
            r = exact.nonneg_index(r, 2 * m)
            c = exact.rational(c)
            if c and any(r):
                out[r] = out.get(r, 0) + c
        self.m = m
        self.terms = {r: c for r, c in out.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(r) for r in self.terms}

    def __add__(self, other: "PolyField") -> "PolyField":
        if self.m != other.m:
            raise DimensionError(f"m mismatch: {self.m} vs {other.m}")
        t = dict(self.terms)
        for r, c in other.terms.items():
            t[r] = t.get(r, 0) + c
        return PolyField(self.m, t)

    def __neg__(self) -> "PolyField":
        return PolyField(self.m, {r: -c for r, c in self.terms.items()})

    def __sub__(self, other: "PolyField") -> "PolyField":
        return self + (-other)

    def __mul__(self, c) -> "PolyField":
        c = exact.rational(c)
        return PolyField(self.m, {r: c * x for r, x in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyField):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*X{r}" for r, c in sorted(self.terms.items())) or "0"
        return f"PolyField(m={self.m}: {body})"


def X(r) -> PolyField:
    r = exact.nonneg_index(r)
    return PolyField(len(r) // 2, {r: 1})


def x_bracket(a: PolyField, b: PolyField) -> PolyField:
    if a.m != b.m:
        raise DimensionError(f"m mismatch: {a.m} vs {b.m}")
    m = a.m
    out: dict[tuple, Fraction] = {}
    for r, ca in a.terms.items():
        for s, cb in b.terms.items():
            for i in range(m):
                w = r[m + i] * s[i] - r[i] * s[m + i]
                if not w:
                    continue
                key = list(exact.add(r, s))
                key[i] -= 1
                key[m + i] -= 1
                # a nonzero coefficient forces both shifted entries >= 0
                assert min(key) >= 0, (r, s, i)
                key = tuple(key)
                out[key] = out.get(key, 0) + ca * cb * w
    return PolyField(m, out)


def grade_component(m: int, n: int) -> list[tuple]:
    """Indices r >= 0 with |r| = n + 2, in lexicographic order."""
    if n < -1:
        raise ValueError(f"grade must be >= -1, got {n}")
    return exact.compositions(n + 2, 2 * m)


def grade_dimension(m: int, n: int) -> int:
    return comb(n + 2 * m + 1, 2 * m - 1)


def coordinates(v: PolyField, basis: list[tuple]) -> tuple:
    pos = {r: i for i, r in enumerate(basis)}
    out = [Fraction(0)] * len(basis)
    for r, c in v.terms.items():
        if r not in pos:
            raise ValueError(f"X{r} is outside the given component")
        out[pos[r]] = c
    return tuple(out)


def from_coordinates(m: int, coords: Iterable, basis: list[tuple]) -> PolyField:
    return PolyField(m, dict(zip(basis, coords)))


def cartan_weight(r) -> tuple:
    """Eigenvalues of ad X(e_i + e_{m+i}) on X(r): (r_i - r_{m+i})_i."""
    m = len(r) // 2
    return tuple(r[i] - r[m + i] for i in range(m))


# -- L_0 and sp_N ---------------------------------------------------------


def vector_field(r) -> dict[tuple, Fraction]:
    """Expand X(r) as sum c * x^a d/dx_b; keys (a, b) with b 1-based."""
    r = tuple(r)
    m = len(r) // 2
    out: dict[tuple, Fraction] = {}
    for i in range(m):
        if r[m + i]:
            a = list(r)
            a[m + i] -= 1
            key = (tuple(a), i + 1)
            out[key] = out.get(key, 0) + r[m + i]
        if r[i]:
            a = list(r)
            a[i] -= 1
            key = (tuple(a), m + i + 1)
            out[key] = out.get(key, 0) - r[i]
    return {k: Fraction(c) for k, c in out.items() if c}


def _linear_field(v: PolyField) -> dict[tuple[int, int], Fraction]:
    """Coefficients of x_a d/dx_b (1-based a, b) in an element of L_0."""
    if v.degrees() - {2}:
        raise ValueError(f"{v!r} is not in L_0")
    out: dict[tuple[int, int], Fraction] = {}
    for r, c in v.terms.items():
        for (a, b), coef in vector_field(r).items():
            key = (a.index(1) + 1, b)
            out[key] = out.get(key, 0) + c * coef
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def sp_basis(m: int) -> tuple[tuple[str, dict, Matrix], ...]:
    """The three families identifying L_0 with sp_N.

    Each entry is (label, linear vector field as {(a, b): coeff}, matrix).
    The field ``x_a d/dx_b`` is identified with ``E_{a,b}`` inside each family.
    """
    n = 2 * m
    E = lambda a, b: linalg.unit_matrix(n, a, b)  # noqa: E731
    out = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            field = _combine({(i, j): 1}, {(m + j, m + i): -1})
            out.append((f"E[{i},{j}]-E[{m + j},{m + i}]", field, linalg.mat_sub(E(i, j), E(m + j, m + i))))
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            field = _combine({(i, m + j): 1}, {(j, m + i): 1})
            out.append((f"E[{i},{m + j}]+E[{j},{m + i}]", field, linalg.mat_add(E(i, m + j), E(j, m + i))))
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            field = _combine({(m + i, j): 1}, {(m + j, i): 1})
            out.append((f"E[{m + i},{j}]+E[{m + j},{i}]", field, linalg.mat_add(E(m + i, j), E(m + j, i))))
    return tuple(out)


def sp_labels(m: int) -> list[str]:
    return [label for label, _, _ in sp_basis(m)]


def _combine(*parts: dict) -> dict:
    out: dict = {}
    for p in parts:
        for k, c in p.items():
            out[k] = out.get(k, 0) + Fraction(c)
    return {k: c for k, c in out.items() if c}


def _field_columns(m: int) -> list[tuple[int, int]]:
    n = 2 * m
    return [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]


def sp_coefficients_of_field(m: int, field: dict) -> tuple:
    """Coordinates of a linear vector field in the sp_basis families."""
    cols = _field_columns(m)
    basis = sp_basis(m)
    a = tuple(tuple(f.get(col, Fraction(0)) for _, f, _ in basis) for col in cols)
    b = tuple(field.get(col, Fraction(0)) for col in cols)
    x = linalg.solve(a, b)
    if x is None:
        raise ValueError("linear vector field is not Hamiltonian (not in L_0)")
    return x


def sp_coefficients_of_matrix(m: int, mat: Matrix) -> tuple:
    """Coordinates of a matrix in the sp_basis matrices; raises if not in sp_N."""
    n = 2 * m
    if linalg.shape(mat) != (n, n):
        raise DimensionError(f"expected {n}x{n} matrix")
    basis = sp_basis(m)
    cells = [(a, b) for a in range(n) for b in range(n)]
    a = tuple(tuple(B[i][j] for _, _, B in basis) for i, j in cells)
    b = tuple(mat[i][j] for i, j in cells)
    x = linalg.solve(a, b)
    if x is None:
        raise ValueError("matrix is not in sp_N")
    return x


def sp_iso(v: PolyField) -> Matrix:
    """L_0 -> sp_N. Expands ``v`` into the three operator families, then maps
    each family member to its matrix."""
    m = v.m
    coeffs = sp_coefficients_of_field(m, _linear_field(v))
    return linalg.mat_sum(
        (linalg.mat_scale(c, B) for c, (_, _, B) in zip(coeffs, sp_basis(m)) if c), 2 * m
    )


def sp_iso_inverse(m: int, mat: Matrix) -> PolyField:
    """sp_N -> L_0, inverse of :func:`sp_iso`."""
    coeffs = sp_coefficients_of_matrix(m, mat)
    field = _combine(*({k: c * x for k, x in f.items()} for c, (_, f, _) in zip(coeffs, sp_basis(m)) if c))
    basis = grade_component(m, 0)
    cols = _field_columns(m)
    images = [_linear_field(X(r)) for r in basis]
    a = tuple(tuple(img.get(col, Fraction(0)) for img in images) for col in cols)
    b = tuple(field.get(col, Fraction(0)) for col in cols)
    x = linalg.solve(a, b)
    if x is None:  # pragma: no cover - sp_basis fields all lie in L_0
        raise ValueError("matrix has no preimage in L_0")
    return from_coordinates(m, x, basis)


def raising_operators(m: int) -> list[tuple[str, PolyField]]:
    """Preimages in L_0 of the positive root vectors
    E_{i,m+i}, E_{i,j} - E_{m+j,m+i}, E_{i,m+j} + E_{j,m+i} (i < j)."""
    n = 2 * m
    E = lambda a, b: linalg.unit_matrix(n, a, b)  # noqa: E731
    ops = []
    for i in range(1, m + 1):
        ops.append((f"E[{i},{m + i}]", sp_iso_inverse(m, E(i, m + i))))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            ops.append((f"E[{i},{j}]-E[{m + j},{m + i}]", sp_iso_inverse(m, linalg.mat_sub(E(i, j), E(m + j, m + i)))))
            ops.append((f"E[{i},{m + j}]+E[{j},{m + i}]", sp_iso_inverse(m, linalg.mat_add(E(i, m + j), E(j, m + i)))))
    return ops


def ad_matrix(op: PolyField, source: list[tuple], target: list[tuple]) -> list[list[Fraction]]:
    """Matrix of ad(op) from span X(source) to span X(target)."""
    cols = [coordinates(x_bracket(op, X(r)), target) for r in source]
    return [list(row) for row in zip(*cols)] if cols else []


def highest_weight_vectors(m: int, n: int) -> list[PolyField]:
    """Basis of the joint kernel of ad(raising operators) on L_n.

    Raising operators shift weights, so the kernel is computed one weight
    space at a time.
    """
    if n < 0:
        raise ValueError(f"grade must be >= 0, got {n}")
    component = grade_component(m, n)
    by_weight: dict[tuple, list[tuple]] = {}
    for r in component:
        by_weight.setdefault(cartan_weight(r), []).append(r)
    ops = [op for _, op in raising_operators(m)]
    out = []
    for weight in sorted(by_weight):
        space = by_weight[weight]
        rows: list[list[Fraction]] = []
        for op in ops:
            rows.extend(ad_matrix(op, space, component))
        for vec in linalg.nullspace(rows, len(space)):
            out.append(from_coordinates(m, vec, space))
    return out


GUARD = 5000


def verify_irreducible_component(m: int, n: int, guard: int = GUARD) -> Report:
    """Close X((n+2) e_1) under ad(L_0) and compare with dim L_n."""
    if n < 0:
        raise ValueError(f"grade must be >= 0, got {n}")
    expected = grade_dimension(m, n)
    if expected > guard:
        raise OverflowError(f"dim L_{n} = {expected} exceeds guard {guard}")
    component = grade_component(m, n)
    assert len(component) == expected
    l0 = [X(r) for r in grade_component(m, 0)]
    span = EchelonBasis(expected)
    start = X(exact.scale(n + 2, exact.unit(2 * m, 1)))
    span.add(coordinates(start, component))
    frontier = [start]
    passes = 0
    while frontier and passes <= expected + 1:
        passes += 1
        fresh = []
        for v in frontier:
            for op in l0:
                w = x_bracket(op, v)
                if not w.is_zero() and span.add(coordinates(w, component)):
                    fresh.append(w)
        frontier = fresh
    report = Report("irreducible-component", info={"m": m, "n": n})
    report.add("span-dimension", len(span) == expected, None if len(span) == expected else len(span),
               reached=len(span), expected=expected, passes=passes)
    hwv = highest_weight_vectors(m, n)
    report.add("highest-weight-rank", len(hwv) == 1, None if len(hwv) == 1 else [repr(v) for v in hwv],
               rank=len(hwv))
    ok = len(hwv) == 1 and set(hwv[0].terms) == {start_key(m, n)}
    report.add("highest-weight-is-X((n+2)e_1)", ok, None if ok else [repr(v) for v in hwv])
    return report


def start_key(m: int, n: int) -> tuple:
    return exact.scale(n + 2, exact.unit(2 * m, 1))


def verify_grading(m: int, max_grade: int = 2) -> Report:
    """[L_a, L_b] lands in L_{a+b} for all basis pairs with a, b <= max_grade."""
    report = Report("grading", info={"m": m})
    bad = None
    for a in range(-1, max_grade + 1):
        for b in range(a, max_grade + 1):
            for r in grade_component(m, a):
                for s in grade_component(m, b):
                    out = x_bracket(X(r), X(s))
                    if out.degrees() - {a + b + 2}:
                        bad = bad or [list(r), list(s)]
    report.add("grading", bad is None, bad, max_grade=max_grade)
    return report


def verify_sp_transport(m: int) -> Report:
    """sp_iso([u, v]) == [sp_iso(u), sp_iso(v)] for all L_0 basis pairs."""
    report = Report("sp-transport", info={"m": m})
    basis = [X(r) for r in grade_component(m, 0)]
    images = [sp_iso(u) for u in basis]
    bad = None
    pairs = 0
    for u, mu in zip(basis, images):
        for v, mv in zip(basis, images):
            pairs += 1
            if sp_iso(x_bracket(u, v)) != linalg.commutator(mu, mv):
                bad = bad or [repr(u), repr(v)]
    report.add("sp-transport", bad is None, bad, pairs=pairs)
    roundtrip = all(sp_iso_inverse(m, mu) == u for u, mu in zip(basis, images))
    report.add("sp-roundtrip", roundtrip)
    return report
