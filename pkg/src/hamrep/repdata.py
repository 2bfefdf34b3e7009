"""Finite-dimensional representation data P^(k).

A category-J module A_N (x) V is determined by matrices P^(k) on V, indexed
by k in Z_{>=0}^N, realising a representation of the positive-degree
polynomial Hamiltonian fields plus a Heisenberg algebra:

    rho(X(k)) = P^(k) for |k| > 1,   rho(p^i) = P^(e_i),
    rho(q^i) = P^(e_{m+i}),          rho(c) = P^(0).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import exact, graded, linalg
from .exact import DimensionError
from .linalg import Matrix
from .report import Report


class RepresentationError(ValueError):
    """Matrices that do not form the representation they claim to."""


class RepData:
    """The family k -> P^(k) with finite support.

    ``degree_bound`` is k_0: every P^(k) with |k| >= k_0 vanishes. When not
    given it defaults to one more than the largest stored degree.
    """

    __slots__ = ("m", "dim", "P", "degree_bound")

    def __init__(self, m: int, dim: int, P: Mapping = (), degree_bound: int | None = None):
        if m < 1 or dim < 1:
            raise ValueError(f"need m >= 1 and dim >= 1, got m={m}, dim={dim}")
        n = 2 * m
        terms: dict[tuple, Matrix] = {}
        for k, mat in dict(P).items():
            k = exact.nonneg_index(k, n)
            mat = linalg.matrix(mat)
            if linalg.shape(mat) != (dim, dim):
                raise DimensionError(f"P^{k} has shape {linalg.shape(mat)}, expected {(dim, dim)}")
            if not linalg.is_zero(mat):
                terms[k] = mat
        top = max((sum(k) for k in terms), default=-1)
        if degree_bound is None:
            degree_bound = top + 1
        if degree_bound <= top:
            raise ValueError(f"degree_bound {degree_bound} but P has a term of degree {top}")
        self.m = m
        self.dim = dim
        self.P = dict(sorted(terms.items()))
        self.degree_bound = degree_bound

    @property
    def n(self) -> int:
        return 2 * self.m

    def get(self, k) -> Matrix:
        return self.P.get(tuple(k), linalg.zeros(self.dim))

    def replace(self, k, mat: Matrix) -> "RepData":
        P = dict(self.P)
        P[tuple(k)] = mat
        return RepData(self.m, self.dim, P, max(self.degree_bound, sum(k) + 1))

    def conjugate(self, g: Matrix) -> "RepData":
        """All P^(k) replaced by g P^(k) g^{-1}."""
        gi = linalg.inverse(g)
        return RepData(
            self.m, self.dim,
            {k: linalg.matmul(linalg.matmul(g, p), gi) for k, p in self.P.items()},
            self.degree_bound,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepData):
            return NotImplemented
        return (self.m, self.dim, self.P, self.degree_bound) == (
            other.m, other.dim, other.P, other.degree_bound)

    def __repr__(self) -> str:
        return f"RepData(m={self.m}, dim={self.dim}, keys={list(self.P)}, degree_bound={self.degree_bound})"


def zero_rep(m: int, dim: int = 1) -> RepData:
    return RepData(m, dim, {}, degree_bound=0)


def direct_sum(a: RepData, b: RepData) -> RepData:
    if a.m != b.m:
        raise DimensionError("m mismatch")
    keys = set(a.P) | set(b.P)
    return RepData(
        a.m, a.dim + b.dim,
        {k: linalg.block_diag(a.get(k), b.get(k)) for k in keys},
        max(a.degree_bound, b.degree_bound),
    )


def expected_commutator(rep: RepData, j: tuple, k: tuple) -> Matrix:
    """Right-hand side of [P^(j), P^(k)] dictated by the bracket relations."""
    m, d = rep.m, rep.dim
    if sum(j) > 1 and sum(k) > 1:
        acc = []
        for i in range(m):
            w = j[m + i] * k[i] - j[i] * k[m + i]
            if w:
                key = list(exact.add(j, k))
                key[i] -= 1
                key[m + i] -= 1
                acc.append(linalg.mat_scale(w, rep.get(key)))
        return linalg.mat_sum(acc, d)
    n = 2 * m
    for i in range(1, m + 1):
        ei, emi = exact.unit(n, i), exact.unit(n, m + i)
        if (j, k) == (ei, emi):
            return rep.get(exact.zero_index(n))
        if (j, k) == (emi, ei):
            return linalg.mat_scale(-1, rep.get(exact.zero_index(n)))
    return linalg.zeros(d)


def check_pairs(rep: RepData) -> list[tuple]:
    """Support, 0, the unit vectors, and every k with |k| <= k_0 + 1."""
    n = rep.n
    keys = set(rep.P)
    keys.add(exact.zero_index(n))
    keys.update(exact.unit(n, a) for a in range(1, n + 1))
    keys.update(exact.indices_up_to(rep.degree_bound + 1, n))
    return sorted(keys, key=lambda k: (sum(k), k))


def validate_rep(rep: RepData, max_witnesses: int = 5) -> Report:
    report = Report("validate-rep", info={"m": rep.m, "dim": rep.dim})
    keys = check_pairs(rep)
    violations = []
    count = 0
    for j in keys:
        pj = rep.get(j)
        for k in keys:
            lhs = linalg.commutator(pj, rep.get(k))
            if lhs != expected_commutator(rep, j, k):
                count += 1
                if len(violations) < max_witnesses:
                    violations.append({"j": list(j), "k": list(k)})
    report.add("bracket-relations", count == 0, violations or None,
               pairs=len(keys) ** 2, violations=count)
    return report


def eigenvalue_bound_check(rep: RepData) -> Report:
    """Count the grades n >= 1 with P^(n e_i) != 0 and compare with d^2 - d + 1.

    The X(n e_i) are ad X(e_i + e_{m+i}) eigenvectors with distinct
    eigenvalues n, so at most d^2 - d + 1 of them can act nontrivially.
    """
    d = rep.dim
    bound = d * d - d + 1
    report = Report("eigenvalue-bound", info={"dim": d, "bound": bound})
    for i in range(rep.m):
        count = sum(
            1 for k in rep.P
            if k[i] >= 1 and sum(k) == k[i]
        )
        report.add(f"axis-{i + 1}", count <= bound, None if count <= bound else count, count=count)
    return report


# -- irreducible modules from sp_N + abelian data -----------------------------


@dataclass
class IrreducibleSpec:
    """sp_N representation phi (on the labelled basis) plus scalars mu."""

    m: int
    phi: dict[str, Matrix]
    mu: tuple = field(default=())

    def __post_init__(self):
        labels = graded.sp_labels(self.m)
        if set(self.phi) != set(labels):
            missing = sorted(set(labels) - set(self.phi))
            extra = sorted(set(self.phi) - set(labels))
            raise RepresentationError(f"phi keys mismatch: missing {missing}, unexpected {extra}")
        self.phi = {lab: linalg.matrix(self.phi[lab]) for lab in labels}
        if not self.mu:
            self.mu = (0,) * (2 * self.m)
        self.mu = tuple(exact.rational(x) for x in self.mu)
        if len(self.mu) != 2 * self.m:
            raise DimensionError(f"mu must have length {2 * self.m}")
        shapes = {linalg.shape(p) for p in self.phi.values()}
        if len(shapes) != 1 or (s := shapes.pop())[0] != s[1]:
            raise DimensionError("phi matrices must be square of a common size")

    @property
    def dim(self) -> int:
        return len(next(iter(self.phi.values())))

    def apply(self, mat: Matrix) -> Matrix:
        """phi extended linearly to any matrix of sp_N."""
        coeffs = graded.sp_coefficients_of_matrix(self.m, mat)
        return linalg.mat_sum(
            (linalg.mat_scale(c, self.phi[lab]) for c, lab in zip(coeffs, graded.sp_labels(self.m)) if c),
            self.dim,
        )


def phi_violations(spec: IrreducibleSpec) -> list[tuple[str, str]]:
    """Basis pairs where phi fails to respect the commutator."""
    basis = graded.sp_basis(spec.m)
    bad = []
    for a, (la, _, A) in enumerate(basis):
        for lb, _, B in basis[a + 1:]:
            if spec.apply(linalg.commutator(A, B)) != linalg.commutator(spec.phi[la], spec.phi[lb]):
                bad.append((la, lb))
    return bad


def sp_defining_rep(m: int) -> dict[str, Matrix]:
    """phi for the N-dimensional defining representation."""
    return {label: mat for label, _, mat in graded.sp_basis(m)}


def sp_trivial_rep(m: int, dim: int = 1) -> dict[str, Matrix]:
    return {label: linalg.zeros(dim) for label in graded.sp_labels(m)}


def from_sp_rep(spec: IrreducibleSpec, require_irreducible: bool = False) -> RepData:
    """RepData of the module A_N (x) V for an sp_N + abelian module V.

    The central element acts by 0, p^i by -mu_i, q^i by mu_{m+i}, the
    degree-two fields through phi composed with the L_0 ~ sp_N
    identification, and everything of degree > 2 by zero.
    """
    bad = phi_violations(spec)
    if bad:
        raise RepresentationError(f"phi does not respect brackets, e.g. on {bad[0]}")
    if require_irreducible and not is_irreducible(list(spec.phi.values())):
        raise RepresentationError("phi is reducible")
    m, d, n = spec.m, spec.dim, 2 * spec.m
    one = linalg.identity(d)
    P: dict[tuple, Matrix] = {}
    for i in range(m):
        P[exact.unit(n, i + 1)] = linalg.mat_scale(-spec.mu[i], one)
        P[exact.unit(n, m + i + 1)] = linalg.mat_scale(spec.mu[m + i], one)
    for k in graded.grade_component(m, 0):
        P[k] = spec.apply(graded.sp_iso(graded.X(k)))
    return RepData(m, d, P, degree_bound=3)


IRREDUCIBLE_GUARD = 12


def is_irreducible(mats: list[Matrix]) -> bool:
    """Absolute irreducibility of the action generated by ``mats``.

    By Burnside's theorem the action is irreducible over an algebraically
    closed field exactly when the matrices generate all of M_d as an
    associative algebra; that span is computed exactly over Q.
    """
    if not mats:
        raise ValueError("need at least one matrix")
    d = len(mats[0])
    if d > IRREDUCIBLE_GUARD:
        raise OverflowError(f"dimension {d} exceeds guard {IRREDUCIBLE_GUARD}")
    if d == 1:
        return True
    flat = lambda a: tuple(x for row in a for x in row)  # noqa: E731
    span = linalg.EchelonBasis(d * d)
    words = [linalg.identity(d)]
    span.add(flat(words[0]))
    while words:
        fresh = []
        for w in words:
            for g in mats:
                p = linalg.matmul(g, w)
                if span.add(flat(p)):
                    fresh.append(p)
        words = fresh
    return len(span) == d * d
