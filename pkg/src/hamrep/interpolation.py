"""Exact multivariate interpolation of matrix-valued functions on product grids.

Used to confirm, on constructed modules, that r -> H(r) agrees away from the
origin with a matrix polynomial sum_k r^k/k! P^(k).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import exact, linalg
from .catj import big_h
from .exact import monomial_power, multi_factorial
from .linalg import Matrix
from .repdata import RepData
from .report import Report, generator

DEFAULT_SEED = 0xC0FFEE
DEFAULT_POINTS = 200


class GridError(ValueError):
    pass


class CoverageError(KeyError):
    pass


class FitError(ValueError):
    """Samples are not given by a polynomial of the requested degree."""


@dataclass(frozen=True)
class GridSpec:
    axes: tuple

    def __post_init__(self):
        axes = tuple(tuple(int(v) for v in axis) for axis in self.axes)
        for a, axis in enumerate(axes):
            if not axis:
                raise GridError(f"axis {a + 1} is empty")
            if len(set(axis)) != len(axis):
                raise GridError(f"axis {a + 1} has repeated values {axis}")
        object.__setattr__(self, "axes", axes)

    @classmethod
    def cube(cls, n: int, values: Sequence[int]) -> "GridSpec":
        return cls(tuple(tuple(values) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.axes)

    def points(self):
        return itertools.product(*self.axes)

    def __contains__(self, r) -> bool:
        return all(x in axis for x, axis in zip(r, self.axes))


class PolyEndo:
    """Matrix polynomial sum_k r^k/k! C_k (factorial normalisation)."""

    __slots__ = ("m", "dim", "coeffs")

    def __init__(self, m: int, dim: int, coeffs: Mapping = ()):
        self.m = m
        self.dim = dim
        self.coeffs = {
            exact.nonneg_index(k, 2 * m): linalg.matrix(c)
            for k, c in sorted(dict(coeffs).items()) if not linalg.is_zero(linalg.matrix(c))
        }

    @property
    def total_degree(self) -> int:
        return max((sum(k) for k in self.coeffs), default=0)

    def __call__(self, r) -> Matrix:
        terms = []
        for k, c in self.coeffs.items():
            w = monomial_power(r, k) / multi_factorial(k)
            if w:
                terms.append(linalg.mat_scale(w, c))
        return linalg.mat_sum(terms, self.dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyEndo):
            return NotImplemented
        return (self.m, self.dim, self.coeffs) == (other.m, other.dim, other.coeffs)

    def __repr__(self) -> str:
        return f"PolyEndo(m={self.m}, dim={self.dim}, keys={list(self.coeffs)})"


def lagrange_monomial_matrix(nodes: Sequence[int]) -> list[list[Fraction]]:
    """W with W[j][i] = coefficient of x^j in the i-th Lagrange basis polynomial.

    For values y at ``nodes``, sum_i W[j][i] y_i is the x^j coefficient of
    the interpolant.
    """
    K = len(nodes)
    W = [[Fraction(0)] * K for _ in range(K)]
    for i, xi in enumerate(nodes):
        poly = [Fraction(1)]
        denom = Fraction(1)
        for l, xl in enumerate(nodes):
            if l == i:
                continue
            # multiply by (x - xl)
            poly = [Fraction(0)] + poly
            for j in range(len(poly) - 1):
                poly[j] -= xl * poly[j + 1]
            denom *= xi - xl
        for j, c in enumerate(poly):
            W[j][i] = c / denom
    return W


def _transform_axis(data: dict, axis: int, W: list[list[Fraction]]) -> dict:
    out: dict = {}
    size = len(W)
    fibers: dict = {}
    for idx, val in data.items():
        rest = idx[:axis] + idx[axis + 1:]
        fibers.setdefault(rest, {})[idx[axis]] = val
    for rest, fiber in fibers.items():
        for j in range(size):
            acc = None
            for i in range(size):
                w = W[j][i]
                if w and i in fiber:
                    term = linalg.vec_scale(w, fiber[i])
                    acc = term if acc is None else linalg.vec_add(acc, term)
            if acc is not None:
                out[rest[:axis] + (j,) + rest[axis:]] = acc
    return out


def fit_on_grid(samples: Mapping, grid: GridSpec, degree: int) -> PolyEndo:
    """The unique polynomial of degree <= ``degree`` in each variable through
    the samples, fitted on the first degree+1 values of every axis.

    Remaining grid points, if any, must agree with the fit.
    """
    n = grid.n
    if n % 2:
        raise GridError("grid dimension must be even")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    for a, axis in enumerate(grid.axes):
        if len(axis) < degree + 1:
            raise GridError(f"axis {a + 1} has {len(axis)} values, need {degree + 1}")
    samples = {tuple(r): linalg.matrix(v) for r, v in samples.items()}
    missing = [p for p in grid.points() if p not in samples]
    if missing:
        raise CoverageError(f"no sample at grid point {missing[0]}")
    dim = len(next(iter(samples.values())))
    nodes = [axis[: degree + 1] for axis in grid.axes]
    data = {}
    for idx in itertools.product(range(degree + 1), repeat=n):
        point = tuple(nodes[a][i] for a, i in enumerate(idx))
        data[idx] = tuple(x for row in samples[point] for x in row)
    for a in range(n):
        data = _transform_axis(data, a, lagrange_monomial_matrix(nodes[a]))
    coeffs = {}
    for k, flat in data.items():
        flat = linalg.vec_scale(multi_factorial(k), flat)
        coeffs[k] = tuple(tuple(flat[i * dim:(i + 1) * dim]) for i in range(dim))
    fit = PolyEndo(n // 2, dim, coeffs)
    for p in grid.points():
        if fit(p) != samples[p]:
            raise FitError(f"samples are not of per-axis degree <= {degree}; mismatch at {p}")
    return fit


def sample_grid(rep: RepData, grid: GridSpec) -> dict:
    return {p: big_h(rep, p) for p in grid.points()}


def verify_polynomial_action(rep: RepData, extent: int, points: int = DEFAULT_POINTS,
                             seed: int = DEFAULT_SEED) -> tuple[Report, PolyEndo | None]:
    """Fit H on {1..extent}^N, then test it off the grid and against rep.P."""
    degree = rep.degree_bound
    if extent < degree + 1:
        raise ValueError(f"extent must be >= degree_bound + 1 = {degree + 1}")
    n = rep.n
    grid = GridSpec.cube(n, range(1, extent + 1))
    samples = sample_grid(rep, grid)
    report = Report("interpolate", seed=seed, info={
        "extent": extent, "degree": degree, "grid_points": extent**n,
    })
    try:
        fit = fit_on_grid(samples, grid, degree)
    except FitError as exc:
        report.add("grid-fit", False, str(exc))
        return report, None
    report.info["total_degree"] = fit.total_degree
    residual = next((list(p) for p in grid.points() if fit(p) != samples[p]), None)
    report.add("grid-residual-zero", residual is None, residual)

    rng = generator(seed)
    bound = 3 * extent
    bad = None
    checked = 0
    while checked < points:
        r = tuple(int(v) for v in rng.integers(-bound, bound + 1, size=n))
        if not any(r) or r in grid:
            continue
        checked += 1
        if bad is None and fit(r) != big_h(rep, r):
            bad = list(r)
    report.add("off-grid-prediction", bad is None, bad, points=points, box=bound)

    mismatch = sorted(set(fit.coeffs) ^ set(rep.P)) or [k for k in rep.P if fit.coeffs[k] != rep.P[k]]
    report.add("coefficients-match-P", not mismatch, [list(k) for k in mismatch[:5]] or None,
               keys=len(rep.P))
    return report, fit


def delta_correction_check(rep: RepData) -> Report:
    """The fitted polynomial at r = 0 gives P^(0) while H(0) = 0."""
    n = rep.n
    zero = exact.zero_index(n)
    p0 = rep.get(zero)
    degree = rep.degree_bound
    grid = GridSpec.cube(n, range(1, degree + 2))
    fit = fit_on_grid(sample_grid(rep, grid), grid, degree)
    report = Report("delta-correction", info={"vacuous": linalg.is_zero(p0)})
    report.add("fit-at-origin-is-P0", fit(zero) == p0)
    report.add("H-at-origin-is-zero", linalg.is_zero(big_h(rep, zero)))
    return report


def polyendo_from_rep(rep: RepData) -> PolyEndo:
    return PolyEndo(rep.m, rep.dim, rep.P)
