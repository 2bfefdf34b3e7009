"""The Lie algebra of Hamiltonian vector fields on the N-torus.

Basis: degree derivations ``d_i`` (1 <= i <= N) and ``h(r)`` for r in Z^N,
with ``h(0) = 0`` and

    [d_i, d_j] = 0,   [d_i, h(r)] = r_i h(r),   [h(r), h(s)] = omega(r, s) h(r + s).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from . import exact
from .exact import DimensionError, symplectic_pairing
from .report import Report, run_chunked


class TorusField:
    """Finite rational combination of ``d_i`` and ``h(r)``, kept canonical.

    Zero coefficients and the ``h(0)`` key are dropped on construction, so
    ``==`` is equality in the algebra.
    """

    __slots__ = ("m", "d_terms", "h_terms")

    def __init__(self, m: int, d_terms: Mapping[int, object] = (), h_terms: Mapping = ()):
        if m < 1:
            raise ValueError(f"m must be positive, got {m}")
        n = 2 * m
        d: dict[int, Fraction] = {}
        for i, c in dict(d_terms).items():
            if not 1 <= i <= n:
                raise IndexError(f"d_{i} out of range for N={n}")
            c = exact.rational(c)
            if c:
                d[i] = c
        h: dict[tuple, Fraction] = {}
        for r, c in dict(h_terms).items():
            r = exact.multi_index(r, n)
            c = exact.rational(c)
            if c and any(r):
                h[r] = c
        self.m = m
        self.d_terms = d
        self.h_terms = h

    @property
    def n(self) -> int:
        return 2 * self.m

    @classmethod
    def zero(cls, m: int) -> "TorusField":
        return cls(m)

    def is_zero(self) -> bool:
        return not self.d_terms and not self.h_terms

    def _check(self, other: "TorusField") -> None:
        if self.m != other.m:
            raise DimensionError(f"m mismatch: {self.m} vs {other.m}")

    def __add__(self, other: "TorusField") -> "TorusField":
        self._check(other)
        d = dict(self.d_terms)
        for i, c in other.d_terms.items():
            d[i] = d.get(i, 0) + c
        h = dict(self.h_terms)
        for r, c in other.h_terms.items():
            h[r] = h.get(r, 0) + c
        return TorusField(self.m, d, h)

    def __neg__(self) -> "TorusField":
        return TorusField(
            self.m,
            {i: -c for i, c in self.d_terms.items()},
            {r: -c for r, c in self.h_terms.items()},
        )

    def __sub__(self, other: "TorusField") -> "TorusField":
        return self + (-other)

    def __mul__(self, c) -> "TorusField":
        c = exact.rational(c)
        return TorusField(
            self.m,
            {i: c * x for i, x in self.d_terms.items()},
            {r: c * x for r, x in self.h_terms.items()},
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusField):
            return NotImplemented
        return self.m == other.m and self.d_terms == other.d_terms and self.h_terms == other.h_terms

    def __hash__(self):
        return hash((self.m, frozenset(self.d_terms.items()), frozenset(self.h_terms.items())))

    def __repr__(self) -> str:
        parts = [f"{c}*d_{i}" for i, c in sorted(self.d_terms.items())]
        parts += [f"{c}*h{r}" for r, c in sorted(self.h_terms.items())]
        return f"TorusField(m={self.m}: " + (" + ".join(parts) or "0") + ")"


def d(m: int, i: int) -> TorusField:
    return TorusField(m, {i: 1})


def hamiltonian_field_of_monomial(r) -> TorusField:
    """h(r), the Hamiltonian field of the monomial t^r (zero when r = 0)."""
    r = exact.multi_index(r)
    return TorusField(len(r) // 2, h_terms={r: 1})


h = hamiltonian_field_of_monomial


def bracket(a: TorusField, b: TorusField) -> TorusField:
    a._check(b)
    d_out: dict = {}
    h_out: dict = {}

    def put(r, c):
        h_out[r] = h_out.get(r, 0) + c

    for i, ca in a.d_terms.items():
        for s, cb in b.h_terms.items():
            put(s, ca * cb * s[i - 1])
    for r, ca in a.h_terms.items():
        for i, cb in b.d_terms.items():
            put(r, -ca * cb * r[i - 1])
        for s, cb in b.h_terms.items():
            w = symplectic_pairing(r, s)
            if w:
                put(exact.add(r, s), ca * cb * w)
    return TorusField(a.m, d_out, h_out)


def jacobiator(a: TorusField, b: TorusField, c: TorusField) -> TorusField:
    """[[a,b],c] + [[b,c],a] + [[c,a],b]; zero in any Lie algebra."""
    return bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)


def random_basis_element(rng, m: int, extent: int) -> TorusField:
    """A d_i (probability 1/4) or an h(r) with r in [-extent, extent]^N, r != 0."""
    n = 2 * m
    if rng.random() < 0.25:
        return d(m, int(rng.integers(1, n + 1)))
    while True:
        r = tuple(int(x) for x in rng.integers(-extent, extent + 1, size=n))
        if any(r):
            return h(r)


def _jacobi_chunk(rng, count: int, m: int, extent: int) -> list:
    failures = []
    for _ in range(count):
        a, b, c = (random_basis_element(rng, m, extent) for _ in range(3))
        j = jacobiator(a, b, c)
        if not j.is_zero():
            failures.append([repr(a), repr(b), repr(c), repr(j)])
    return failures


def _antisymmetry_chunk(rng, count: int, m: int, extent: int) -> list:
    failures = []
    for _ in range(count):
        a, b = (random_basis_element(rng, m, extent) for _ in range(2))
        if bracket(a, b) != -bracket(b, a):
            failures.append([repr(a), repr(b)])
    return failures


def verify_jacobi(m: int, samples: int = 1000, seed: int = 0, extent: int = 3) -> Report:
    """Check antisymmetry and the Jacobi identity on random basis triples."""
    if extent < 1:
        raise ValueError("extent must be >= 1")
    report = Report("verify-jacobi", seed=seed)
    fails = run_chunked(_jacobi_chunk, samples, seed, m, extent)
    report.add("jacobi", not fails, fails[0] if fails else None, m=m, samples=samples, failures=len(fails))
    fails = run_chunked(_antisymmetry_chunk, samples, seed, m, extent, stream=1)
    report.add("antisymmetry", not fails, fails[0] if fails else None, m=m, samples=samples)
    return report
