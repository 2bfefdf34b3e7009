"""Category-J modules A_N (x) V built from representation data.

Elements are finite sums of ``t^s (x) v``. The torus algebra acts by

    d_a (t^s (x) v) = (s_a + lambda_a) t^s (x) v,
    h(r)(t^s (x) v) = omega(r, s) t^{r+s} (x) v + t^{r+s} (x) H(r) v,

where ``H(r) = sum_k r^k / k! P^(k)`` for r != 0 and ``H(0) = 0``, and
Laurent monomials act by shifting ``s``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Sequence

from . import exact, linalg
from .exact import DimensionError, monomial_power, multi_factorial, symplectic_pairing
from .linalg import Matrix, Vector
from .repdata import RepData
from .report import Report, run_chunked


def big_h(rep: RepData, r) -> Matrix:
    """H(r) = sum_k r^k/k! P^(k) - delta_{r,0} P^(0)."""
    r = tuple(r)
    if len(r) != rep.n:
        raise DimensionError(f"expected length {rep.n}, got {len(r)}")
    if not any(r):
        return linalg.zeros(rep.dim)
    terms = []
    for k, p in rep.P.items():
        c = monomial_power(r, k) / multi_factorial(k)
        if c:
            terms.append(linalg.mat_scale(c, p))
    return linalg.mat_sum(terms, rep.dim)


class ModuleElement:
    """Finite sum of t^s (x) v_s; zero vectors are never stored."""

    __slots__ = ("n", "dim", "terms")

    def __init__(self, n: int, dim: int, terms: Mapping = ()):
        self.n = n
        self.dim = dim
        out: dict[tuple, Vector] = {}
        for s, v in dict(terms).items():
            s = exact.multi_index(s, n)
            v = linalg.vector(v)
            if len(v) != dim:
                raise DimensionError(f"vector of length {len(v)} in a rank-{dim} module")
            if not linalg.is_zero_vec(v):
                out[s] = v
        self.terms = out

    @classmethod
    def single(cls, s, v) -> "ModuleElement":
        v = linalg.vector(v)
        return cls(len(s), len(v), {tuple(s): v})

    @classmethod
    def zero(cls, n: int, dim: int) -> "ModuleElement":
        return cls(n, dim)

    def _from_acc(self, acc: dict) -> "ModuleElement":
        return ModuleElement(self.n, self.dim, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if (self.n, self.dim) != (other.n, other.dim):
            raise DimensionError("module element shape mismatch")
        acc = dict(self.terms)
        for s, v in other.terms.items():
            acc[s] = linalg.vec_add(acc[s], v) if s in acc else v
        return self._from_acc(acc)

    def __mul__(self, c) -> "ModuleElement":
        c = exact.rational(c)
        return self._from_acc({s: linalg.vec_scale(c, v) for s, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "ModuleElement":
        return self * -1

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return (self.n, self.dim, self.terms) == (other.n, other.dim, other.terms)

    def __repr__(self) -> str:
        body = " + ".join(
            f"t^{s}(x)({', '.join(map(str, v))})" for s, v in sorted(self.terms.items())
        )
        return f"ModuleElement({body or '0'})"


class CatJModule:
    """A_N (x) V with weights lambda + Z^N, from validated RepData."""

    def __init__(self, rep: RepData, lam: Sequence = ()):
        lam = tuple(exact.rational(x) for x in lam) if lam else (Fraction(0),) * rep.n
        if len(lam) != rep.n:
            raise DimensionError(f"lambda must have length {rep.n}")
        self.rep = rep
        self.lam = lam
        self._h_cache: dict[tuple, Matrix] = {}

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def m(self) -> int:
        return self.rep.m

    @property
    def dim(self) -> int:
        return self.rep.dim

    def H(self, r) -> Matrix:
        r = tuple(r)
        hit = self._h_cache.get(r)
        if hit is None:
            hit = self._h_cache[r] = big_h(self.rep, r)
        return hit

    def element(self, terms: Mapping) -> ModuleElement:
        return ModuleElement(self.n, self.dim, terms)

    def weight(self, s) -> tuple:
        """Weight of t^s (x) v, i.e. lambda + s."""
        return tuple(x + y for x, y in zip(self.lam, s))

    def __getstate__(self):
        return {"rep": self.rep, "lam": self.lam}

    def __setstate__(self, state):
        self.__init__(state["rep"], state["lam"])


def act_d(mod: CatJModule, a: int, x: ModuleElement) -> ModuleElement:
    if not 1 <= a <= mod.n:
        raise IndexError(f"d_{a} out of range 1..{mod.n}")
    return x._from_acc(
        {s: linalg.vec_scale(s[a - 1] + mod.lam[a - 1], v) for s, v in x.terms.items()}
    )


def act_laurent(mod: CatJModule, r, x: ModuleElement) -> ModuleElement:
    """Multiplication by t^r."""
    r = exact.multi_index(r, mod.n)
    return x._from_acc({exact.add(s, r): v for s, v in x.terms.items()})


def act_h(mod: CatJModule, r, x: ModuleElement) -> ModuleElement:
    r = exact.multi_index(r, mod.n)
    if not any(r):
        return ModuleElement.zero(mod.n, mod.dim)
    hr = mod.H(r)
    acc: dict[tuple, Vector] = {}
    for s, v in x.terms.items():
        w = symplectic_pairing(r, s)
        out = linalg.vec_add(linalg.vec_scale(w, v), linalg.matvec(hr, v))
        key = exact.add(r, s)
        acc[key] = linalg.vec_add(acc[key], out) if key in acc else out
    return x._from_acc(acc)


def act(mod: CatJModule, field, x: ModuleElement) -> ModuleElement:
    """Action of a general TorusField by linearity."""
    out = ModuleElement.zero(mod.n, mod.dim)
    for a, c in field.d_terms.items():
        out = out + c * act_d(mod, a, x)
    for r, c in field.h_terms.items():
        out = out + c * act_h(mod, r, x)
    return out


# -- verification -------------------------------------------------------------


def random_index(rng, n: int, extent: int) -> tuple:
    return tuple(int(v) for v in rng.integers(-extent, extent + 1, size=n))


def random_element(rng, mod: CatJModule, extent: int, max_terms: int = 3) -> ModuleElement:
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        s = random_index(rng, mod.n, extent)
        v = tuple(
            Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4))) for _ in range(mod.dim)
        )
        terms[s] = v
    x = mod.element(terms)
    if x.is_zero():
        x = mod.element({exact.zero_index(mod.n): (1,) * mod.dim})
    return x


def element_to_json(x: ModuleElement) -> list:
    return [{"s": list(s), "v": [str(c) for c in v]} for s, v in sorted(x.terms.items())]


def _axioms_chunk(rng, count: int, mod: CatJModule, extent: int) -> list:
    n = mod.n
    failures = []
    for _ in range(count):
        r = random_index(rng, n, extent)
        s = random_index(rng, n, extent)
        u = random_index(rng, n, extent)
        x = random_element(rng, mod, extent)
        w_rs = symplectic_pairing(r, s)
        rs = exact.add(r, s)

        lhs = act_h(mod, r, act_h(mod, s, x)) - act_h(mod, s, act_h(mod, r, x))
        if lhs != w_rs * act_h(mod, rs, x):
            failures.append({"check": "bracket", "r": list(r), "s": list(s), "x": element_to_json(x)})

        lhs = act_h(mod, r, act_laurent(mod, u, x))
        rhs = symplectic_pairing(r, u) * act_laurent(mod, exact.add(r, u), x) + act_laurent(
            mod, u, act_h(mod, r, x))
        if lhs != rhs:
            failures.append({"check": "leibniz", "r": list(r), "u": list(u), "x": element_to_json(x)})

        if any(r) and any(s) and any(rs):
            hr, hs = mod.H(r), mod.H(s)
            rhs = linalg.mat_scale(-w_rs, linalg.mat_sub(linalg.mat_add(hr, hs), mod.H(rs)))
            if linalg.commutator(hr, hs) != rhs:
                failures.append({"check": "H-commutator", "r": list(r), "s": list(s)})

        hx = act_h(mod, r, x)
        ux = act_laurent(mod, u, x)
        for a in range(1, n + 1):
            ok = (act_d(mod, a, hx) - act_h(mod, r, act_d(mod, a, x)) == r[a - 1] * hx
                  and act_d(mod, a, ux) - act_laurent(mod, u, act_d(mod, a, x)) == u[a - 1] * ux)
            ok = ok and all(
                act_d(mod, a, mod.element({key: v})) == (key[a - 1] + mod.lam[a - 1]) * mod.element({key: v})
                for key, v in hx.terms.items()
            )
            if not ok:
                failures.append({"check": "weights", "a": a, "r": list(r), "u": list(u),
                                 "x": element_to_json(x)})
                break
    return failures


CHECK_NAMES = ("bracket", "leibniz", "H-commutator", "weights")


def verify_module_axioms(mod: CatJModule, samples: int = 200, seed: int = 0, extent: int = 3) -> Report:
    """Exact random checks of the module structure.

    bracket:      [h(r), h(s)] x = omega(r, s) h(r+s) x
    leibniz:      h(r)(t^u x) = omega(r, u) t^{r+u} x + t^u h(r) x
    H-commutator: [H(r), H(s)] = -omega(r, s)(H(r) + H(s) - H(r+s))
    weights:      d_a eigenvalues shift by r_a under h(r) and u_a under t^u
    """
    report = Report("verify-module-axioms", seed=seed,
                    info={"samples": samples, "extent": extent,
                          "lambda": [str(c) for c in mod.lam]})
    failures = run_chunked(_axioms_chunk, samples, seed, mod, extent)
    for name in CHECK_NAMES:
        hits = [f for f in failures if f["check"] == name]
        report.add(name, not hits, hits[0] if hits else None, failures=len(hits))
    return report


# -- heuristic irreducibility probe --------------------------------------------


def _box(n: int, radius: int) -> list[tuple]:
    return [r for r in itertools.product(range(-radius, radius + 1), repeat=n) if any(r)]


def cyclicity_probe(mod: CatJModule, radius: int, v: Sequence, depth: int = 2) -> Report:
    """Span of V-components reachable from t^0 (x) v by short h-words that
    return to weight lambda.

    Words use h(r) with r != 0 and max |r_a| <= radius, of length <= depth.
    This is only a necessary condition for irreducibility of A_N (x) V: a
    span smaller than dim V exhibits a proper invariant piece of the
    weight space, a full span proves nothing.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    n, d = mod.n, mod.dim
    v = linalg.vector(v)
    gens = _box(n, radius)
    zero = exact.zero_index(n)
    span = linalg.EchelonBasis(d)
    span.add(v)
    layer = {zero: [v]}
    for step in range(1, depth + 1):
        remaining = depth - step
        nxt: dict[tuple, linalg.EchelonBasis] = {}
        for w, vecs in layer.items():
            for r in gens:
                target = exact.add(w, r)
                if max(abs(c) for c in target) > radius * remaining:
                    continue
                hr = mod.H(r)
                om = symplectic_pairing(r, w)
                basis = nxt.setdefault(target, linalg.EchelonBasis(d))
                for b in vecs:
                    basis.add(linalg.vec_add(linalg.vec_scale(om, b), linalg.matvec(hr, b)))
        layer = {w: b.basis() for w, b in nxt.items() if len(b)}
        for b in layer.get(zero, []):
            span.add(b)
    basis = span.basis()
    report = Report("cyclicity-probe", info={
        "label": "HEURISTIC",
        "note": "finite-window necessary condition only; not an irreducibility certificate",
        "radius": radius,
        "depth": depth,
        "span_dimension": len(basis),
        "dim": d,
        "span": [[str(c) for c in b] for b in basis],
    })
    report.add("span-is-full (HEURISTIC)", len(basis) == d, None if len(basis) == d else len(basis))
    return report
