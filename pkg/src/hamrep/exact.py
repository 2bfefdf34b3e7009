"""Exact scalars and multi-index combinatorics.

Scalars are :class:`fractions.Fraction`; multi-indices are plain tuples of
ints. ``N = 2m`` throughout, with coordinates ``i`` and ``m + i`` paired.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Sequence, Union

RationalLike = Union[int, str, Fraction]

MultiIndex = tuple
NonNegIndex = tuple


class DimensionError(ValueError):
    """Multi-indices or matrices of incompatible size."""


def rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction. Floats are refused (no inexact input)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean scalar {x!r}")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(x: Fraction) -> str:
    # str(Fraction) already gives "p" or "p/q"
    return str(Fraction(x))


def multi_index(entries: Iterable[int], n: int | None = None) -> MultiIndex:
    r = tuple(int(e) for e in entries)
    if n is not None and len(r) != n:
        raise DimensionError(f"expected length {n}, got {len(r)}")
    if len(r) < 2 or len(r) % 2:
        raise DimensionError(f"multi-index length must be even and >= 2, got {len(r)}")
    return r


def nonneg_index(entries: Iterable[int], n: int | None = None) -> NonNegIndex:
    k = multi_index(entries, n)
    if any(e < 0 for e in k):
        raise ValueError(f"negative entry in non-negative index {k}")
    return k


def zero_index(n: int) -> MultiIndex:
    return (0,) * n


def unit(n: int, a: int) -> MultiIndex:
    """Standard basis vector e_a, 1-based as in the usual notation."""
    if not 1 <= a <= n:
        raise IndexError(f"unit index {a} out of range 1..{n}")
    return tuple(1 if b == a else 0 for b in range(1, n + 1))


def add(r: Sequence[int], s: Sequence[int]) -> MultiIndex:
    _same_length(r, s)
    return tuple(a + b for a, b in zip(r, s))


def sub(r: Sequence[int], s: Sequence[int]) -> MultiIndex:
    _same_length(r, s)
    return tuple(a - b for a, b in zip(r, s))


def neg(r: Sequence[int]) -> MultiIndex:
    return tuple(-a for a in r)


def scale(c: int, r: Sequence[int]) -> MultiIndex:
    return tuple(c * a for a in r)


def degree(k: Sequence[int]) -> int:
    """|k| = k_1 + ... + k_N."""
    return sum(k)


def _same_length(r: Sequence[int], s: Sequence[int]) -> None:
    if len(r) != len(s):
        raise DimensionError(f"length mismatch: {len(r)} vs {len(s)}")


def symplectic_pairing(r: Sequence[int], s: Sequence[int]) -> int:
    """omega(r, s) = sum_i (r_{m+i} s_i - r_i s_{m+i}).

    This is the structure constant of every bracket in the package:
    ``[h(r), h(s)] = omega(r, s) h(r + s)``.
    """
    _same_length(r, s)
    n = len(r)
    if n % 2:
        raise DimensionError(f"odd length {n}")
    m = n // 2
    return sum(r[m + i] * s[i] - r[i] * s[m + i] for i in range(m))


def monomial_power(r: Sequence[int], k: Sequence[int]) -> Fraction:
    """r^k = prod r_i^{k_i}, with 0^0 = 1."""
    _same_length(r, k)
    if any(e < 0 for e in k):
        raise ValueError(f"negative exponent in {tuple(k)}")
    # Python's int power already has 0**0 == 1
    return Fraction(prod(a**e for a, e in zip(r, k)))


def multi_factorial(k: Sequence[int]) -> int:
    return prod(factorial(e) for e in k)


def compositions(total: int, parts: int) -> list[NonNegIndex]:
    """All non-negative integer vectors of length ``parts`` summing to ``total``,
    in lexicographic order."""
    if total < 0:
        return []
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    out.sort()
    return out


def indices_up_to(max_degree: int, n: int) -> list[NonNegIndex]:
    """All k in Z_{>=0}^n with |k| <= max_degree, ordered by degree then lex."""
    out: list[NonNegIndex] = []
    for d in range(max_degree + 1):
        out.extend(compositions(d, n))
    return out
