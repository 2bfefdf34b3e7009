import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy

from hamrep import linalg
from hamrep.graded import (
    X,
    cartan_weight,
    grade_component,
    grade_dimension,
    highest_weight_vectors,
    sp_basis,
    sp_iso,
    sp_iso_inverse,
    verify_grading,
    verify_irreducible_component,
    verify_sp_transport,
    x_bracket,
)
from hamrep.linalg import unit_matrix


def test_bracket_examples():
    assert x_bracket(X((2, 0)), X((0, 2))) == -4 * X((1, 1))
    for n in range(1, 5):
        assert x_bracket(X((1, 1)), X((n, 0))) == n * X((n, 0))


def test_grade_counts():
    assert len(grade_component(1, 0)) == 3
    assert len(grade_component(2, 0)) == 10
    assert len(grade_component(1, -1)) == 2
    for m in (1, 2, 3):
        for n in range(-1, 4):
            assert grade_dimension(m, n) == comb(n + 2 * m + 1, 2 * m - 1)


def test_grading_report():
    assert verify_grading(1).passed
    assert verify_grading(2).passed


def _sympy_field(r, xs):
    m = len(r) // 2
    mono = lambda k: sympy.Mul(*(x**e for x, e in zip(xs, k)))  # noqa: E731
    coeff = [sympy.Integer(0)] * len(r)
    for i in range(m):
        if r[m + i]:
            k = list(r)
            k[m + i] -= 1
            coeff[i] += r[m + i] * mono(k)
        if r[i]:
            k = list(r)
            k[i] -= 1
            coeff[m + i] -= r[i] * mono(k)
    return coeff


def _sympy_poly_field(f, xs):
    total = [sympy.Integer(0)] * (2 * f.m)
    for r, c in f.terms.items():
        for a, v in enumerate(_sympy_field(r, xs)):
            total[a] += sympy.Rational(c.numerator, c.denominator) * v
    return total


@pytest.mark.parametrize("m", [1, 2])
def test_bracket_matches_vector_field_commutator(m):
    xs = sympy.symbols(f"x1:{2 * m + 1}")
    keys = [k for deg in range(1, 4) for k in grade_component(m, deg - 2)]
    if m == 2:
        keys = keys[::3]
    for r, s in itertools.product(keys, repeat=2):
        U, V = _sympy_field(r, xs), _sympy_field(s, xs)
        comm = [sympy.expand(sum(U[b] * sympy.diff(V[a], xs[b]) - V[b] * sympy.diff(U[a], xs[b])
                                 for b in range(2 * m))) for a in range(2 * m)]
        ours = [sympy.expand(e) for e in _sympy_poly_field(x_bracket(X(r), X(s)), xs)]
        assert comm == ours, (r, s)


def test_sp_iso_examples():
    E = lambda a, b: unit_matrix(4, a, b)  # noqa: E731
    assert sp_iso(X((2, 0, 0, 0))) == linalg.mat_scale(-2, E(1, 3))
    assert sp_iso(X((0, 0, 2, 0))) == linalg.mat_scale(2, E(3, 1))
    assert sp_iso(X((1, 0, 1, 0))) == linalg.mat_sub(E(1, 1), E(3, 3))
    assert sp_iso(X((1, 0, 0, 1))) == linalg.mat_sub(E(1, 2), E(4, 3))
    assert sp_iso(X((1, 1, 0, 0))) == linalg.mat_scale(-1, linalg.mat_add(E(1, 4), E(2, 3)))
    assert sp_iso(X((0, 0, 1, 1))) == linalg.mat_add(E(3, 2), E(4, 1))


def _symplectic_form(m):
    return linalg.matrix([[(1 if b == a + m else -1 if a == b + m else 0) for b in range(2 * m)]
                          for a in range(2 * m)])


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sp_iso_lands_in_sp(m):
    J = _symplectic_form(m)
    for k in grade_component(m, 0):
        A = sp_iso(X(k))
        assert linalg.mat_add(linalg.matmul(linalg.transpose(A), J), linalg.matmul(J, A)) == linalg.zeros(2 * m)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_sp_transport_and_roundtrip(m):
    assert verify_sp_transport(m).passed
    for label, _, mat in sp_basis(m):
        assert sp_iso(sp_iso_inverse(m, mat)) == mat


def test_cartan_weight_is_ad_eigenvalue():
    m = 2
    for n in range(0, 3):
        for k in grade_component(m, n):
            w = cartan_weight(k)
            for i in range(m):
                hi = [0] * 4
                hi[i] = hi[m + i] = 1
                assert x_bracket(X(hi), X(k)) == Fraction(w[i]) * X(k)


@pytest.mark.parametrize("m,n", [(1, 0), (1, 3), (2, 0), (2, 2), (3, 1)])
def test_highest_weight_unique(m, n):
    vs = highest_weight_vectors(m, n)
    assert len(vs) == 1
    lead = [0] * (2 * m)
    lead[0] = n + 2
    assert set(vs[0].terms) == {tuple(lead)}


@pytest.mark.parametrize("m,n,dim", [(1, 4, 7), (2, 1, 20), (2, 0, 10), (1, 0, 3), (3, 0, 21)])
def test_irreducible_component(m, n, dim):
    report = verify_irreducible_component(m, n)
    assert report.passed, report.to_dict()
    assert grade_dimension(m, n) == dim


def test_irreducible_component_guard():
    with pytest.raises(OverflowError):
        verify_irreducible_component(3, 3, guard=10)
