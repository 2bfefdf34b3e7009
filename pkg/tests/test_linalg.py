from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from hamrep import linalg

small = st.integers(-4, 4).map(Fraction)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_rank_and_nullspace_match_sympy(rows, cols, data):
    a = data.draw(matrices(rows, cols))
    oracle = sympy.Matrix(a)
    assert linalg.rank(a) == oracle.rank()
    basis = linalg.nullspace(a, cols)
    assert len(basis) == len(oracle.nullspace())
    for v in basis:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.data())
def test_inverse(d, data):
    a = linalg.matrix(data.draw(matrices(d, d)))
    if sympy.Matrix(a).det() == 0:
        return
    assert linalg.matmul(a, linalg.inverse(a)) == linalg.identity(d)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.data())
def test_echelon_basis_tracks_rank(n, data):
    vecs = data.draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=8))
    eb = linalg.EchelonBasis(n)
    for v in vecs:
        eb.add(v)
    assert len(eb) == linalg.rank(vecs)
    for v in vecs:
        assert eb.contains(v)


def test_solve_inconsistent():
    a = linalg.matrix([[1, 0], [1, 0]])
    assert linalg.solve(a, linalg.vector([1, 2])) is None
    assert linalg.solve(a, linalg.vector([2, 2]))[0] == 2
