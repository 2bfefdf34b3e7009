import itertools
from fractions import Fraction

import pytest
import sympy

from hamrep import linalg
from hamrep.exact import multi_factorial
from hamrep.repdata import (
    IrreducibleSpec,
    RepData,
    RepresentationError,
    direct_sum,
    eigenvalue_bound_check,
    from_sp_rep,
    is_irreducible,
    sp_defining_rep,
    sp_trivial_rep,
    validate_rep,
    zero_rep,
)

from conftest import sp_rep


def test_central_element_alone_fails(central):
    report = validate_rep(central)
    assert not report.passed
    w = report.checks[0].witness
    assert {"j": [0, 1], "k": [1, 0]} in w
    assert {"j": [1, 0], "k": [0, 1]} in w


def test_nonzero_central_charge_always_fails():
    # trace [A, B] = 0, so P^(0) = I can never be a commutator in finite dimensions
    one = ((1,),)
    for p, q in [((0,),), ((2,),)], [((1,),), ((3,),)]:
        rep = RepData(1, 1, {(0, 0): one, (1, 0): p, (0, 1): q})
        assert not validate_rep(rep).passed


def test_zero_rep_is_valid():
    assert validate_rep(zero_rep(2, 3)).passed


@pytest.mark.parametrize("m", [1, 2])
def test_from_sp_rep_valid(m):
    rep = sp_rep(m, tuple(Fraction(a, 3) for a in range(2 * m)))
    assert validate_rep(rep).passed
    assert rep.get((0,) * (2 * m)) == linalg.zeros(2 * m)
    assert all(sum(k) <= 2 for k in rep.P)
    assert rep.degree_bound == 3


def test_from_sp_rep_m1_keys():
    rep = sp_rep(1, (1, 0))
    assert list(rep.P) == [(0, 2), (1, 0), (1, 1), (2, 0)]
    assert rep.P[(2, 0)] == linalg.matrix([[0, -2], [0, 0]])
    assert rep.P[(0, 2)] == linalg.matrix([[0, 0], [2, 0]])
    assert rep.P[(1, 1)] == linalg.matrix([[1, 0], [0, -1]])
    assert rep.P[(1, 0)] == linalg.matrix([[-1, 0], [0, -1]])


def test_conjugation_invariance(sp4):
    g = linalg.matrix([[1, 2, 0, 0], [0, 1, 0, 3], [0, 0, 1, 0], [1, 0, 0, 1]])
    assert validate_rep(sp4.conjugate(g)).passed
    assert validate_rep(direct_sum(sp4, sp4.conjugate(g))).passed


def test_perturbation_is_caught(sp2):
    bad = sp2.replace((1, 1), linalg.matrix([[1, 1], [0, -1]]))
    report = validate_rep(bad)
    assert not report.passed and report.checks[0].witness


def test_bad_phi_rejected():
    phi = sp_defining_rep(1)
    phi[next(iter(phi))] = linalg.identity(2)
    with pytest.raises(RepresentationError):
        from_sp_rep(IrreducibleSpec(1, phi))
    with pytest.raises(RepresentationError):
        IrreducibleSpec(1, {"nope": linalg.identity(2)})


def test_require_irreducible():
    assert from_sp_rep(IrreducibleSpec(2, sp_defining_rep(2)), require_irreducible=True)
    with pytest.raises(RepresentationError):
        from_sp_rep(IrreducibleSpec(1, sp_trivial_rep(1, 2)), require_irreducible=True)


def test_is_irreducible():
    assert is_irreducible(list(sp_defining_rep(2).values()))
    assert not is_irreducible([linalg.block_diag(a, a) for a in sp_defining_rep(1).values()])
    assert is_irreducible(list(sp_trivial_rep(1).values()))


def test_eigenvalue_bound():
    rep = sp_rep(2)
    report = eigenvalue_bound_check(rep)
    assert report.passed
    assert report.checks[0].detail["count"] == 1
    mats = {(n, 0): linalg.identity(1) for n in range(1, 4)}
    report = eigenvalue_bound_check(RepData(1, 1, mats))
    assert not report.passed and report.checks[0].witness == 3


def _display_m(m, r, mu, literal):
    """The closed-form h(r) action on t^0 (x) V for the defining rep, read off the
    classification display term by term. ``literal`` keeps E_{i,j} - E_{m+i,m+j}
    in the mixed term and drops the r_j r_{m+i} terms."""
    N = 2 * m
    E = lambda a, b: sympy.Matrix(N, N, lambda x, y: 1 if (x, y) == (a - 1, b - 1) else 0)  # noqa: E731
    out = sympy.zeros(N, N)
    for i in range(1, m + 1):
        out += (r[m + i - 1] * mu[m + i - 1] - r[i - 1] * mu[i - 1]) * sympy.eye(N)
        out += r[m + i - 1] ** 2 * E(m + i, i)
        out += r[i - 1] * r[m + i - 1] * (E(i, i) - E(m + i, m + i))
        out -= r[i - 1] ** 2 * E(i, m + i)
    for i, j in itertools.combinations(range(1, m + 1), 2):
        out += r[m + i - 1] * r[m + j - 1] * (E(m + j, i) + E(m + i, j))
        if literal:
            out += r[i - 1] * r[m + j - 1] * (E(i, j) - E(m + i, m + j))
        else:
            out += r[i - 1] * r[m + j - 1] * (E(i, j) - E(m + j, m + i))
            out += r[j - 1] * r[m + i - 1] * (E(j, i) - E(m + i, m + j))
        out -= r[i - 1] * r[j - 1] * (E(i, m + j) + E(j, m + i))
    return out


def _our_h(rep, r):
    out = sympy.zeros(rep.dim, rep.dim)
    for k, p in rep.P.items():
        mono = sympy.Mul(*(x**e for x, e in zip(r, k))) / multi_factorial(k)
        out += mono * sympy.Matrix(p)
    return out


@pytest.mark.parametrize("m,literal", [(1, True), (2, False)])
def test_sign_conventions_match_closed_form(m, literal):
    """Coefficient matching in r; the defining rep is faithful, so equal
    matrices mean equal phi-arguments."""
    r = sympy.symbols(f"r1:{2 * m + 1}")
    mu = (Fraction(2), Fraction(-1, 2), Fraction(3), Fraction(5, 7))[: 2 * m]
    rep = sp_rep(m, mu)
    diff = (_our_h(rep, r) - _display_m(m, r, [sympy.Rational(x.numerator, x.denominator) for x in mu],
                                        literal)).expand()
    assert diff == sympy.zeros(2 * m, 2 * m)


def test_literal_display_is_not_sp_for_m2():
    r = sympy.symbols("r1:5")
    rep = sp_rep(2)
    assert (_our_h(rep, r) - _display_m(2, r, [0] * 4, literal=True)).expand() != sympy.zeros(4, 4)
