import itertools
import pickle
from fractions import Fraction

import pytest

from hamrep import linalg
from hamrep.catj import (
    CatJModule,
    ModuleElement,
    act,
    act_d,
    act_h,
    act_laurent,
    big_h,
    cyclicity_probe,
    verify_module_axioms,
)
from hamrep.exact import monomial_power, multi_factorial
from hamrep.repdata import RepData, direct_sum, zero_rep
from hamrep.torus import bracket, d, h

from conftest import sp_rep


def test_d_action_example():
    mod = CatJModule(zero_rep(1), (Fraction(1, 2), 0))
    x = ModuleElement.single((2, 0), (1,))
    assert act_d(mod, 1, x) == Fraction(5, 2) * x
    assert act_d(mod, 2, x).is_zero()


def test_h_action_trivial_rep():
    mod = CatJModule(zero_rep(1))
    x = ModuleElement.single((0, 1), (1,))
    assert act_h(mod, (1, 0), x) == -1 * ModuleElement.single((1, 1), (1,))
    assert act_h(mod, (0, 0), x).is_zero()


def test_laurent_shift():
    mod = CatJModule(zero_rep(1))
    x = ModuleElement.single((0, 1), (3,))
    assert act_laurent(mod, (2, -1), x) == ModuleElement.single((2, 0), (3,))


def test_h_zero_kills_even_with_central_charge():
    rep = RepData(1, 1, {(0, 0): ((1,),)})
    assert big_h(rep, (0, 0)) == linalg.zeros(1)
    assert big_h(rep, (1, 0)) == linalg.identity(1)


def _grouped(rep, r):
    """P^(0) + sum_i r_i P^(e_i) + r_{m+i} P^(e_{m+i}) + sum_{|k|>1} r^k/k! P^(k)."""
    n = rep.n
    out = rep.get((0,) * n)
    for a in range(n):
        e = tuple(int(b == a) for b in range(n))
        out = linalg.mat_add(out, linalg.mat_scale(r[a], rep.get(e)))
    for k, p in rep.P.items():
        if sum(k) > 1:
            out = linalg.mat_add(out, linalg.mat_scale(monomial_power(r, k) / multi_factorial(k), p))
    return out


def test_big_h_matches_grouped_form():
    P = {(0, 0): ((1, 2), (0, 1)), (1, 0): ((0, 1), (1, 0)), (0, 1): ((3, 0), (0, 0)),
         (2, 1): ((1, 1), (1, 1)), (0, 3): ((0, 0), (5, 0))}
    rep = RepData(1, 2, P)
    for r in itertools.product(range(-4, 5), repeat=2):
        if any(r):
            assert big_h(rep, r) == _grouped(rep, r)
    rep4 = sp_rep(2, (1, 2, 3, 4))
    for r in itertools.product(range(-2, 3), repeat=4):
        if any(r) and sum(map(abs, r)) <= 4:
            assert big_h(rep4, r) == _grouped(rep4, r)


def test_trivial_module_is_adjoint_action():
    m = 1
    mod = CatJModule(zero_rep(m))
    fields = [d(m, 1), d(m, 2)] + [h(r) for r in itertools.product(range(-2, 3), repeat=2) if any(r)]
    for f in fields:
        for s in itertools.product(range(-2, 3), repeat=2):
            if not any(s):
                continue
            image = act(mod, f, ModuleElement.single(s, (1,)))
            br = bracket(f, h(s))
            expected = ModuleElement(2, 1, {r: (c,) for r, c in br.h_terms.items()})
            assert image == expected, (f, s)


@pytest.mark.parametrize("m,lam", [(1, (Fraction(1, 2), 0)), (2, (0, 1, Fraction(1, 3), 0))])
def test_module_axioms(m, lam):
    mod = CatJModule(sp_rep(m, (1,) + (0,) * (2 * m - 1)), lam)
    report = verify_module_axioms(mod, samples=80, seed=1)
    assert report.passed, report.to_dict()


def test_corrupted_rep_fails_axioms():
    rep = sp_rep(1, (1, 0))
    bad = rep.replace((2, 0), linalg.matrix([[0, -2], [1, 0]]))
    report = verify_module_axioms(CatJModule(bad), samples=50, seed=0)
    assert not report.passed
    failed = {c.name for c in report.failures()}
    assert "H-commutator" in failed
    assert all(c.witness for c in report.failures())


def test_module_pickles():
    mod = CatJModule(sp_rep(1, (1, 0)), (1, 2))
    back = pickle.loads(pickle.dumps(mod))
    assert back.rep == mod.rep and back.lam == mod.lam


def test_probe_on_defining_sp2():
    mod = CatJModule(sp_rep(1, (1, 1)))
    shallow = cyclicity_probe(mod, 2, (1, 0))
    # at depth 2 only h(-r)h(r) returns to weight 0, and it acts by a scalar
    assert shallow.info["span_dimension"] == 1
    deep = cyclicity_probe(mod, 2, (1, 0), depth=3)
    assert deep.info["span_dimension"] == 2
    assert deep.passed
    assert deep.info["label"] == "HEURISTIC"


def test_probe_stays_in_block():
    block = sp_rep(1, (1, 1))
    mod = CatJModule(direct_sum(block, block))
    report = cyclicity_probe(mod, 2, (1, 0, 0, 0), depth=3)
    assert not report.passed
    assert report.info["span_dimension"] == 2
    for vec in report.info["span"]:
        assert vec[2:] == ["0", "0"]
