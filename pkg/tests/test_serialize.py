from fractions import Fraction

import pytest

from hamrep import serialize
from hamrep.catj import ModuleElement
from hamrep.graded import X
from hamrep.interpolation import PolyEndo
from hamrep.repdata import IrreducibleSpec, sp_defining_rep
from hamrep.torus import d, h

from conftest import sp_rep


def test_rational_strings():
    assert serialize.q(Fraction(-3, 6)) == "-1/2"
    assert serialize.parse_q("4/2") == 2
    for bad in ("x", 1.5, True, "1/0"):
        with pytest.raises(serialize.ParseError):
            serialize.parse_q(bad)


def test_roundtrips():
    f = h((1, -2)) + Fraction(1, 3) * d(1, 2)
    assert serialize.torus_field_from_json(serialize.torus_field_to_json(f)) == f
    g = X((2, 1, 0, 0)) - Fraction(2, 5) * X((0, 0, 1, 1))
    assert serialize.poly_field_from_json(serialize.poly_field_to_json(g)) == g
    rep = sp_rep(2, (Fraction(1, 2), 0, 1, 0))
    assert serialize.rep_from_json(serialize.rep_to_json(rep)) == rep
    p = PolyEndo(1, 1, {(1, 0): ((Fraction(7, 3),),)})
    assert serialize.polyendo_from_json(serialize.polyendo_to_json(p)) == p
    spec = IrreducibleSpec(1, sp_defining_rep(1), (1, Fraction(1, 2)))
    back = serialize.spec_from_json(serialize.spec_to_json(spec))
    assert back.phi == spec.phi and back.mu == spec.mu
    x = ModuleElement(2, 2, {(1, 0): (1, Fraction(1, 2))})
    assert serialize.element_from_json(serialize.element_to_json(x, (0, 1))) == (x, (0, 1))


def test_rejects_duplicates_and_garbage(tmp_path):
    with pytest.raises(serialize.ParseError):
        serialize.rep_from_json({"m": 1, "dim": 1, "terms": [{"k": [0, 1], "matrix": [["1"]]}] * 2})
    with pytest.raises(serialize.ParseError):
        serialize.rep_from_json({"m": 1})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(serialize.ParseError):
        serialize.load(bad)
