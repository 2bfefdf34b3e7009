"""JSON forms of the package's values.

Rationals are strings "p/q" (or "p"), multi-indices are integer arrays.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import exact
from .catj import ModuleElement
from .graded import PolyField
from .interpolation import PolyEndo
from .repdata import IrreducibleSpec, RepData
from .torus import TorusField


class ParseError(ValueError):
    """Malformed JSON payload."""


def q(x) -> str:
    return exact.format_rational(x)


def parse_q(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


def _ints(xs) -> tuple:
    if not isinstance(xs, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in xs):
        raise ParseError(f"expected an integer array, got {xs!r}")
    return tuple(xs)


def matrix_to_json(a) -> list:
    return [[q(x) for x in row] for row in a]


def matrix_from_json(rows) -> tuple:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a list of rows")
    return tuple(tuple(parse_q(x) for x in row) for row in rows)


def torus_field_to_json(f: TorusField) -> dict:
    return {
        "m": f.m,
        "d": [{"i": i, "c": q(c)} for i, c in sorted(f.d_terms.items())],
        "h": [{"r": list(r), "c": q(c)} for r, c in sorted(f.h_terms.items())],
    }


def torus_field_from_json(obj) -> TorusField:
    try:
        return TorusField(
            obj["m"],
            {t["i"]: parse_q(t["c"]) for t in obj.get("d", [])},
            {_ints(t["r"]): parse_q(t["c"]) for t in obj.get("h", [])},
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad TorusField: {exc}") from exc


def poly_field_to_json(f: PolyField) -> dict:
    return {"m": f.m, "terms": [{"r": list(r), "c": q(c)} for r, c in sorted(f.terms.items())]}


def poly_field_from_json(obj) -> PolyField:
    try:
        return PolyField(obj["m"], {_ints(t["r"]): parse_q(t["c"]) for t in obj["terms"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad PolyField: {exc}") from exc


def rep_to_json(rep: RepData) -> dict:
    return {
        "m": rep.m,
        "dim": rep.dim,
        "degree_bound": rep.degree_bound,
        "terms": [{"k": list(k), "matrix": matrix_to_json(p)} for k, p in rep.P.items()],
    }


def rep_from_json(obj) -> RepData:
    try:
        terms = {}
        for t in obj["terms"]:
            k = _ints(t["k"])
            if k in terms:
                raise ParseError(f"duplicate key {list(k)}")
            terms[k] = matrix_from_json(t["matrix"])
        return RepData(obj["m"], obj["dim"], terms, obj.get("degree_bound"))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad RepData: {exc}") from exc


def polyendo_to_json(p: PolyEndo) -> dict:
    return {
        "m": p.m,
        "dim": p.dim,
        "terms": [{"k": list(k), "matrix": matrix_to_json(c)} for k, c in p.coeffs.items()],
        "total_degree": p.total_degree,
    }


def polyendo_from_json(obj) -> PolyEndo:
    try:
        return PolyEndo(obj["m"], obj["dim"],
                        {_ints(t["k"]): matrix_from_json(t["matrix"]) for t in obj["terms"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad PolyEndo: {exc}") from exc


def spec_to_json(spec: IrreducibleSpec) -> dict:
    return {
        "m": spec.m,
        "phi": {lab: matrix_to_json(a) for lab, a in spec.phi.items()},
        "mu": [q(x) for x in spec.mu],
    }


def spec_from_json(obj) -> IrreducibleSpec:
    try:
        return IrreducibleSpec(
            obj["m"],
            {lab: matrix_from_json(a) for lab, a in obj["phi"].items()},
            tuple(parse_q(x) for x in obj["mu"]),
        )
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"bad IrreducibleSpec: {exc}") from exc


def element_to_json(x: ModuleElement, lam) -> dict:
    return {
        "lambda": [q(c) for c in lam],
        "terms": [{"s": list(s), "v": [q(c) for c in v]} for s, v in sorted(x.terms.items())],
    }


def element_from_json(obj) -> tuple[ModuleElement, tuple]:
    try:
        lam = tuple(parse_q(c) for c in obj["lambda"])
        terms = {_ints(t["s"]): tuple(parse_q(c) for c in t["v"]) for t in obj["terms"]}
        if not terms:
            raise ParseError("cannot infer rank of an empty element")
        dim = len(next(iter(terms.values())))
        return ModuleElement(len(lam), dim, terms), lam
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad ModuleElement: {exc}") from exc


def load(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def dump(obj: Any) -> str:
    return json.dumps(obj, indent=2)
