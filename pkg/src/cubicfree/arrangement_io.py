"""JSON arrangement files.

::

    {
      "metadata": "free-text label",
      "components": [
        {"kind": "cubic", "exact": [[num, den, ex, ey, ez], ...]},
        {"kind": "line", "numeric": [[re, im], [re, im], [re, im]]}
      ],
      "product": [[num, den, ex, ey, ez], ...]
    }

Exact rationals are written as integer pairs, never decimals. Numeric
coefficients follow monomial_basis order for the component's degree.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .census import Arrangement, Component
from .errors import ParseError
from .poly import HomogeneousPoly

_DEGREE = {"line": 1, "cubic": 3}


def terms_to_json(f: HomogeneousPoly) -> list[list[int]]:
    return [[c.numerator, c.denominator, *mon] for mon, c in f.sorted_terms()]


def terms_from_json(data, degree: int | None = None) -> HomogeneousPoly:
    try:
        rows = [tuple(int(v) for v in row) for row in data]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad term list: {exc}") from None
    if any(len(r) != 5 for r in rows):
        raise ParseError("each term must be [num, den, ex, ey, ez]")
    if any(r[1] <= 0 for r in rows):
        raise ParseError("denominators must be positive")
    degs = {sum(r[2:]) for r in rows}
    if len(degs) > 1:
        raise ParseError(f"terms are not homogeneous (degrees {sorted(degs)})")
    deg = degs.pop() if degs else degree
    if deg is None:
        raise ParseError("cannot infer the degree of an empty term list")
    if degree is not None and deg != degree:
        raise ParseError(f"expected degree {degree}, got {deg}")
    terms: dict = {}
    for num, den, *mon in rows:
        key = tuple(mon)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(num, den)
    return HomogeneousPoly(deg, terms)


def _numeric_to_json(coeffs: np.ndarray) -> list[list[float]]:
    return [[float(c.real) + 0.0, float(c.imag) + 0.0] for c in coeffs]


def component_to_json(c: Component) -> dict:
    out: dict = {"kind": c.kind}
    if c.exact_poly is not None:
        out["exact"] = terms_to_json(c.exact_poly)
    else:
        out["numeric"] = _numeric_to_json(c.numeric_coeffs)
    return out


def component_from_json(data: dict) -> Component:
    if not isinstance(data, dict):
        raise ParseError("component entries must be objects")
    kind = data.get("kind")
    if kind not in _DEGREE:
        raise ParseError(f"component kind must be 'line' or 'cubic', got {kind!r}")
    exact = terms_from_json(data["exact"], _DEGREE[kind]) if "exact" in data else None
    numeric = None
    if "numeric" in data:
        try:
            numeric = np.array([complex(float(re), float(im)) for re, im in data["numeric"]])
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad numeric coefficients: {exc}") from None
    try:
        return Component(kind, exact, numeric)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def arrangement_to_json(arr: Arrangement) -> dict:
    return {
        "metadata": arr.label,
        "components": [component_to_json(c) for c in arr.components],
        "product": terms_to_json(arr.product) if arr.product is not None else None,
    }


def arrangement_from_json(data) -> Arrangement:
    if not isinstance(data, dict):
        raise ParseError("arrangement file must hold a JSON object")
    comps = [component_from_json(c) for c in data.get("components") or []]
    product = terms_from_json(data["product"]) if data.get("product") else None
    if not comps and product is None:
        raise ParseError("arrangement needs components or a product polynomial")
    try:
        return Arrangement(comps, product, str(data.get("metadata", "")))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def dumps(arr: Arrangement) -> str:
    return json.dumps(arrangement_to_json(arr), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Arrangement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return arrangement_from_json(data)


def load(path) -> Arrangement:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)


def dump(arr: Arrangement, path) -> None:
    Path(path).write_text(dumps(arr))
