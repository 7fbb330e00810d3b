"""Named arrangements and flex-point constructions."""

from __future__ import annotations

import cmath

import numpy as np

from .census import DEFAULT_TOL, Arrangement, Component, is_smooth_cubic, pair_intersections
from .errors import NotSmooth, SingularPoint, UnknownExample
from .numeric import grad_eval, poly_eval, poly_gradient
from .poly import ComplexPoint, HomogeneousPoly, hessian_det, monomial_basis, numeric_coeffs, product, x, y, z

EXAMPLES = ("EL6", "EL7", "CPPP", "FERMAT")

# cube roots of unity; x^3 + y^3 = (x + y)(x + w y)(x + w^2 y)
_ROOTS = (1, cmath.exp(2j * cmath.pi / 3), cmath.exp(4j * cmath.pi / 3))

# Product of the nine inflectional tangents of the Fermat cubic. Frozen here;
# the test suite re-derives it from the Hessian.
FERMAT_FLEX_TANGENTS = (x**3 + y**3) * (y**3 + z**3) * (x**3 + z**3)


def fermat_cubic() -> HomogeneousPoly:
    return x**3 + y**3 + z**3


def _as_component(f) -> Component:
    if isinstance(f, Component):
        return f
    return Component("cubic", f)


def inflection_points(cubic, tol: float = DEFAULT_TOL, seed: int = 0) -> list[ComplexPoint]:
    """The nine flexes: common zeros of a smooth cubic and its Hessian curve."""
    comp = _as_component(cubic)
    if not is_smooth_cubic(comp, tol):
        raise NotSmooth("inflection points requested for a singular cubic")
    if comp.exact_poly is not None:
        hess = Component("cubic", hessian_det(comp.exact_poly))
    else:
        hess = Component("cubic", numeric_coeffs=_numeric_hessian(comp.numeric_coeffs))
    pts = pair_intersections(comp, hess, tol, seed)
    if len(pts) != 9 or any(k != 1 for _, k in pts):
        raise NotSmooth(f"expected 9 simple flexes, got multiplicities {[k for _, k in pts]}")
    return sorted((p for p, _ in pts), key=lambda p: p.rounded(8))


def _numeric_hessian(coeffs: np.ndarray) -> np.ndarray:
    # Hessian of a cubic is a cubic; recover its coefficients by sampling
    grads = poly_gradient(coeffs, 3)
    second = [poly_gradient(g, 2) for g in grads]
    rng = np.random.default_rng(1234)
    samples = rng.normal(size=(20, 3)) + 1j * rng.normal(size=(20, 3))
    vals = []
    for v in samples:
        H = np.array([[poly_eval(second[i][j], 1, v) for j in range(3)] for i in range(3)])
        vals.append(np.linalg.det(H))
    V = np.array([[np.prod(v ** np.array(mon)) for mon in monomial_basis(3)] for v in samples])
    sol, *_ = np.linalg.lstsq(V, np.array(vals), rcond=None)
    return sol


def tangent_line_at(f, p, tol: float = DEFAULT_TOL) -> Component:
    """Tangent line (gradient covector) of the curve f = 0 at a smooth point p."""
    if isinstance(f, Component):
        coeffs, deg = f.numeric_coeffs, f.degree
    else:
        coeffs, deg = numeric_coeffs(f), f.degree
    v = p.as_array() if isinstance(p, ComplexPoint) else np.asarray(p, dtype=complex)
    v = v / np.linalg.norm(v)
    g = grad_eval(coeffs, deg, v)
    if np.linalg.norm(g) < tol * max(1.0, np.abs(coeffs).max()):
        raise SingularPoint("gradient vanishes: point is singular")
    g = ComplexPoint.from_array(g).normalized().as_array()
    g[np.abs(g.imag) < 1e-15] = g[np.abs(g.imag) < 1e-15].real
    return Component("line", numeric_coeffs=g)


def _fermat_lines(pairs) -> list[Component]:
    out = []
    for i, j in pairs:
        for w in _ROOTS:
            c = [0, 0, 0]
            c[i], c[j] = 1, w
            if w == 1:
                out.append(Component.line(*c))
            else:
                out.append(Component("line", numeric_coeffs=np.array(c, dtype=complex)))
    return out


def example(name: str) -> Arrangement:
    name = name.upper()
    F = fermat_cubic()
    cubic = Component("cubic", F)
    if name == "FERMAT":
        return Arrangement([cubic], F, "Fermat cubic")
    if name == "EL6":
        return Arrangement([cubic, *_fermat_lines([(0, 1)])], F * (x**3 + y**3),
                           "Fermat cubic and the three lines of x^3 + y^3")
    if name == "EL7":
        comps = [cubic, *_fermat_lines([(0, 1)]), Component.line(0, 1, 1)]
        return Arrangement(comps, product([F, x**3 + y**3, y + z]),
                           "Fermat cubic, the three lines of x^3 + y^3, and y + z")
    if name == "CPPP":
        comps = [cubic, *_fermat_lines([(0, 1), (1, 2), (0, 2)])]
        return Arrangement(comps, F * FERMAT_FLEX_TANGENTS,
                           "Fermat cubic and its nine inflectional tangent lines")
    raise UnknownExample(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
