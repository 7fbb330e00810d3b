"""Numeric singularity census of cubic-line arrangements.

All pairwise intersection points are computed in floating point, merged into
projective clusters, and each cluster is classified from its branch count and
pairwise intersection multiplicities:

* two branches meeting with multiplicity 1 -> A1
* two branches meeting with multiplicity 3 -> A5
* three pairwise transverse branches       -> D4

Anything else is outside the supported class and raises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .combinatorics import WeakCombinatorics, count_satisfied
from .errors import (
    CountMismatch,
    NotSmooth,
    SharedComponent,
    StabilizationFailure,
    UnsupportedSingularity,
)
from .jacobian import SingularityType, total_tjurina_algebraic
from .numeric import (
    fs_distance,
    grad_eval,
    intersect_curves,
    numeric_product,
    poly_eval,
    poly_gradient,
    unit,
)
from .poly import ComplexPoint, HomogeneousPoly, dim_graded, monomial_basis, numeric_coeffs, product

DEFAULT_TOL = 1e-9

_DEGREE = {"line": 1, "cubic": 3}


@dataclass
class Component:
    kind: str
    exact_poly: HomogeneousPoly | None = None
    numeric_coeffs: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in _DEGREE:
            raise ValueError(f"unknown component kind {self.kind!r}")
        if self.exact_poly is None and self.numeric_coeffs is None:
            raise ValueError("component needs an exact or a numeric form")
        deg = self.degree
        if self.exact_poly is not None and self.exact_poly.degree != deg:
            raise ValueError(f"{self.kind} must have degree {deg}")
        if self.numeric_coeffs is None:
            self.numeric_coeffs = numeric_coeffs(self.exact_poly)
        else:
            self.numeric_coeffs = np.asarray(self.numeric_coeffs, dtype=complex)
            if self.numeric_coeffs.shape != (dim_graded(deg),):
                raise ValueError(f"{self.kind} needs {dim_graded(deg)} numeric coefficients")
            if self.exact_poly is not None:
                ref = numeric_coeffs(self.exact_poly)
                if not np.allclose(self.numeric_coeffs, ref, rtol=1e-12, atol=1e-12 * np.abs(ref).max()):
                    raise ValueError("exact and numeric forms disagree")

    @classmethod
    def line(cls, a, b, c) -> "Component":
        coeffs = [a, b, c]
        if all(isinstance(v, int) for v in coeffs):
            return cls("line", HomogeneousPoly.linear(a, b, c))
        return cls("line", numeric_coeffs=np.array(coeffs, dtype=complex))

    @classmethod
    def cubic(cls, f: HomogeneousPoly) -> "Component":
        return cls("cubic", f)

    @property
    def degree(self) -> int:
        return _DEGREE[self.kind]

    def __call__(self, p) -> complex:
        return poly_eval(self.numeric_coeffs, self.degree, _arr(p))

    def gradient_at(self, p) -> np.ndarray:
        return grad_eval(self.numeric_coeffs, self.degree, _arr(p))


def _arr(p) -> np.ndarray:
    return p.as_array() if isinstance(p, ComplexPoint) else np.asarray(p, dtype=complex)


@dataclass
class Arrangement:
    components: list[Component]
    product: HomogeneousPoly | None = None
    label: str = ""

    def __post_init__(self):
        if self.components and self.product is not None and self.product.degree != self.m:
            raise ValueError(f"product has degree {self.product.degree}, expected {self.m}")

    @property
    def k(self) -> int:
        return sum(c.kind == "cubic" for c in self.components)

    @property
    def d(self) -> int:
        return sum(c.kind == "line" for c in self.components)

    @property
    def m(self) -> int:
        if not self.components and self.product is not None:
            return self.product.degree
        return 3 * self.k + self.d

    def exact_product(self, max_den: int = 1000, tol: float = 1e-9) -> HomogeneousPoly | None:
        """The product polynomial, recovered from the components when not stored.

        Numeric components contribute only if the expanded product, scaled so its
        first significant coefficient is 1, rounds to small rationals within ``tol``.
        """
        if self.product is not None:
            return self.product
        if not self.components:
            return None
        if all(c.exact_poly is not None for c in self.components):
            return product(c.exact_poly for c in self.components)
        coeffs, deg = numeric_product((c.numeric_coeffs, c.degree) for c in self.components)
        big = np.abs(coeffs) > 1e-6 * np.abs(coeffs).max()
        coeffs = coeffs / coeffs[np.argmax(big)]  # first significant coefficient -> 1
        terms = {}
        for mon, c in zip(monomial_basis(deg), coeffs):
            q = Fraction(c.real).limit_denominator(max_den)
            if abs(c - float(q)) > tol:
                return None
            if q:
                terms[mon] = q
        return HomogeneousPoly(deg, terms)


@dataclass
class SingularPointRecord:
    location: ComplexPoint
    members: list[int]
    pairwise_mult: dict[tuple[int, int], int]
    classification: SingularityType | None = None

    def to_dict(self) -> dict:
        return {
            "location": self.location.rounded(),
            "members": list(self.members),
            "pairwise_mult": [[i, j, m] for (i, j), m in sorted(self.pairwise_mult.items())],
            "type": self.classification.name if self.classification else None,
        }


@dataclass
class CensusResult:
    wc: WeakCombinatorics
    points: list[SingularPointRecord]
    seed: int
    tol: float
    min_gap: float | None = None
    pair_totals: dict[tuple[int, int], int] = field(default_factory=dict)

    def __iter__(self):
        return iter((self.wc, self.points))

    def to_dict(self) -> dict:
        return {
            "weak_combinatorics": self.wc.to_dict(),
            "points": [p.to_dict() for p in self.points],
            "seed": self.seed,
            "tol": self.tol,
            "min_cluster_gap": None if self.min_gap is None else float(f"{self.min_gap:.6g}"),
        }


def pair_intersections(a: Component, b: Component, tol: float = DEFAULT_TOL, seed: int = 0):
    """Common points of two components with multiplicities summing to deg(a)*deg(b)."""
    pts = intersect_curves(a.numeric_coeffs, a.degree, b.numeric_coeffs, b.degree, tol, seed)
    total = sum(k for _, k in pts)
    if total != a.degree * b.degree:
        raise SharedComponent(f"multiplicities sum to {total}, expected {a.degree * b.degree}")
    return [(ComplexPoint.from_array(p).normalized(), k) for p, k in pts]


def cluster(hits, tol: float = DEFAULT_TOL) -> list[SingularPointRecord]:
    """Merge ``(point, i, j, mult)`` hits lying within ``tol`` of each other."""
    recs: list[tuple[list[ComplexPoint], dict]] = []
    for point, i, j, mult in hits:
        for pts, table in recs:
            if any(point.distance(q) < tol for q in pts):
                pts.append(point)
                key = (min(i, j), max(i, j))
                table[key] = table.get(key, 0) + mult
                break
        else:
            recs.append(([point], {(min(i, j), max(i, j)): mult}))
    out = []
    for pts, table in recs:
        members = sorted({c for pair in table for c in pair})
        out.append(SingularPointRecord(pts[0].normalized(), members, table))
    return out


def classify_point(rec: SingularPointRecord, components: list[Component] | None = None,
                   tol: float = DEFAULT_TOL) -> SingularityType:
    n = len(rec.members)
    mults = rec.pairwise_mult
    if n == 2:
        (mult,) = mults.values()
        if mult == 1:
            return SingularityType.A1
        if mult == 3:
            return SingularityType.A5
        raise UnsupportedSingularity(f"two branches with contact order {mult} at {rec.location.rounded(6)}")
    if n == 3:
        pairs = list(itertools.combinations(rec.members, 2))
        if len(mults) != 3 or any(mults.get(p) != 1 for p in pairs):
            raise UnsupportedSingularity(f"non-ordinary triple point {sorted(mults.items())}")
        if components is not None:
            grads = [components[i].gradient_at(rec.location) for i in rec.members]
            for g1, g2 in itertools.combinations(grads, 2):
                if fs_distance(g1, g2) < tol:
                    raise UnsupportedSingularity("triple point with tangent branches")
        return SingularityType.D4
    raise UnsupportedSingularity(f"{n} branches through one point")


def is_smooth_cubic(c: Component, tol: float = DEFAULT_TOL) -> bool:
    if c.kind != "cubic":
        raise ValueError("not a cubic component")
    if c.exact_poly is not None:
        try:
            return total_tjurina_algebraic(c.exact_poly) == 0
        except StabilizationFailure:
            return False
    coeffs = unit(c.numeric_coeffs)
    gx, gy, gz = poly_gradient(coeffs, 3)
    if min(np.linalg.norm(g) for g in (gx, gy, gz)) < tol:
        return False  # a vanishing partial means a cone
    try:
        common = intersect_curves(gx, 2, gy, 2, tol)
    except SharedComponent:
        return False
    return all(abs(poly_eval(gz, 2, p)) > np.sqrt(tol) for p, _ in common)


def census(arr: Arrangement, tol: float = DEFAULT_TOL, seed: int = 0) -> CensusResult:
    comps = arr.components
    for idx, c in enumerate(comps):
        if c.kind == "cubic" and not is_smooth_cubic(c, tol):
            raise NotSmooth(f"component {idx} is not a smooth cubic")
    hits = []
    totals = {}
    for i, j in itertools.combinations(range(len(comps)), 2):
        pts = pair_intersections(comps[i], comps[j], tol, seed)
        totals[(i, j)] = sum(k for _, k in pts)
        hits.extend((p, i, j, k) for p, k in pts)
    points = cluster(hits, tol)
    for rec in points:
        rec.classification = classify_point(rec, comps, tol)
    counts = {t: sum(r.classification is t for r in points) for t in SingularityType}
    wc = WeakCombinatorics(
        arr.k, arr.d, counts[SingularityType.A1], counts[SingularityType.D4], counts[SingularityType.A5]
    )
    if not count_satisfied(wc):
        raise CountMismatch(f"census {wc} violates the intersection count")
    gaps = [a.location.distance(b.location) for a, b in itertools.combinations(points, 2)]
    points.sort(key=lambda r: (r.members, r.location.rounded(8)))
    return CensusResult(wc, points, seed, tol, min(gaps) if gaps else None, totals)
