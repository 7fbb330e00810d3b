"""Floating-point intersection machinery for plane curves of low degree.

Curves are complex coefficient vectors in monomial_basis order. Intersection
points come from binary forms (restriction to a line, or a resultant after a
random unitary change of coordinates); root multiplicities are recovered by
clustering the roots and certifying each cluster as a multiple root.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import ProjectionDegenerate, SharedComponent
from .poly import fs_distance, monomial_basis

SHEAR_ATTEMPTS = 16


@lru_cache(maxsize=None)
def _exponents(deg: int) -> np.ndarray:
    return np.array(monomial_basis(deg), dtype=int)


def poly_eval(coeffs: np.ndarray, deg: int, v) -> complex:
    v = np.asarray(v, dtype=complex)
    E = _exponents(deg)
    return complex(np.sum(coeffs * np.prod(v[None, :] ** E, axis=1)))


def poly_gradient(coeffs: np.ndarray, deg: int) -> list[np.ndarray]:
    """Coefficient vectors (degree deg-1) of the three partial derivatives."""
    index = {mon: i for i, mon in enumerate(monomial_basis(deg - 1))}
    out = [np.zeros(len(index), dtype=complex) for _ in range(3)]
    for c, mon in zip(coeffs, monomial_basis(deg)):
        for i in range(3):
            if mon[i]:
                low = list(mon)
                low[i] -= 1
                out[i][index[tuple(low)]] += c * mon[i]
    return out


def grad_eval(coeffs: np.ndarray, deg: int, v) -> np.ndarray:
    return np.array([poly_eval(g, deg - 1, v) for g in poly_gradient(coeffs, deg)])


def unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    return v / np.linalg.norm(v)


# --- binary forms ---------------------------------------------------------

def binary_coeffs(fn, n: int) -> np.ndarray:
    """Coefficients a_i of a binary form sum a_i s^(n-i) t^i given as a callable.

    Sampled on (1, w^j) with w an (n+1)-th root of unity and inverted by FFT.
    """
    w = np.exp(2j * np.pi * np.arange(n + 1) / (n + 1))
    vals = np.array([fn(1.0, wj) for wj in w], dtype=complex)
    return np.fft.fft(vals) / (n + 1)


def _horner(c: np.ndarray, u: complex) -> complex:
    # c in numpy.roots order (highest power first)
    acc = 0j
    for a in c:
        acc = acc * u + a
    return acc


def _taylor(c: np.ndarray, u: complex) -> np.ndarray:
    """Taylor coefficients p^(j)(u)/j! for j = 0..n."""
    n = len(c) - 1
    out = np.zeros(n + 1, dtype=complex)
    q = np.array(c, dtype=complex)
    fact = 1.0
    for j in range(n + 1):
        out[j] = _horner(q, u) / fact
        q = np.polyder(q) if len(q) > 1 else np.array([0j])
        fact *= j + 1
    return out


def _radius_ladder(tol: float) -> list[float]:
    radii = []
    r = 1e-1
    while r > tol:
        radii.append(r)
        r /= 3.0
    radii.append(tol)
    return radii


def _components(idx: list[int], pts: np.ndarray, radius: float) -> list[list[int]]:
    parent = {i: i for i in idx}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            if abs(pts[i] - pts[j]) < radius:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in idx:
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _certify(c: np.ndarray, center: complex, k: int, tol: float) -> complex | None:
    """Refined location if ``center`` is a k-fold root of c, else None."""
    q = np.array(c, dtype=complex)
    for _ in range(k - 1):
        q = np.polyder(q)
    dq = np.polyder(q)
    u = center
    for _ in range(8):
        d = _horner(dq, u)
        if d == 0:
            break
        step = _horner(q, u) / d
        u -= step
        if abs(step) <= 1e-16 * max(1.0, abs(u)):
            break
    scale = np.sum(np.abs(c)) * max(1.0, abs(u)) ** (len(c) - 1)
    tay = _taylor(c, u)
    if np.all(np.abs(tay[:k]) <= tol * scale):
        return u
    return None


def univariate_roots(c: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    """Roots of a univariate polynomial (highest power first) with multiplicities.

    Roots are grouped by single linkage on a shrinking ladder of radii; a group
    of k roots is kept as one k-fold root only when its Newton-refined centroid
    passes a derivative test, otherwise it is split at the next radius. Groups
    still together at radius ``tol`` are merged unconditionally.
    """
    c = np.trim_zeros(np.asarray(c, dtype=complex), "f")
    if len(c) <= 1:
        return []
    c = c / np.max(np.abs(c))
    raw = np.roots(c)
    radii = _radius_ladder(tol)
    out: list[tuple[complex, int]] = []

    def split(idx, level):
        for comp in _components(idx, raw, radii[level]):
            k = len(comp)
            centre = complex(np.mean(raw[comp]))
            if k == 1:
                out.append((_certify(c, centre, 1, np.inf), 1))
                continue
            refined = _certify(c, centre, k, tol)
            if refined is not None:
                out.append((refined, k))
            elif level + 1 < len(radii):
                split(comp, level + 1)
            else:
                out.append((centre, k))

    split(list(range(len(raw))), 0)
    return out


def _random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    Z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def projective_roots(a: np.ndarray, tol: float, rng: np.random.Generator) -> list[tuple[np.ndarray, int]]:
    """Roots on P^1 of the binary form with coefficients ``a`` (s-power descending).

    A random unitary change of (s, t) keeps every root at finite, moderate u.
    """
    n = len(a) - 1
    norm = np.linalg.norm(a)
    if norm == 0:
        raise SharedComponent("binary form vanishes identically")

    def g(s, t):
        return sum(a[i] * s ** (n - i) * t**i for i in range(n + 1))

    best = None
    for _ in range(8):
        R = _random_unitary(rng, 2)
        b = binary_coeffs(lambda s, t: g(*(R @ np.array([s, t]))), n)
        # roots of b(u, 1) are bounded by 1 + max|b_i / b_0|
        bound = np.max(np.abs(b[1:])) / abs(b[0]) if b[0] != 0 else np.inf
        if best is None or bound < best[0]:
            best = (bound, R, b)
        if bound < 10:
            break
    _, R, b = best
    roots = univariate_roots(b, tol)
    return [(unit(R @ np.array([u, 1.0])), k) for u, k in roots]


# --- curve intersections --------------------------------------------------

def line_points(line: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal P, Q with line(P) = line(Q) = 0."""
    _, _, vh = np.linalg.svd(np.asarray(line, dtype=complex).reshape(1, 3))
    return np.conj(vh[1]), np.conj(vh[2])


def intersect_line_line(a: np.ndarray, b: np.ndarray, tol: float):
    a, b = unit(a), unit(b)
    p = np.cross(a, b)
    if np.linalg.norm(p) < tol:
        raise SharedComponent("the two lines coincide")
    return [(unit(p), 1)]


def intersect_curve_line(c: np.ndarray, deg: int, line: np.ndarray, tol: float, rng):
    c = unit(c)
    P, Q = line_points(line)
    a = binary_coeffs(lambda s, t: poly_eval(c, deg, s * P + t * Q), deg)
    if np.linalg.norm(a) < tol:
        raise SharedComponent("line is a component of the curve")
    return [(unit(s * P + t * Q), k) for (s, t), k in projective_roots(a, tol, rng)]


def _sylvester_det(p: np.ndarray, q: np.ndarray) -> complex:
    m, n = len(p) - 1, len(q) - 1
    S = np.zeros((m + n, m + n), dtype=complex)
    for i in range(n):
        S[i, i:i + m + 1] = p
    for i in range(m):
        S[n + i, i:i + n + 1] = q
    return complex(np.linalg.det(S))


def _intersect_sheared(F, da, G, db, tol, rng):
    A = _random_unitary(rng, 3)
    Fs = lambda v: poly_eval(F, da, A @ np.asarray(v, dtype=complex))
    Gs = lambda v: poly_eval(G, db, A @ np.asarray(v, dtype=complex))
    # the projection centre (0:0:1) must lie off both curves
    if abs(Fs((0, 0, 1))) < 1e-3 or abs(Gs((0, 0, 1))) < 1e-3:
        raise ProjectionDegenerate("projection centre too close to a curve")

    def zc(fn, deg, xv, yv):
        return binary_coeffs(lambda s, t: fn((xv * s, yv * s, t)), deg)[::-1]

    n = da * db
    res = binary_coeffs(lambda s, t: _sylvester_det(zc(Fs, da, s, t), zc(Gs, db, s, t)), n)
    if np.linalg.norm(res) < tol:
        raise SharedComponent("resultant vanishes identically")
    out = []
    for (s, t), k in projective_roots(res, tol, rng):
        zroots = np.roots(zc(Fs, da, s, t))
        vals = sorted(
            (abs(Gs((s, t, zr))) / max(1.0, abs(zr)) ** db, i) for i, zr in enumerate(zroots)
        )
        if len(vals) > 1 and vals[1][0] < 1e-6:
            z1, z2 = zroots[vals[0][1]], zroots[vals[1][1]]
            if fs_distance((s, t, z1), (s, t, z2)) > 1e-4:
                raise ProjectionDegenerate("two intersection points share a projection line")
        zr = zroots[vals[0][1]]
        pt = unit(A @ np.array([s, t, zr]))
        if abs(poly_eval(F, da, pt)) > 1e-5 or abs(poly_eval(G, db, pt)) > 1e-5:
            raise ProjectionDegenerate("back-substitution failed")
        out.append((pt, k))
    if sum(k for _, k in out) != n:
        raise ProjectionDegenerate("multiplicities do not add up to the Bezout number")
    return out


def intersect_curves(F: np.ndarray, da: int, G: np.ndarray, db: int, tol: float, seed: int = 0):
    """All common points of two plane curves with intersection multiplicities."""
    F, G = unit(F), unit(G)
    if da == 1 and db == 1:
        return intersect_line_line(F, G, tol)
    rng = np.random.default_rng([seed, 0])
    if db == 1:
        return intersect_curve_line(F, da, G, tol, rng)
    if da == 1:
        return intersect_curve_line(G, db, F, tol, rng)
    last = None
    for attempt in range(SHEAR_ATTEMPTS):
        rng = np.random.default_rng([seed, attempt])
        try:
            return _intersect_sheared(F, da, G, db, tol, rng)
        except ProjectionDegenerate as exc:
            last = exc
    raise ProjectionDegenerate(f"no admissible projection in {SHEAR_ATTEMPTS} attempts: {last}")


def numeric_product(curves) -> tuple[np.ndarray, int]:
    """Expand a product of ``(coeffs, degree)`` curves numerically."""
    acc: dict[tuple[int, int, int], complex] = {(0, 0, 0): 1.0}
    total = 0
    for coeffs, deg in curves:
        nxt: dict[tuple[int, int, int], complex] = {}
        for mon, c in acc.items():
            for mon2, c2 in zip(monomial_basis(deg), coeffs):
                if c2 == 0:
                    continue
                key = (mon[0] + mon2[0], mon[1] + mon2[1], mon[2] + mon2[2])
                nxt[key] = nxt.get(key, 0) + c * c2
        acc = nxt
        total += deg
    return np.array([acc.get(mon, 0) for mon in monomial_basis(total)], dtype=complex), total
