"""Exact homogeneous polynomials in x, y, z over the rationals.

Monomials are plain ``(ex, ey, ez)`` tuples. Within a graded piece they are
ordered graded-lex with x > y > z, i.e. by descending ``(ex, ey)``; every
matrix layout in the package follows this order.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .errors import DegreeUnderflow, ParseError

Monomial = tuple[int, int, int]

VARS = ("x", "y", "z")


@lru_cache(maxsize=None)
def monomial_basis(t: int) -> tuple[Monomial, ...]:
    """All monomials of degree ``t`` in graded-lex order (x > y > z)."""
    if t < 0:
        return ()
    return tuple((a, b, t - a - b) for a in range(t, -1, -1) for b in range(t - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(t: int) -> dict[Monomial, int]:
    return {mon: i for i, mon in enumerate(monomial_basis(t))}


def dim_graded(t: int) -> int:
    """dim S_t = (t+1)(t+2)/2, zero for negative t."""
    return (t + 1) * (t + 2) // 2 if t >= 0 else 0


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed in exact polynomials")
    return Fraction(c)


class HomogeneousPoly:
    """Immutable homogeneous polynomial with rational coefficients.

    The zero polynomial keeps an explicit degree so that graded maps stay total.
    """

    __slots__ = ("_degree", "_terms", "_hash")

    def __init__(self, degree: int, terms: Mapping[Monomial, object] | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Monomial, Fraction] = {}
        for mon, c in (terms or {}).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != 3 or min(mon) < 0 or sum(mon) != degree:
                raise ValueError(f"monomial {mon} does not have degree {degree}")
            c = _to_fraction(c)
            if c:
                clean[mon] = clean.get(mon, Fraction(0)) + c
                if not clean[mon]:
                    del clean[mon]
        self._degree = degree
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, degree: int, terms: dict[Monomial, Fraction]) -> "HomogeneousPoly":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._degree = degree
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c=1) -> "HomogeneousPoly":
        return cls(0, {(0, 0, 0): c})

    @classmethod
    def variable(cls, name: str) -> "HomogeneousPoly":
        i = VARS.index(name)
        mon = tuple(1 if j == i else 0 for j in range(3))
        return cls(1, {mon: 1})

    @classmethod
    def linear(cls, a, b, c) -> "HomogeneousPoly":
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mon: Monomial) -> Fraction:
        return self._terms.get(tuple(mon), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self._degree == other._degree and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._degree, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other._degree != self._degree:
            raise ValueError("cannot add polynomials of different degrees")
        out = dict(self._terms)
        for mon, c in other._terms.items():
            s = out.get(mon, 0) + c
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
        return HomogeneousPoly._raw(self._degree, out)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly._raw(self._degree, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def scale(self, c) -> "HomogeneousPoly":
        c = _to_fraction(c)
        if not c:
            return HomogeneousPoly(self._degree)
        return HomogeneousPoly._raw(self._degree, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, HomogeneousPoly):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomogeneousPoly":
        out = HomogeneousPoly.constant(1)
        for _ in range(n):
            out = multiply(out, self)
        return out

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def dense_coeffs(self) -> list[Fraction]:
        """Coefficient vector in monomial_basis order."""
        return [self.coeff(mon) for mon in monomial_basis(self._degree)]

    def primitive_integer(self) -> "HomogeneousPoly":
        """Scale to coprime integer coefficients (sign unchanged)."""
        return self.scale(integer_content_scale(self._terms.values()) if self._terms else 1)

    def __call__(self, x, y, z):
        return sum(c * x**a * y**b * z**e for (a, b, e), c in self._terms.items())

    def __repr__(self) -> str:
        return f"HomogeneousPoly({self._degree}, {to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)


def integer_content_scale(coeffs: Iterable[Fraction]) -> Fraction:
    """Factor turning a coefficient list into coprime integers."""
    coeffs = list(coeffs)
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    num = math.gcd(*(int(c * den) for c in coeffs)) if coeffs else 1
    return Fraction(den, num or 1)


def multiply(a: HomogeneousPoly, b: HomogeneousPoly) -> HomogeneousPoly:
    deg = a.degree + b.degree
    out: dict[Monomial, Fraction] = {}
    for (a1, a2, a3), c in a._terms.items():
        for (b1, b2, b3), d in b._terms.items():
            mon = (a1 + b1, a2 + b2, a3 + b3)
            out[mon] = out.get(mon, 0) + c * d
    return HomogeneousPoly._raw(deg, {m: c for m, c in out.items() if c})


def product(polys: Iterable[HomogeneousPoly]) -> HomogeneousPoly:
    out = HomogeneousPoly.constant(1)
    for p in polys:
        out = multiply(out, p)
    return out


def _var_index(var) -> int:
    if isinstance(var, int):
        return var
    try:
        return VARS.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}") from None


def partial(f: HomogeneousPoly, var) -> HomogeneousPoly:
    if f.degree < 1:
        raise DegreeUnderflow("cannot differentiate a constant")
    i = _var_index(var)
    out = {}
    for mon, c in f._terms.items():
        e = mon[i]
        if e:
            new = list(mon)
            new[i] -= 1
            out[tuple(new)] = c * e
    return HomogeneousPoly._raw(f.degree - 1, out)


def gradient(f: HomogeneousPoly) -> tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]:
    return partial(f, 0), partial(f, 1), partial(f, 2)


def hessian_det(f: HomogeneousPoly) -> HomogeneousPoly:
    if f.degree < 2:
        raise DegreeUnderflow("Hessian needs degree >= 2")
    grad = gradient(f)
    H = [[partial(g, j) for j in range(3)] for g in grad]
    minor = lambda r1, r2, c1, c2: H[r1][c1] * H[r2][c2] - H[r1][c2] * H[r2][c1]
    det = H[0][0] * minor(1, 2, 1, 2) - H[0][1] * minor(1, 2, 0, 2) + H[0][2] * minor(1, 2, 0, 1)
    if det.is_zero():
        return HomogeneousPoly(3 * (f.degree - 2))
    return det


def compose_linear(f: HomogeneousPoly, g) -> HomogeneousPoly:
    """Return f(g·(x, y, z)) for a 3x3 matrix ``g`` of rationals."""
    rows = [HomogeneousPoly.linear(*row) for row in g]
    powers = [[HomogeneousPoly.constant(1)] for _ in range(3)]
    for i in range(3):
        for _ in range(f.degree):
            powers[i].append(multiply(powers[i][-1], rows[i]))
    out = HomogeneousPoly(f.degree)
    for (a, b, c), coef in f._terms.items():
        out = out + multiply(multiply(powers[0][a], powers[1][b]), powers[2][c]).scale(coef)
    return out


def evaluate_exact(f: HomogeneousPoly, point) -> Fraction:
    x, y, z = (Fraction(v) for v in point)
    return Fraction(f(x, y, z))


def evaluate_complex(f: HomogeneousPoly, p) -> complex:
    if isinstance(p, ComplexPoint):
        x, y, z = p.x, p.y, p.z
    else:
        x, y, z = (complex(v) for v in p)
    return complex(sum(float(c) * x**a * y**b * z**e for (a, b, e), c in f._terms.items()))


def numeric_coeffs(f: HomogeneousPoly) -> np.ndarray:
    return np.array([float(c) for c in f.dense_coeffs()], dtype=complex)


# --- complex points -------------------------------------------------------

def fs_distance(a, b) -> float:
    """Sine of the Fubini-Study angle between two nonzero vectors.

    Computed as the norm of the part of b orthogonal to a, which stays accurate
    for nearly equal points where sqrt(1 - |<a, b>|^2) cancels.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return float(min(1.0, np.linalg.norm(b - np.vdot(a, b) * a)))


@dataclass(frozen=True)
class ComplexPoint:
    x: complex
    y: complex
    z: complex

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def from_array(cls, v) -> "ComplexPoint":
        return cls(*(complex(c) for c in v))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=complex)

    def normalized(self, tol: float = 1e-12) -> "ComplexPoint":
        """Unit-norm representative with the largest coordinate real positive.

        Ties between coordinates of (numerically) equal modulus go to the first one.
        """
        v = self.as_array()
        n = np.linalg.norm(v)
        if n < tol:
            raise ValueError("point has all coordinates near zero")
        v = v / n
        mods = np.abs(v)
        i = int(np.argmax(mods >= mods.max() * (1 - 1e-9)))
        v = v * (abs(v[i]) / v[i])
        return ComplexPoint.from_array(v)

    def distance(self, other: "ComplexPoint") -> float:
        """Fubini-Study sine distance: zero iff the points agree projectively."""
        return fs_distance(self.as_array(), other.as_array())

    def rounded(self, digits: int = 10) -> list[list[float]]:
        out = []
        for c in self.normalized().as_array():
            re_, im_ = round(c.real, digits), round(c.imag, digits)
            out.append([re_ + 0.0, im_ + 0.0])  # + 0.0 drops negative zero
        return out


# --- text form ------------------------------------------------------------

def _frac_text(c: Fraction) -> str:
    return f"{c.numerator}" if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(f: HomogeneousPoly) -> str:
    """Canonical ``c*x^a*y^b*z^c`` sum, terms in monomial_basis order."""
    if f.is_zero():
        return "0"
    parts = [f"{_frac_text(c)}*x^{a}*y^{b}*z^{e}" for (a, b, e), c in f.sorted_terms()]
    return " + ".join(parts)


_TERM = re.compile(r"^([+-]?\d+(?:/\d+)?)?\*?((?:[xyz](?:\^\d+)?\*?)*)$")


def parse_poly(text: str, degree: int | None = None) -> HomogeneousPoly:
    """Parse the canonical text form; also accepts omitted factors and ``-`` signs.

    ``degree`` is only needed for the zero polynomial.
    """
    s = text.replace(" ", "")
    if s in ("", "0"):
        return HomogeneousPoly(degree or 0)
    s = re.sub(r"(?<=[^\^*/+-])-", "+-", s)
    terms: dict[Monomial, Fraction] = {}
    deg = None
    for raw in s.split("+"):
        if not raw:
            continue
        sign = 1
        while raw.startswith("-") and not re.match(r"^-\d", raw):
            sign, raw = -sign, raw[1:]
        m = _TERM.match(raw)
        if not m or (m.group(1) is None and not m.group(2)):
            raise ParseError(f"cannot parse term {raw!r}")
        coef = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        exps = [0, 0, 0]
        for var, e in re.findall(r"([xyz])(?:\^(\d+))?", m.group(2)):
            exps[VARS.index(var)] += int(e) if e else 1
        mon = tuple(exps)
        d = sum(mon)
        if deg is None:
            deg = d
        elif d != deg:
            raise ParseError(f"polynomial is not homogeneous: {text!r}")
        terms[mon] = terms.get(mon, Fraction(0)) + sign * coef
    if degree is not None and deg != degree:
        raise ParseError(f"expected degree {degree}, got {deg}")
    return HomogeneousPoly(deg, terms)


x = HomogeneousPoly.variable("x")
y = HomogeneousPoly.variable("y")
z = HomogeneousPoly.variable("z")
