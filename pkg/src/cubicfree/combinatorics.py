"""Integer side: intersection count, Hirzebruch-type inequality, degree window
and enumeration of weak combinatorics for cubic-line arrangements."""

from __future__ import annotations

from dataclasses import astuple, dataclass
from math import comb

from .errors import HypothesisViolated


@dataclass(frozen=True, order=True)
class WeakCombinatorics:
    """``k`` smooth cubics and ``d`` lines with ``n2`` nodes, ``n3`` ordinary
    triple points and ``t5`` points of type A5."""

    k: int
    d: int
    n2: int = 0
    n3: int = 0
    t5: int = 0

    def __post_init__(self):
        for name, v in zip(("k", "d", "n2", "n3", "t5"), astuple(self)):
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def m(self) -> int:
        return 3 * self.k + self.d

    @property
    def singularities(self) -> tuple[int, int, int]:
        return self.n2, self.n3, self.t5

    def to_dict(self) -> dict:
        return {"k": self.k, "d": self.d, "n2": self.n2, "n3": self.n3, "t5": self.t5}


@dataclass(frozen=True)
class DegreeWindow:
    m: int
    lower: int
    upper: int

    @property
    def admissible(self) -> list[int]:
        return list(range(self.lower, self.upper + 1))

    @property
    def empty(self) -> bool:
        return self.lower > self.upper

    def to_dict(self) -> dict:
        return {"m": self.m, "lower": self.lower, "upper": self.upper, "admissible": self.admissible}


def combinatorial_count(k: int, d: int) -> int:
    """Number of pairwise intersections, 9*C(k,2) + 3kd + C(d,2), counted by Bezout."""
    if k < 0 or d < 0:
        raise ValueError("k and d must be nonnegative")
    return 9 * comb(k, 2) + 3 * k * d + comb(d, 2)


def singular_cost(n2: int, n3: int, t5: int) -> int:
    # node costs one intersection, triple point and A5 three each
    return n2 + 3 * n3 + 3 * t5


def count_satisfied(wc: WeakCombinatorics) -> bool:
    return combinatorial_count(wc.k, wc.d) == singular_cost(*wc.singularities)


def tau_candidate(n2: int, n3: int, t5: int) -> int:
    """Total Tjurina number of an arrangement with these singularity counts."""
    return n2 + 4 * n3 + 5 * t5


def hirzebruch_sides(wc: WeakCombinatorics) -> tuple[int, int]:
    """Both sides of 27k + n2 + 3/4 n3 >= d + 5 t5 multiplied by 4."""
    if wc.k < 1 or wc.d < 1:
        raise HypothesisViolated("the inequality needs at least one cubic and one line")
    if wc.m < 6:
        raise HypothesisViolated(f"the inequality needs 3k + d >= 6, got {wc.m}")
    return 108 * wc.k + 4 * wc.n2 + 3 * wc.n3, 4 * wc.d + 20 * wc.t5


def hirzebruch_check(wc: WeakCombinatorics) -> bool:
    lhs, rhs = hirzebruch_sides(wc)
    return lhs >= rhs


def hirzebruch_applicable(k: int, d: int) -> bool:
    return k >= 1 and d >= 1 and 3 * k + d >= 6


def degree_window(m: int) -> DegreeWindow:
    """Integers d1 with 2m/3 - 2 <= d1 <= (m-1)/2.

    The lower end comes from the Arnold exponent 2/3 shared by D4 and A5 points,
    the upper end from d1 <= d2 for the exponents of a free curve.
    """
    if m < 3:
        raise ValueError("degree must be at least 3")
    lower = -((6 - 2 * m) // 3)  # ceil((2m - 6) / 3)
    upper = (m - 1) // 2
    return DegreeWindow(m, lower, upper)


def free_tau(m: int, d1: int) -> int:
    """Total Tjurina number forced by freeness with exponents (d1, m-1-d1)."""
    return (m - 1) ** 2 - d1 * (m - d1 - 1)


def enumerate_admissible(k: int, d: int) -> list[WeakCombinatorics]:
    """Tuples (n2, n3, t5) meeting the intersection count, lexicographically sorted.

    A triple point needs three distinct components, so n3 = 0 when k + d < 3.
    """
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    total = combinatorial_count(k, d)
    max_triple = total // 3 if k + d >= 3 else 0
    out = []
    for n2 in range(total + 1):
        rest = total - n2
        if rest % 3:
            continue
        rest //= 3
        for n3 in range(min(rest, max_triple) + 1):
            out.append(WeakCombinatorics(k, d, n2, n3, rest - n3))
    return out


@dataclass(frozen=True)
class FreeCandidate:
    wc: WeakCombinatorics
    d1: int
    hirzebruch_pass: bool | None

    def to_dict(self) -> dict:
        return {**self.wc.to_dict(), "d1": self.d1, "hirzebruch_pass": self.hirzebruch_pass}


def enumerate_free_candidates(k: int, d: int) -> list[FreeCandidate]:
    """Admissible tuples whose Tjurina number matches a free curve with mdr in the window.

    ``hirzebruch_pass`` is None when the inequality's hypotheses do not hold.
    """
    m = 3 * k + d
    window = degree_window(m)
    tag = hirzebruch_applicable(k, d)
    out = []
    for d1 in window.admissible:
        target = free_tau(m, d1)
        for wc in enumerate_admissible(k, d):
            if tau_candidate(*wc.singularities) == target:
                out.append(FreeCandidate(wc, d1, hirzebruch_check(wc) if tag else None))
    return out
