"""Graded linear algebra on the Jacobian ideal J_f = (f_x, f_y, f_z).

mdr(f) is found by scanning the kernels of the maps
``(a, b, c) -> a f_x + b f_y + c f_z`` on S_r^3; the total Tjurina number is
the stable value of the Hilbert function of S/J_f.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import combinatorics as comb
from .combinatorics import WeakCombinatorics
from .errors import DegreeUnderflow, MdrOutOfRange, PartialsDependent, StabilizationFailure
from .linalg import ExactMatrix, kernel_dimension, rank
from .poly import HomogeneousPoly, dim_graded, gradient, monomial_basis, monomial_index


class SingularityType(enum.Enum):
    """Singularities allowed in the arrangements: (milnor, tjurina, lct, intersection cost)."""

    A1 = (1, 1, Fraction(1), 1)
    D4 = (4, 4, Fraction(2, 3), 3)
    A5 = (5, 5, Fraction(2, 3), 3)

    @property
    def milnor(self) -> int:
        return self.value[0]

    @property
    def tjurina(self) -> int:
        return self.value[1]

    @property
    def lct(self) -> Fraction:
        return self.value[2]

    @property
    def intersection_cost(self) -> int:
        return self.value[3]


class Verdict(str, enum.Enum):
    FREE = "Free"
    NOT_FREE = "NotFree"
    NOT_FREE_BY_DEGREE_WINDOW = "NotFreeByDegreeWindow"


@dataclass
class FreenessReport:
    m: int
    d1: int
    tau_algebraic: int
    tau_combinatorial: int | None
    exponents: tuple[int, int] | None
    verdict: Verdict
    reason: str

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "mdr": self.d1,
            "tau_algebraic": self.tau_algebraic,
            "tau_combinatorial": self.tau_combinatorial,
            "exponents": list(self.exponents) if self.exponents else None,
            "verdict": self.verdict.value,
            "reason": self.reason,
        }


def _multiples_matrix(polys, shift: int, target: int) -> ExactMatrix:
    """Columns: every degree-``shift`` monomial times each poly, in degree ``target``."""
    row_index = monomial_index(target)
    columns = []
    for g in polys:
        terms = list(g.items())
        for mu in monomial_basis(shift):
            col: dict[int, Fraction] = {}
            for (a, b, c), v in terms:
                i = row_index[(a + mu[0], b + mu[1], c + mu[2])]
                col[i] = col.get(i, 0) + v
            columns.append(col)
    return ExactMatrix.from_columns(dim_graded(target), columns)


def syzygy_matrix(f: HomogeneousPoly, r: int) -> ExactMatrix:
    """Matrix of (a, b, c) -> a f_x + b f_y + c f_z from S_r^3 to S_{r + deg f - 1}.

    Columns run over monomial_basis(r) for a, then b, then c.
    """
    if f.degree < 2:
        raise DegreeUnderflow("syzygies need deg f >= 2")
    return _multiples_matrix(gradient(f), r, r + f.degree - 1)


def syzygy_vector(a: HomogeneousPoly, b: HomogeneousPoly, c: HomogeneousPoly) -> list[Fraction]:
    """Column-space coordinates of a triple, matching syzygy_matrix's layout."""
    r = max(p.degree for p in (a, b, c))
    return [p.coeff(mon) for p in (a, b, c) for mon in monomial_basis(r)]


def mdr(f: HomogeneousPoly, method: str = "exact") -> int:
    """Minimal degree of a Jacobian relation."""
    if f.degree < 2:
        raise DegreeUnderflow("mdr needs deg f >= 2")
    for r in range(f.degree):
        if kernel_dimension(syzygy_matrix(f, r), method) > 0:
            if r == 0:
                raise PartialsDependent("partial derivatives are linearly dependent")
            return r
    # Koszul relations (f_y, -f_x, 0) live in degree deg f - 1
    raise AssertionError("no syzygy up to the Koszul degree; is f zero?")


def hilbert_jacobian(f: HomogeneousPoly, t: int, method: str = "exact") -> int:
    """dim (S / J_f)_t."""
    if f.degree < 2:
        raise DegreeUnderflow("Jacobian algebra needs deg f >= 2")
    shift = t - f.degree + 1
    if shift < 0:
        return dim_graded(t)
    return dim_graded(t) - rank(_multiples_matrix(gradient(f), shift, t), method)


def hilbert_tail(f: HomogeneousPoly, method: str = "exact") -> list[tuple[int, int]]:
    """(t, H(t)) from t = 3(m-2) until three consecutive values agree."""
    m = f.degree
    start = max(3 * (m - 2), 0)
    cap = 5 * m
    seq: list[tuple[int, int]] = []
    for t in range(start, cap + 1):
        seq.append((t, hilbert_jacobian(f, t, method)))
        if len(seq) >= 3 and seq[-1][1] == seq[-2][1] == seq[-3][1]:
            return seq
    raise StabilizationFailure(
        f"Hilbert function not stable by t = {cap}: tail {seq[-3:]} (non-reduced input?)"
    )


def total_tjurina_algebraic(f: HomogeneousPoly, method: str = "exact") -> int:
    return hilbert_tail(f, method)[-1][1]


def total_tjurina_combinatorial(wc: WeakCombinatorics) -> int:
    return comb.tau_candidate(wc.n2, wc.n3, wc.t5)


def du_plessis_wall(m: int, d1: int, tau: int) -> bool:
    if 2 * d1 > m - 1:
        raise MdrOutOfRange(f"mdr {d1} exceeds (m-1)/2 = {(m - 1) / 2}; criterion not applicable")
    return comb.free_tau(m, d1) == tau


def analyze(
    f: HomogeneousPoly,
    wc: WeakCombinatorics | None = None,
    method: str = "exact",
    degree_window: bool = True,
) -> FreenessReport:
    """Freeness verdict for a reduced curve with only A1, D4, A5 singularities.

    The degree window relies on the Arnold exponent 2/3 of D4 and A5 points;
    pass ``degree_window=False`` for curves outside that class.
    """
    m = f.degree
    d1 = mdr(f, method)
    tau = total_tjurina_algebraic(f, method)
    tau_c = total_tjurina_combinatorial(wc) if wc is not None else None
    window = comb.degree_window(m)

    def report(verdict, reason, exponents=None):
        return FreenessReport(m, d1, tau, tau_c, exponents, verdict, reason)

    if tau == 0:
        return report(Verdict.NOT_FREE, f"smooth curve (tau = 0); mdr = {d1} = m - 1, only Koszul relations")
    if degree_window and window.empty:
        return report(
            Verdict.NOT_FREE_BY_DEGREE_WINDOW,
            f"no integer d1 with {Fraction(2 * m, 3) - 2} <= d1 <= {Fraction(m - 1, 2)}",
        )
    if 2 * d1 > m - 1:
        return report(Verdict.NOT_FREE, f"mdr = {d1} > (m-1)/2; no exponents d1 <= d2 with d1 + d2 = m - 1")
    expected = comb.free_tau(m, d1)
    if du_plessis_wall(m, d1, tau):
        return report(
            Verdict.FREE,
            f"du Plessis-Wall: (m-1)^2 - d1(m-d1-1) = {expected} = tau",
            (d1, m - 1 - d1),
        )
    return report(Verdict.NOT_FREE, f"du Plessis-Wall: (m-1)^2 - d1(m-d1-1) = {expected} != tau = {tau}")
