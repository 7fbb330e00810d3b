"""Sparse exact matrices and rank computations over the rationals.

The reference rank is fraction-free: every vector is scaled to coprime
integers and eliminated by integer cross-multiplication. A multi-prime modular
rank is provided as a fast path; rank mod p never exceeds the rational rank, so
the maximum over several large primes is a lower bound that is exact unless all
primes are unlucky.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

PRIMES = (2147483647, 2147483629, 2147483587)


@dataclass
class ExactMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), v in list(self.entries.items()):
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            if not v:
                del self.entries[(i, j)]

    @classmethod
    def from_columns(cls, rows: int, columns: list[dict[int, Fraction]]) -> "ExactMatrix":
        entries = {(i, j): Fraction(v) for j, col in enumerate(columns) for i, v in col.items() if v}
        return cls(rows, len(columns), entries)

    @classmethod
    def from_dense(cls, data) -> "ExactMatrix":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {(i, j): Fraction(v) for i, r in enumerate(data) for j, v in enumerate(r) if v}
        return cls(rows, cols, entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def columns(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [{} for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def apply(self, vec) -> list[Fraction]:
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            out[i] += v * vec[j]
        return out


def _primitive(vec: dict[int, int]) -> dict[int, int]:
    g = math.gcd(*vec.values())
    if g > 1:
        return {k: v // g for k, v in vec.items()}
    return vec


def _integer_vector(col: dict[int, Fraction]) -> dict[int, int]:
    den = math.lcm(*(v.denominator for v in col.values()))
    return _primitive({k: int(v * den) for k, v in col.items()})


def rank_exact(M: ExactMatrix) -> int:
    """Rank over Q by incremental fraction-free elimination of the columns.

    Each incoming column is reduced against the pivots found so far, always
    clearing its smallest row index; vectors supported on disjoint blocks never
    interact, so block-structured matrices cost no more than their blocks.
    """
    pivots: dict[int, dict[int, int]] = {}
    for col in M.columns():
        if not col:
            continue
        v = _integer_vector(col)
        while v:
            lead = min(v)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = v
                break
            a, b = p[lead], v[lead]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * c for k, c in v.items()}
            for k, c in p.items():
                s = new.get(k, 0) - b * c
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            v = _primitive(new) if new else new
    return len(pivots)


def rank_mod_p(M: ExactMatrix, p: int) -> int | None:
    """Rank of M reduced mod p, or None when p divides a denominator."""
    A = np.zeros((M.rows, M.cols), dtype=np.int64)
    for (i, j), v in M.entries.items():
        if v.denominator % p == 0:
            return None
        A[i, j] = (v.numerator % p) * pow(v.denominator, -1, p) % p
    return _dense_rank_mod_p(A, p)


def _dense_rank_mod_p(A: np.ndarray, p: int) -> int:
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        r = rank + nz[0]
        if r != rank:
            A[[rank, r]] = A[[r, rank]]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank, c:] = A[rank, c:] * inv % p
        below = A[rank + 1:, c]
        idx = np.nonzero(below)[0]
        if idx.size:
            idx = idx + rank + 1
            A[idx, c:] = (A[idx, c:] - np.outer(A[idx, c], A[rank, c:]) % p) % p
        rank += 1
    return rank


def rank_modular(M: ExactMatrix, primes=PRIMES) -> int:
    ranks = [r for r in (rank_mod_p(M, p) for p in primes) if r is not None]
    if not ranks:
        raise ValueError("every prime divides a denominator")
    return max(ranks)


def rank(M: ExactMatrix, method: str = "exact") -> int:
    if method == "exact":
        return rank_exact(M)
    if method == "modular":
        return rank_modular(M)
    if method == "both":
        r1, r2 = rank_exact(M), rank_modular(M)
        if r1 != r2:
            raise ArithmeticError(f"modular rank {r2} disagrees with exact rank {r1}")
        return r1
    raise ValueError(f"unknown rank method {method!r}")


def kernel_dimension(M: ExactMatrix, method: str = "exact") -> int:
    return M.cols - rank(M, method)
