"""Reproduction matrix: every numerical claim about the named arrangements and
the degree-wise classification, as named, grouped checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import combinatorics as cb
from .builders import example
from .census import census
from .combinatorics import WeakCombinatorics as WC
from .jacobian import Verdict, analyze, mdr, total_tjurina_algebraic, total_tjurina_combinatorial

TOLERANCES = (1e-6, 1e-8, 1e-10)


@dataclass(frozen=True)
class Check:
    id: str
    group: str
    claim: str
    run: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class Outcome:
    id: str
    group: str
    claim: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"id": self.id, "group": self.group, "claim": self.claim,
                "passed": self.passed, "detail": self.detail}


def _free_example(name, d1, tau, exponents, wc):
    def run():
        arr = example(name)
        got_wc = census(arr).wc
        rep = analyze(arr.product, got_wc)
        ok = (
            rep.d1 == d1
            and rep.tau_algebraic == tau
            and rep.tau_combinatorial == tau
            and got_wc == wc
            and rep.verdict is Verdict.FREE
            and rep.exponents == exponents
        )
        return ok, (f"mdr={rep.d1} tau_alg={rep.tau_algebraic} tau_comb={rep.tau_combinatorial} "
                    f"verdict={rep.verdict.value} exponents={rep.exponents}")
    return run


def _census(name, expected: WC):
    def run():
        arr = example(name)
        seen = {tol: census(arr, tol).wc for tol in TOLERANCES}
        ok = all(wc == expected and cb.count_satisfied(wc) for wc in seen.values())
        vals = sorted({wc.singularities for wc in seen.values()})
        return ok, f"(n2, n3, t5) over tol {TOLERANCES}: {vals}"
    return run


def _small_degree(k, d, tuples, tau_bound):
    def run():
        adm = [wc.singularities for wc in cb.enumerate_admissible(k, d)]
        taus = [cb.tau_candidate(*t) for t in adm]
        (d1,) = cb.degree_window(3 * k + d).admissible
        need = cb.free_tau(3 * k + d, d1)
        free = cb.enumerate_free_candidates(k, d)
        ok = adm == tuples and max(taus) == tau_bound and tau_bound < need and not free
        return ok, f"tuples={adm} max tau={max(taus)} needed={need} free candidates={len(free)}"
    return run


def _window(m, expected):
    def run():
        w = cb.degree_window(m)
        return w.admissible == expected, f"[{w.lower}, {w.upper}] -> {w.admissible}"
    return run


def _cppp_not_free():
    arr = example("CPPP")
    rep = analyze(arr.product)
    return rep.verdict is Verdict.NOT_FREE_BY_DEGREE_WINDOW, f"m={rep.m} verdict={rep.verdict.value}"


def _degree9(k, d, expected):
    def run():
        got = [(c.wc.singularities, c.d1, c.hirzebruch_pass) for c in cb.enumerate_free_candidates(k, d)]
        return got == expected, f"{got}"
    return run


def _hirzebruch_tight():
    wc = WC(1, 9, 27, 3, 9)
    lhs, rhs = cb.hirzebruch_sides(wc)
    return (lhs, rhs) == (225, 216) and cb.hirzebruch_check(wc), f"4*(27k+n2)+3n3={lhs} >= 4*(d+5t5)={rhs}"


def _tau_cross(name):
    def run():
        arr = example(name)
        ta = total_tjurina_algebraic(arr.product)
        tc = total_tjurina_combinatorial(census(arr).wc)
        return ta == tc, f"algebraic={ta} combinatorial={tc}"
    return run


def _mdr_value(name, expected):
    def run():
        got = mdr(example(name).product)
        return got == expected, f"mdr={got}"
    return run


CHECKS: list[Check] = [
    Check("el6-free", "el6", "EL6: mdr 2, tau 19, free with exponents (2, 3)",
          _free_example("EL6", 2, 19, (2, 3), WC(1, 3, 0, 1, 3))),
    Check("el7-free", "el7", "EL7: mdr 3, tau 27, free with exponents (3, 3)",
          _free_example("EL7", 3, 27, (3, 3), WC(1, 4, 3, 1, 4))),
    Check("census-el6", "census", "EL6 census (0, 1, 3)", _census("EL6", WC(1, 3, 0, 1, 3))),
    Check("census-el7", "census", "EL7 census (3, 1, 4)", _census("EL7", WC(1, 4, 3, 1, 4))),
    Check("census-cppp", "census", "Fermat + 9 flex tangents census (27, 3, 9)",
          _census("CPPP", WC(1, 9, 27, 3, 9))),
    Check("tau-cppp", "census", "Fermat + 9 flex tangents: algebraic tau = combinatorial tau",
          _tau_cross("CPPP")),
    Check("degree4", "degree4", "degree 4: two tuples, max tau 5 < 7, no free arrangement",
          _small_degree(1, 1, [(0, 0, 1), (3, 0, 0)], 5)),
    Check("degree5", "degree5", "degree 5: six tuples, max tau 11 < 12, no free arrangement",
          _small_degree(1, 2, [(1, 0, 2), (1, 1, 1), (1, 2, 0), (4, 0, 1), (4, 1, 0), (7, 0, 0)], 11)),
    Check("window-8", "window", "degree 8: empty mdr window", _window(8, [])),
    Check("window-9", "window", "degree 9: window {4}", _window(9, [4])),
    Check("window-12", "window", "degree 12: empty window", _window(12, [])),
    Check("cppp-not-free", "window", "Fermat + 9 flex tangents is not free (degree window)", _cppp_not_free),
    Check("cppp-mdr", "window", "Fermat + 9 flex tangents: mdr exceeds (m-1)/2", _mdr_value("CPPP", 7)),
    Check("degree9-k2d3", "degree9", "(k, d) = (2, 3): free candidates (3,0,9), (0,2,8)",
          _degree9(2, 3, [((0, 2, 8), 4, True), ((3, 0, 9), 4, True)])),
    Check("degree9-k1d6", "degree9",
          "(k, d) = (1, 6): four candidates, (6,3,6) and (9,1,7) fail the inequality",
          _degree9(1, 6, [((0, 7, 4), 4, True), ((3, 5, 5), 4, True),
                          ((6, 3, 6), 4, False), ((9, 1, 7), 4, False)])),
    Check("hirzebruch-tight", "hirzebruch", "(1, 9; 27, 3, 9) satisfies the inequality, 225 >= 216",
          _hirzebruch_tight),
]


def groups() -> list[str]:
    return sorted({c.group for c in CHECKS})


def run_checks(only: str | None = None) -> list[Outcome]:
    selected = [c for c in CHECKS if only is None or c.group == only or c.id == only]
    if not selected:
        raise KeyError(f"no check or group named {only!r}; groups: {', '.join(groups())}")
    out = []
    for c in selected:
        try:
            ok, detail = c.run()
        except Exception as exc:  # a crash is a failed check, not an aborted run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(Outcome(c.id, c.group, c.claim, bool(ok), detail))
    return out
