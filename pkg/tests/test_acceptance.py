"""Acceptance criteria, one summary line each (see the "acceptance criteria"
section at the end of a pytest run). Every comparison is exact except the
census, which must be identical at each tolerance in CENSUS_TOLERANCES."""

import importlib.util
import random
import re
from pathlib import Path

import pytest

from cubicfree import combinatorics as cb
from cubicfree import example
from cubicfree.census import census
from cubicfree.combinatorics import WeakCombinatorics as WC
from cubicfree.jacobian import (
    Verdict,
    analyze,
    hilbert_jacobian,
    mdr,
    total_tjurina_algebraic,
    total_tjurina_combinatorial,
)
from cubicfree.poly import compose_linear, gradient, x, y, z

from conftest import random_invertible, random_poly, record

ROOT = Path(__file__).resolve().parents[1]
TRANSCRIPT = ROOT / "oracle" / "transcript.txt"
CENSUS_TOLERANCES = (1e-6, 1e-8, 1e-10)
FROZEN = {"EL6": (2, 19), "EL7": (3, 27), "CPPP": (7, 84)}
COORDINATE_CHANGES = 10


def _free_case(n, name, d1, tau, exponents):
    arr = example(name)
    wc = census(arr).wc
    rep = analyze(arr.product, wc)
    ok = (rep.d1, rep.tau_algebraic, rep.tau_combinatorial, rep.verdict, rep.exponents) == (
        d1, tau, tau, Verdict.FREE, exponents)
    record(n, f"{name}: mdr {d1}, tau {tau}, free with exponents {exponents}", ok,
           f"mdr={rep.d1} tau_alg={rep.tau_algebraic} tau_comb={rep.tau_combinatorial} "
           f"verdict={rep.verdict.value} exponents={rep.exponents}")


def test_criterion_1_el6_free():
    _free_case(1, "EL6", 2, 19, (2, 3))


def test_criterion_2_el7_free():
    _free_case(2, "EL7", 3, 27, (3, 3))


@pytest.mark.parametrize("name,expected", [
    ("EL6", WC(1, 3, 0, 1, 3)), ("EL7", WC(1, 4, 3, 1, 4)), ("CPPP", WC(1, 9, 27, 3, 9)),
])
def test_criterion_3_census(name, expected):
    got = {tol: census(example(name), tol).wc for tol in CENSUS_TOLERANCES}
    ok = all(wc == expected and cb.count_satisfied(wc) for wc in got.values())
    record(3, "census (n2, n3, t5) and intersection count, stable in tol", ok,
           f"{name}: " + ", ".join(f"tol {t:g} -> {wc.singularities}" for t, wc in got.items()))


def test_criterion_4_small_degrees():
    deg4 = [wc.singularities for wc in cb.enumerate_admissible(1, 1)]
    deg5 = [wc.singularities for wc in cb.enumerate_admissible(1, 2)]
    max4 = max(cb.tau_candidate(*t) for t in deg4)
    max5 = max(cb.tau_candidate(*t) for t in deg5)
    need4 = cb.free_tau(4, 1)
    need5 = cb.free_tau(5, 2)
    ok = (
        sorted(deg4) == [(0, 0, 1), (3, 0, 0)]
        and sorted(deg5) == [(1, 0, 2), (1, 1, 1), (1, 2, 0), (4, 0, 1), (4, 1, 0), (7, 0, 0)]
        and (max4, need4, max5, need5) == (5, 7, 11, 12)
        and not cb.enumerate_free_candidates(1, 1)
        and not cb.enumerate_free_candidates(1, 2)
    )
    record(4, "degrees 4 and 5 admit no free arrangement", ok,
           f"degree 4 {deg4} max tau {max4} < {need4}; degree 5 {len(deg5)} tuples max tau {max5} < {need5}")


def test_criterion_5_degree_window():
    got = {m: cb.degree_window(m).admissible for m in (8, 9, 12)}
    verdict = analyze(example("CPPP").product).verdict
    ok = got == {8: [], 9: [4], 12: []} and verdict is Verdict.NOT_FREE_BY_DEGREE_WINDOW
    record(5, "degree window 8 -> empty, 9 -> {4}, 12 -> empty", ok, f"{got}; CPPP verdict {verdict.value}")


def test_criterion_6_degree9_systems():
    a = {(c.wc.singularities, c.hirzebruch_pass) for c in cb.enumerate_free_candidates(2, 3)}
    b = {(c.wc.singularities, c.hirzebruch_pass) for c in cb.enumerate_free_candidates(1, 6)}
    ok = ({s for s, _ in a} == {(3, 0, 9), (0, 2, 8)}
          and b == {((0, 7, 4), True), ((3, 5, 5), True), ((6, 3, 6), False), ((9, 1, 7), False)})
    record(6, "degree-9 free candidates and their Hirzebruch tags", ok, f"(2,3): {sorted(a)}; (1,6): {sorted(b)}")


def test_criterion_7_hirzebruch_tight():
    lhs, rhs = cb.hirzebruch_sides(WC(1, 9, 27, 3, 9))
    record(7, "tight Hirzebruch case 225 >= 216", (lhs, rhs) == (225, 216) and lhs >= rhs, f"{lhs} >= {rhs}")


# --- criterion 8: property suites --------------------------------------------

CRIT8 = "property suites"


def test_criterion_8_euler_relation():
    rng = random.Random(8)
    bad = 0
    for _ in range(100):
        f = random_poly(rng, rng.randint(1, 10))
        fx, fy, fz = gradient(f)
        bad += x * fx + y * fy + z * fz != f.scale(f.degree)
    record(8, CRIT8, bad == 0, f"Euler relation on 100 random forms: {bad} failures")


@pytest.mark.slow
@pytest.mark.parametrize("name", ["EL6", "EL7", "CPPP", "FERMAT"])
def test_criterion_8_coordinate_invariance(name):
    f = example(name).product
    d1, tau = mdr(f), total_tjurina_algebraic(f)
    # dense transformed degree-12 products are out of reach for the exact path;
    # the modular path is certified against it on the untransformed CPPP
    method = "modular" if f.degree > 7 else "exact"
    if method == "modular":
        assert (mdr(f, "both"), total_tjurina_algebraic(f, "both")) == (d1, tau)
    rng = random.Random(name)
    seen = set()
    for _ in range(COORDINATE_CHANGES):
        g = compose_linear(f, random_invertible(rng))
        seen.add((mdr(g, method), total_tjurina_algebraic(g, method)))
    record(8, CRIT8, seen == {(d1, tau)},
           f"{name}: (mdr, tau) = {(d1, tau)} under {COORDINATE_CHANGES} coordinate changes ({method}): {sorted(seen)}")


def test_criterion_8_bezout_totals():
    lines = []
    ok = True
    for name in ("EL6", "EL7", "CPPP", "FERMAT"):
        arr = example(name)
        res = census(arr)
        good = all(t == arr.components[i].degree * arr.components[j].degree for (i, j), t in res.pair_totals.items())
        ok &= good
        lines.append(f"{name} {len(res.pair_totals)} pairs")
    record(8, CRIT8, ok, "Bezout totals: " + ", ".join(lines))


def test_criterion_8_cross_layer_tau():
    got = {}
    for name in ("EL6", "EL7", "CPPP"):
        arr = example(name)
        got[name] = (total_tjurina_algebraic(arr.product), total_tjurina_combinatorial(census(arr).wc))
    record(8, CRIT8, all(a == b for a, b in got.values()), f"algebraic vs combinatorial tau: {got}")


@pytest.mark.parametrize("name", ["EL6", "EL7", "CPPP", "FERMAT"])
def test_criterion_8_hilbert_stabilization(name):
    f = example(name).product
    m = f.degree
    start = 3 * (m - 2)
    values = [hilbert_jacobian(f, t) for t in range(start, start + 8)]
    tau = total_tjurina_algebraic(f)
    triple = all(values[i + 2] == values[i + 1] for i in range(len(values) - 2) if values[i] == values[i + 1])
    record(8, CRIT8, triple and values[-1] == tau,
           f"{name}: H(t) for t = {start}..{start + 7}: {values}, tau = {tau}")


# --- criterion 9: independent oracle -------------------------------------------

def _parse_transcript():
    rows = {}
    for line in TRANSCRIPT.read_text().splitlines():
        m = re.match(r"(\w+) m=(\d+) mdr=(\d+) tau_rank=(\d+) tau_groebner=(\d+)", line)
        if m:
            rows[m[1]] = tuple(int(v) for v in m.groups()[1:])
    return rows


def test_criterion_9_oracle_transcript():
    rows = _parse_transcript()
    ours = {name: (mdr(example(name).product), total_tjurina_algebraic(example(name).product)) for name in FROZEN}
    ok = set(rows) == set(FROZEN) and all(
        (d1, tr) == FROZEN[name] == ours[name] and tg == tr for name, (_, d1, tr, tg) in rows.items())
    record(9, "mdr and tau agree with an independent computer-algebra oracle", ok,
           f"transcript {rows}; frozen {FROZEN}; library {ours}")


@pytest.mark.slow
def test_criterion_9_oracle_rerun():
    pytest.importorskip("flint")
    pytest.importorskip("sympy")
    module_spec = importlib.util.spec_from_file_location("oracle_check", ROOT / "tools" / "oracle_check.py")
    oracle = importlib.util.module_from_spec(module_spec)
    module_spec.loader.exec_module(oracle)
    got = {}
    for name in ("EL6", "EL7"):
        f = oracle.CURVES[name]
        t = 4 * example(name).m
        got[name] = (oracle.mdr(f), oracle.tau_by_rank(f, t), oracle.tau_by_groebner(f, t))
    ok = all(v == (*FROZEN[k], FROZEN[k][1]) for k, v in got.items())
    record(9, "mdr and tau agree with an independent computer-algebra oracle", ok,
           f"live oracle re-run (FLINT rank, sympy Groebner): {got}")
