import random
from fractions import Fraction

import pytest

from cubicfree.poly import HomogeneousPoly, monomial_basis


def random_poly(rng: random.Random, degree: int, density: float = 0.6, bound: int = 9) -> HomogeneousPoly:
    terms = {}
    for mon in monomial_basis(degree):
        if rng.random() < density:
            terms[mon] = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
    return HomogeneousPoly(degree, terms)


def random_invertible(rng: random.Random, bound: int = 3) -> list[list[int]]:
    while True:
        g = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(3)]
        det = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
               - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
               + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
        if det:
            return g


@pytest.fixture
def rng():
    return random.Random(20240611)


# --- acceptance matrix -------------------------------------------------------

ACCEPTANCE: dict[int, dict] = {}


def record(criterion: int, title: str, ok: bool, detail: str) -> None:
    """Note one piece of evidence for an acceptance criterion and assert it."""
    entry = ACCEPTANCE.setdefault(criterion, {"title": title, "ok": True, "details": []})
    entry["ok"] = entry["ok"] and bool(ok)
    entry["details"].append(("ok" if ok else "FAILED") + ": " + detail)
    print(f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        e = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if e['ok'] else 'FAIL'}  criterion {n}: {e['title']}")
        for d in e["details"]:
            terminalreporter.write_line(f"        {d}")
