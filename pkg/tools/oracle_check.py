"""Independent cross-check of mdr and total Tjurina numbers.

Shares no code with the cubicfree package: polynomials are expanded and
differentiated by sympy, syzygy ranks are computed by FLINT (python-flint),
and the Tjurina number is read a second way from the Hilbert function of a
sympy Groebner basis of the Jacobian ideal.

    python tools/oracle_check.py > oracle/transcript.txt
"""

import itertools
import platform
import sys

import flint
import sympy as sp

x, y, z = sp.symbols("x y z")
F = x**3 + y**3 + z**3
CURVES = {
    "EL6": F * (x**3 + y**3),
    "EL7": F * (x**3 + y**3) * (y + z),
    "CPPP": F * (x**3 + y**3) * (y**3 + z**3) * (x**3 + z**3),
}


def monomials(t):
    return [x**a * y**b * z**(t - a - b) for a in range(t + 1) for b in range(t + 1 - a)]


def relation_rank(polys, r):
    """Rank of (a, b, c) -> sum a_i * polys_i on degree-r multipliers."""
    target = sp.Poly(polys[0], x, y, z).total_degree() + r
    index = {sp.Poly(mon, x, y, z).monoms()[0]: i for i, mon in enumerate(monomials(target))}
    cols = []
    for g in polys:
        for mu in monomials(r):
            cols.append(sp.Poly(sp.expand(mu * g), x, y, z).as_dict())
    M = flint.fmpz_mat(len(index), len(cols))
    for j, col in enumerate(cols):
        for mon, c in col.items():
            M[index[mon], j] = int(c)
    return M.rank(), len(cols)


def mdr(f):
    grad = [sp.diff(f, v) for v in (x, y, z)]
    for r in itertools.count():
        rk, ncols = relation_rank(grad, r)
        if rk < ncols:
            return r


def tau_by_rank(f, t):
    grad = [sp.diff(f, v) for v in (x, y, z)]
    m = sp.Poly(f, x, y, z).total_degree()
    rk, _ = relation_rank(grad, t - m + 1)
    return (t + 1) * (t + 2) // 2 - rk


def tau_by_groebner(f, t):
    G = sp.groebner([sp.diff(f, v) for v in (x, y, z)], x, y, z, order="grevlex")
    leads = [sp.Poly(g, x, y, z).monoms(order="grevlex")[0] for g in G.exprs]
    count = 0
    for mon in monomials(t):
        e = sp.Poly(mon, x, y, z).monoms()[0]
        if not any(all(ei >= li for ei, li in zip(e, lead)) for lead in leads):
            count += 1
    return count


def main():
    print(f"# oracle: sympy {sp.__version__}, python-flint {flint.__version__}, python {platform.python_version()}")
    print("# name  m  mdr  tau_rank(t)  tau_groebner(t)")
    for name, f in CURVES.items():
        m = sp.Poly(f, x, y, z).total_degree()
        t = 4 * m
        print(f"{name} m={m} mdr={mdr(f)} tau_rank={tau_by_rank(f, t)} tau_groebner={tau_by_groebner(f, t)} t={t}")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
