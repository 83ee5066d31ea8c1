#!/usr/bin/env python3
"""Regenerate the b-file fixtures under data/bfiles.

Every sequence here is produced with sympy, by a route that shares no code
with the C++ library: generating functions are expanded symbolically,
Hessenberg determinants use sympy's own det(), and the Catalan-triangle
counts use the closed ballot formula.  Values the library prints are checked
against these files by the test suite.

    python3 tests/fixtures/generate_bfiles.py data/bfiles
"""

import sys
from math import comb
from pathlib import Path

import sympy as sp

x = sp.symbols("x")
TERMS = 21  # indices 0..20


def expand(expr, count):
    poly = sp.series(expr, x, 0, count).removeO()
    return [sp.Integer(poly.coeff(x, k)) for k in range(count)]


def hessenberg(a0, entries):
    n = len(entries)
    m = sp.zeros(n, n)
    for i in range(n):
        for j in range(n):
            if j == i + 1:
                m[i, j] = a0
            elif j <= i:
                m[i, j] = entries[i - j]
    return m.det(method="bareiss")


root6 = sp.sqrt(1 - 6 * x + x**2)
root4 = sp.sqrt(1 - 4 * x)
large_gf = (1 - x - root6) / (2 * x)
small_gf = (1 + x - root6) / (4 * x)
fine_gf = (1 + 2 * x - root4) / (2 * (2 + x))
catalan_gf = (1 - root4) / (2 * x)


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    extra = 8

    large = expand(large_gf, TERMS + extra)
    small = expand(small_gf, TERMS + extra)
    fine = expand(fine_gf, TERMS + extra)
    catalan = expand(catalan_gf, TERMS + extra)
    a134425 = expand(2 / (1 - 7 * x + root6), TERMS)

    # First-return decomposition of Schroeder paths: a path is a sequence of
    # units, each either a low h (weighted by its colour count) or u P d.
    large_sym = large_gf
    a225887 = expand(1 / (1 - 3 * x - x * large_sym), TERMS)
    # No low h and no hill: units are u P d with P nonempty.
    a114710 = expand(1 / (1 - x * (large_sym - 1)), TERMS)

    assert a134425 == expand(1 / (1 - 4 * x - x * large_sym), TERMS)

    # u_n = D+(t_1..t_n), n = 1..20
    u = [hessenberg(1, fine[1 : n + 1]) for n in range(1, TERMS)]

    # A137398: its defining recurrence, seeded b1=0, b2=1, b3=2,
    # confirmed against D-(t_2..t_{n+1}).
    b = {1: 0, 2: 1, 3: 2}
    for n in range(4, TERMS):
        b[n] = 2 * b[n - 1] + 2 * b[n - 2] + sum(
            catalan[k] * b[n - k - 1] for k in range(1, n - 2)
        )
    for n in range(1, 12):
        assert hessenberg(-1, fine[2 : n + 2]) == b[n], n

    # A030238[n] = sum_j a(n+2-j, j), a(m, j) = j/(2m-j) * C(2m-j, m)
    def returns(m, j):
        return j * comb(2 * m - j, m) // (2 * m - j)

    a030238 = [
        sum(returns(n + 2 - j, j) for j in range(1, (n + 2) // 2 + 1))
        for n in range(12)
    ]

    # Published listings.
    assert small[:11] == [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859]
    assert fine[:11] == [0, 1, 0, 1, 2, 6, 18, 57, 186, 622, 2120]

    files = {
        "b006318.txt": ("A006318 large Schroeder numbers S_n", 0, large[:TERMS]),
        "b001003.txt": ("A001003 small Schroeder numbers s_n", 0, small[:TERMS]),
        "b000957.txt": ("A000957 Fine numbers t_n", 0, fine[:TERMS]),
        "b000108.txt": ("A000108 Catalan numbers C_n", 0, catalan[:TERMS]),
        "u_fine_hessenberg.txt": ("u_n = D+(t_1,...,t_n)", 1, u),
        "b137398.txt": ("A137398 b_n", 1, [b[n] for n in range(1, TERMS)]),
        "b134425.txt": ("A134425", 0, a134425),
        "b225887.txt": ("A225887", 0, a225887),
        "b114710.txt": ("A114710", 0, a114710),
        "b030238.txt": ("A030238", 0, a030238),
    }
    for name, (title, offset, values) in files.items():
        lines = [f"# {title}", "# generated by tests/fixtures/generate_bfiles.py"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
        (out / name).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/bfiles")
