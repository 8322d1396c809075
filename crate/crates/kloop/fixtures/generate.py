#!/usr/bin/env python3
"""Regenerates the table fixtures in this directory from their definitions."""

from itertools import product
from pathlib import Path

HERE = Path(__file__).resolve().parent


def write(name, table, comment):
    n = len(table)
    lines = [f"# {comment}", str(n)] + [" ".join(map(str, row)) for row in table]
    (HERE / name).write_text("\n".join(lines) + "\n")


def cyclic(n):
    return [[(x + y) % n for y in range(n)] for x in range(n)]


def half_sandwich(mul, n):
    root = {}
    for x in range(n):
        root.setdefault(mul(x, x), x)
    assert len(root) == n, "squaring must be a bijection"
    return [[mul(mul(root[x], y), root[x]) for y in range(n)] for x in range(n)]


def heisenberg_mul(x, y):
    a, b, c = x // 9, x // 3 % 3, x % 3
    d, e, f = y // 9, y // 3 % 3, y % 3
    return 9 * ((a + d) % 3) + 3 * ((b + e) % 3) + (c + f + a * e) % 3


def wreath_mul(x, y):
    k, v = x // 27, [x // 9 % 3, x // 3 % 3, x % 3]
    l, w = y // 27, [y // 9 % 3, y // 3 % 3, y % 3]
    u = [(v[i] + w[(i - k) % 3]) % 3 for i in range(3)]
    return 27 * ((k + l) % 3) + 9 * u[0] + 3 * u[1] + u[2]


def dihedral8():
    # (r, f) with r in Z4, f in {0,1}: r^a f^b, index 2a+b.
    def mul(x, y):
        (a, b), (c, d) = divmod(x, 2), divmod(y, 2)
        return 2 * ((a + (c if b == 0 else -c)) % 4) + (b ^ d)
    return [[mul(x, y) for y in range(8)] for x in range(8)]


def main():
    for n in (3, 5, 7, 9, 15):
        write(f"z{n}.tbl", cyclic(n), f"Z/{n}")
    write("z4.tbl", cyclic(4), "Z/4 (not uniquely 2-divisible)")
    write(
        "z3xz3.tbl",
        [[3 * ((x // 3 + y // 3) % 3) + (x + y) % 3 for y in range(9)] for x in range(9)],
        "Z/3 x Z/3, (i,j) at 3i+j",
    )
    write("heisenberg27.tbl", half_sandwich(heisenberg_mul, 27), "half-sandwich loop of the Heisenberg group mod 3")
    write("wreath81.tbl", half_sandwich(wreath_mul, 81), "half-sandwich loop of Z3 wr Z3")
    write("d8.tbl", dihedral8(), "dihedral group of order 8 (Bol, not AIP)")
    write("z5.sym", [[(2 * y - x) % 5 for y in range(5)] for x in range(5)], "symetron s(x,y) = 2y - x mod 5")
    # Z3 relabeled so that the identity is 2: x -> x+2.
    write("z3-shifted.tbl", [[(x + y + 1) % 3 for y in range(3)] for x in range(3)], "Z/3 with identity 2")
    write("noidentity.tbl", [[(2 * x + 2 * y) % 3 for y in range(3)] for x in range(3)], "Latin square without identity")
    write("notlatin.tbl", [[0, 1, 2], [1, 1, 0], [2, 0, 1]], "row 1 repeats a value")
    write(
        "nonbol5.tbl",
        [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]],
        "nonassociative loop of order 5, not Bol",
    )


if __name__ == "__main__":
    main()
