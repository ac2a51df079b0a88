"""Regenerate the b-file excerpts in this directory.

OEIS was not reachable when these were vendored, so each file is computed
from its defining formula with plain integer arithmetic, independently of
the Rust code. Compare against the published b-files when online.
"""

from math import comb
from pathlib import Path

HERE = Path(__file__).parent


def rna_numbers(n):
    # g = 1 + x g + x^2 g (g - 1)
    g = [1]
    for k in range(1, n):
        sq = sum(g[i] * g[k - 2 - i] for i in range(k - 1)) if k >= 2 else 0
        prev = g[k - 2] if k >= 2 else 0
        g.append(g[k - 1] + sq - prev)
    return g


def mul(a, b, n):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def rna_triangle(rows):
    r = rna_numbers(rows)
    xr = [0] + r[: rows - 1]
    col = r[:]
    cols = []
    for _ in range(rows):
        cols.append(col)
        col = mul(col, xr, rows)
    return [[cols[k][n] for k in range(n + 1)] for n in range(rows)]


def narayana(rows):
    return [[1]] + [[comb(n, k - 1) * comb(n, k) // n if k else 0 for k in range(n + 1)] for n in range(1, rows)]


def dissections(rows):
    return [[comb(r, k) * comb(r + k + 2, k) // (k + 1) for k in range(r + 1)] for r in range(rows)]


def catalan_pair(rows):
    t = dissections(rows)
    out = []
    for row in range(rows):
        line = []
        for col in range(row + 1):
            if col == 0:
                line.append(1 if row == 0 else 0)
                continue
            k, p = row - col, t[col - 1]
            a = p[k] if k < len(p) else 0
            b = p[k - 1] if 0 < k <= len(p) else 0
            line.append(a + b)
        out.append(line)
    return out


def write(name, title, rows, first_index):
    flat = [v for row in rows for v in row]
    lines = [
        f"# {name}: {title}",
        "# Excerpt generated offline from the defining formula (see generate_bfiles.py);",
        "# read by rows, one \"index value\" pair per line.",
    ]
    lines += [f"{first_index + i} {v}" for i, v in enumerate(flat)]
    (HERE / f"b{name[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    write("A097724", "RNA matrix (R(x), x R(x))", rna_triangle(10), 0)
    write("A090181", "Narayana triangle with column 0", narayana(10), 0)
    write("A033282", "diagonal dissections of a convex polygon", dissections(8), 1)
    write("A107131", "triangle whose column n+1 is x^(n+1) T_n(x) (1+x)", catalan_pair(8), 0)
