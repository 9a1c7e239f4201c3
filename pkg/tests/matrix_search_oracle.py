#!/usr/bin/env python3
"""Independent brute-force oracle for the linear matrix search.

Enumerates every s x s matrix over Z_v (not just invertible ones), expands
each candidate to its full (inputs, outputs) array, and checks the defining
tuple-count conditions directly with collections.Counter. No imports from
the package under test: invertibility is detected as "every output tuple
appears exactly once", and the unbiased checks recount projections from
scratch. Used by the test suite to confirm search counts; also runnable:

    python3 tests/matrix_search_oracle.py S V TI TO
"""

from __future__ import annotations

import sys
from collections import Counter
from itertools import combinations, product


def expand(matrix_rows: tuple[tuple[int, ...], ...], s: int, v: int) -> list[tuple[int, ...]]:
    rows = []
    for x in product(range(v), repeat=s):
        y = tuple(sum(x[i] * matrix_rows[i][j] for i in range(s)) % v for j in range(s))
        rows.append(x + y)
    return rows


def unbiased(rows: list[tuple[int, ...]], cols: tuple[int, ...], v: int) -> bool:
    """cols are 0-based here; every projected tuple must appear N/v^k times."""
    counts = Counter(tuple(row[c] for c in cols) for row in rows)
    expected = len(rows) // v ** len(cols)
    if len(counts) != v ** len(cols):
        return False
    return all(n == expected for n in counts.values())


def oracle_counts(s: int, v: int, t_i: int, t_o: int) -> tuple[int, int]:
    """(invertible matrices, matrices whose expansion passes every check)."""
    examined = 0
    found = 0
    families = [tuple(range(s)), tuple(range(s, 2 * s))]
    for i_cols in combinations(range(s), t_i):
        for j_cols in combinations(range(s, 2 * s), s - t_o):
            families.append(i_cols + j_cols)
    for flat in product(range(v), repeat=s * s):
        matrix = tuple(tuple(flat[r * s : (r + 1) * s]) for r in range(s))
        rows = expand(matrix, s, v)
        outputs = Counter(row[s:] for row in rows)
        if len(outputs) != v**s:
            continue  # not a bijection, i.e. singular
        examined += 1
        if all(unbiased(rows, cols, v) for cols in families):
            found += 1
    return examined, found


def main(argv: list[str]) -> None:
    s, v, t_i, t_o = (int(a) for a in argv[1:5])
    examined, found = oracle_counts(s, v, t_i, t_o)
    print(f"{examined} examined, {found} found")


if __name__ == "__main__":
    main(sys.argv)
