"""Built-in reference arrays, linear transforms, and exhaustive matrix search.

Linear constructions are restricted to prime alphabet sizes so field
arithmetic stays plain modular arithmetic. Candidate matrices are verified
by expanding the full array and running the unbiased family checks, never
by algebraic shortcuts, so search results are correct by construction.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .arrays import Alphabet, AontArray, parse_array, passes_unbiased_family
from .errors import (
    InvalidParametersError,
    NonPrimeModulusError,
    SearchSpaceError,
    SingularMatrixError,
    UnknownNameError,
)

DEFAULT_SEARCH_CAP = 3**9  # max number of candidate matrices (v^(s*s))

_TABLE1 = """
a,a,a,a
a,b,c,b
a,c,b,c
b,a,b,b
b,b,a,c
b,c,c,a
c,a,c,c
c,b,b,a
c,c,a,b
"""

_TABLE2 = """
a,a,a,a,a,a
a,a,b,b,b,a
a,a,c,c,c,a
a,b,a,a,b,b
a,b,b,b,c,b
a,b,c,c,a,b
a,c,a,a,c,c
a,c,b,b,a,c
a,c,c,c,b,c
b,a,a,b,a,b
b,a,b,c,b,b
b,a,c,a,c,b
b,b,a,b,b,c
b,b,b,c,c,c
b,b,c,a,a,c
b,c,a,b,c,a
b,c,b,c,a,a
b,c,c,a,b,a
c,a,a,c,a,c
c,a,b,a,b,c
c,a,c,b,c,c
c,b,a,c,b,a
c,b,b,a,c,a
c,b,c,b,a,a
c,c,a,c,c,b
c,c,b,a,a,b
c,c,c,b,b,b
"""

_TABLE3 = """
a,a,a,a,a,a
a,a,b,b,b,a
a,b,a,b,a,b
a,b,b,b,a,a
b,a,a,a,b,b
b,a,b,a,b,a
b,b,a,a,a,b
b,b,b,b,b,b
"""

_BUILTINS: dict[str, tuple[str, int, int, tuple[str, ...]]] = {
    "table1": (_TABLE1, 3, 2, ("a", "b", "c")),
    "table2": (_TABLE2, 3, 3, ("a", "b", "c")),
    "table3": (_TABLE3, 2, 3, ("a", "b")),
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> AontArray:
    """One of the canonical reference arrays, rows in their printed order."""
    try:
        text, v, s, glyphs = _BUILTINS[name]
    except KeyError:
        raise UnknownNameError(f"no built-in array named {name!r}; know {BUILTIN_NAMES}") from None
    rows = [tuple(line.split(",")) for line in text.split()]
    return parse_array(rows, v, s, glyphs=glyphs)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class SquareMatrix:
    """s x s matrix over Z_v, v prime; rows act on input row vectors."""

    v: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not is_prime(self.v):
            raise NonPrimeModulusError(f"modulus {self.v} is not prime")
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise InvalidParametersError("matrix must be square and non-empty")
        for row in self.entries:
            for x in row:
                if not 0 <= x < self.v:
                    raise InvalidParametersError(f"entry {x} outside 0..{self.v - 1}")

    @property
    def order(self) -> int:
        return len(self.entries)

    def det(self) -> int:
        """Determinant mod v by Gaussian elimination over the prime field."""
        v = self.v
        n = self.order
        m = [list(row) for row in self.entries]
        det = 1
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col] % v), None)
            if pivot is None:
                return 0
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det % v
            det = det * m[col][col] % v
            inv = pow(m[col][col], -1, v)
            for r in range(col + 1, n):
                factor = m[r][col] * inv % v
                if factor:
                    for c in range(col, n):
                        m[r][c] = (m[r][c] - factor * m[col][c]) % v
        return det % v

    def is_invertible(self) -> bool:
        return self.det() != 0

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def matrix_from_rows(v: int, rows) -> SquareMatrix:
    return SquareMatrix(v, tuple(tuple(int(x) for x in row) for row in rows))


def identity_matrix(s: int, v: int) -> SquareMatrix:
    return SquareMatrix(v, tuple(tuple(1 if i == j else 0 for j in range(s)) for i in range(s)))


def linear_aont(matrix: SquareMatrix) -> AontArray:
    """Expand (x, x @ M mod v) over all x in lexicographic order."""
    if not matrix.is_invertible():
        raise SingularMatrixError(f"matrix {matrix.entries} has determinant 0 mod {matrix.v}")
    v = matrix.v
    s = matrix.order
    cols = list(zip(*matrix.entries))
    rows = []
    for x in product(range(v), repeat=s):
        y = tuple(sum(xi * ci for xi, ci in zip(x, col)) % v for col in cols)
        rows.append(x + y)
    return AontArray(Alphabet(v), s, tuple(rows))


def _matrix_from_flat_index(idx: int, s: int, v: int) -> SquareMatrix:
    digits = [0] * (s * s)
    for pos in range(s * s - 1, -1, -1):
        idx, digits[pos] = divmod(idx, v)
    rows = tuple(tuple(digits[r * s : (r + 1) * s]) for r in range(s))
    return SquareMatrix(v, rows)


def iter_invertible_matrices(s: int, v: int) -> Iterator[SquareMatrix]:
    """All invertible s x s matrices over Z_v, in lexicographic entry order."""
    if not is_prime(v):
        raise NonPrimeModulusError(f"modulus {v} is not prime")
    for flat in product(range(v), repeat=s * s):
        m = SquareMatrix(v, tuple(tuple(flat[r * s : (r + 1) * s]) for r in range(s)))
        if m.is_invertible():
            yield m


def iter_linear_aont_matrices(s: int, v: int, t_i: int, t_o: int) -> Iterator[SquareMatrix]:
    """Invertible matrices whose expansion verifies as a full (t_i, t_o)
    transform, in lexicographic order."""
    for m in iter_invertible_matrices(s, v):
        if passes_unbiased_family(linear_aont(m), t_i, t_o):
            yield m


@dataclass(frozen=True)
class SearchResult:
    s: int
    v: int
    t_i: int
    t_o: int
    examined: int  # invertible matrices expanded and checked
    found: tuple[SquareMatrix, ...]
    elapsed_seconds: float

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "v": self.v,
            "t_i": self.t_i,
            "t_o": self.t_o,
            "examined": self.examined,
            "found": len(self.found),
            "matrices": [m.to_json() for m in self.found],
            "elapsed_seconds": self.elapsed_seconds,
        }


def worker_count(explicit: int | None = None) -> int:
    """Resolve the worker cap: explicit argument, else AONT_LAB_THREADS
    (0 means auto), else 1."""
    if explicit is None:
        raw = os.environ.get("AONT_LAB_THREADS", "").strip()
        if not raw:
            return 1
        explicit = int(raw)
    if explicit == 0:
        return os.cpu_count() or 1
    if explicit < 0:
        raise InvalidParametersError(f"worker count {explicit} must be >= 0")
    return explicit


def _scan_range(lo: int, hi: int, s: int, v: int, t_i: int, t_o: int) -> tuple[int, list[SquareMatrix]]:
    examined = 0
    passing: list[SquareMatrix] = []
    for flat in range(lo, hi):
        m = _matrix_from_flat_index(flat, s, v)
        if not m.is_invertible():
            continue
        examined += 1
        if passes_unbiased_family(linear_aont(m), t_i, t_o):
            passing.append(m)
    return examined, passing


def search_linear(
    s: int,
    v: int,
    t_i: int,
    t_o: int,
    cap: int = DEFAULT_SEARCH_CAP,
    workers: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> SearchResult:
    """Enumerate every invertible matrix and keep those whose expansion
    verifies as a full (t_i, t_o) transform.

    Enumeration order is lexicographic in the flattened entries, so two runs
    return identical results regardless of worker count.
    """
    if not is_prime(v):
        raise NonPrimeModulusError(f"modulus {v} is not prime")
    if not 1 <= t_i <= t_o <= s:
        raise InvalidParametersError(
            f"need 1 <= t_i <= t_o <= s, got t_i={t_i}, t_o={t_o}, s={s}"
        )
    space = v ** (s * s)
    if space > cap:
        raise SearchSpaceError(
            f"{space} candidate matrices exceed the cap of {cap}; raise the cap explicitly"
        )
    n_workers = worker_count(workers)
    start = time.monotonic()
    examined = 0
    found: list[SquareMatrix] = []
    if n_workers <= 1:
        chunk = max(1, space // 64)
        for lo in range(0, space, chunk):
            hi = min(lo + chunk, space)
            part_examined, part_found = _scan_range(lo, hi, s, v, t_i, t_o)
            examined += part_examined
            found.extend(part_found)
            if progress is not None:
                progress(hi, space)
    else:
        chunk = max(1, space // (n_workers * 8))
        ranges = [(lo, min(lo + chunk, space)) for lo in range(0, space, chunk)]
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            # map preserves submission order, keeping the merged list sorted
            for (lo, hi), (part_examined, part_found) in zip(
                ranges,
                pool.map(lambda r: _scan_range(*r, s, v, t_i, t_o), ranges),
            ):
                examined += part_examined
                found.extend(part_found)
                if progress is not None:
                    progress(hi, space)
    elapsed = time.monotonic() - start
    return SearchResult(s, v, t_i, t_o, examined, tuple(found), elapsed)
