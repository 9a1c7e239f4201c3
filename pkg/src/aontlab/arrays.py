"""Candidate transform arrays and their unbiased/covering column properties.

An array holds v^s rows of width 2s over the alphabet {0..v-1}; columns are
labeled 1..2s, with 1..s the inputs and s+1..2s the outputs. A column set is
*unbiased* when every projected tuple appears exactly N/v^|I| times, and
*covering* when every projected tuple appears at least once. Classification
checks both properties over the column-set families that define the full and
the relaxed transform classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .coding import decode_index
from .errors import (
    DimensionMismatchError,
    InvalidParametersError,
    OversizedColumnSetError,
    UnknownSymbolError,
)

UNBIASED = "unbiased"
COVERING = "covering"

AONT = "aont"
WEAK_AONT_ONLY = "weak-aont-only"
NEITHER = "neither"


@dataclass(frozen=True)
class Alphabet:
    """Canonical symbols 0..size-1, optionally displayed through glyphs."""

    size: int
    glyphs: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.size < 2:
            raise InvalidParametersError(f"alphabet size must be >= 2, got {self.size}")
        if self.glyphs is not None:
            if len(self.glyphs) != self.size or len(set(self.glyphs)) != self.size:
                raise InvalidParametersError(
                    f"need {self.size} distinct glyphs, got {self.glyphs!r}"
                )

    def glyph(self, symbol: int) -> str:
        if self.glyphs is not None:
            return self.glyphs[symbol]
        return str(symbol)

    def symbol(self, token: str) -> int:
        """Decode one display token to a canonical symbol."""
        if self.glyphs is not None:
            try:
                return self.glyphs.index(token)
            except ValueError:
                raise UnknownSymbolError(f"token {token!r} not in alphabet") from None
        try:
            value = int(token)
        except ValueError:
            raise UnknownSymbolError(f"token {token!r} is not a symbol") from None
        if not 0 <= value < self.size:
            raise UnknownSymbolError(f"symbol {value} outside 0..{self.size - 1}")
        return value


@dataclass(frozen=True)
class AontArray:
    """A v^s x 2s array over {0..v-1}; immutable once built."""

    alphabet: Alphabet
    s: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        v = self.alphabet.size
        if self.s < 1:
            raise InvalidParametersError(f"s must be >= 1, got {self.s}")
        if len(self.rows) != v**self.s:
            raise DimensionMismatchError(
                f"expected {v**self.s} rows for v={v}, s={self.s}, got {len(self.rows)}"
            )
        width = 2 * self.s
        for r, row in enumerate(self.rows):
            if len(row) != width:
                raise DimensionMismatchError(
                    f"row {r + 1} has width {len(row)}, expected {width}"
                )
            for x in row:
                if not 0 <= x < v:
                    raise UnknownSymbolError(f"row {r + 1} holds symbol {x} outside 0..{v - 1}")

    @property
    def v(self) -> int:
        return self.alphabet.size

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def input_columns(self) -> tuple[int, ...]:
        return tuple(range(1, self.s + 1))

    @property
    def output_columns(self) -> tuple[int, ...]:
        return tuple(range(self.s + 1, 2 * self.s + 1))

    def project(self, row: Sequence[int], cols: Sequence[int]) -> tuple[int, ...]:
        """Projection of one row onto 1-based column labels."""
        return tuple(row[c - 1] for c in cols)


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one unbiased/covering check on one column set."""

    kind: str  # UNBIASED or COVERING
    columns: tuple[int, ...]
    holds: bool
    expected_multiplicity: int | None = None  # N / v^|I|; None for covering
    first_violation: tuple[int, ...] | None = None
    observed_count: int | None = None

    def __post_init__(self) -> None:
        if self.holds and self.first_violation is not None:
            raise InvalidParametersError("a holding report cannot carry a violation")


@dataclass(frozen=True)
class ClassificationVerdict:
    t_i: int
    t_o: int
    verdict: str  # AONT, WEAK_AONT_ONLY or NEITHER
    witness: tuple[int, ...] | None = None  # first failing column set, if any


def normalize_columns(cols: Iterable[int], width: int) -> tuple[int, ...]:
    """Validate and sort a 1-based column set against a 1..width label range."""
    out = tuple(sorted(set(int(c) for c in cols)))
    if not out:
        raise InvalidParametersError("column set must be non-empty")
    if out[0] < 1 or out[-1] > width:
        raise InvalidParametersError(f"column labels {out} outside 1..{width}")
    return out


def parse_array(
    raw_rows: Sequence[Sequence[object]],
    v: int,
    s: int,
    glyphs: Sequence[str] | None = None,
) -> AontArray:
    """Decode and validate raw rows (integer symbols or display tokens).

    String tokens are decoded through `glyphs` when supplied; otherwise
    numeric tokens are taken literally and non-numeric tokens are mapped to
    0..v-1 in row-major order of first appearance, which keeps the canonical
    tables stable across loads.
    """
    if v < 2 or s < 1:
        raise InvalidParametersError(f"need v >= 2 and s >= 1, got v={v}, s={s}")
    rows = [tuple(row) for row in raw_rows]
    if len(rows) != v**s:
        raise DimensionMismatchError(f"expected {v**s} rows, got {len(rows)}")
    width = 2 * s
    for r, row in enumerate(rows):
        if len(row) != width:
            raise DimensionMismatchError(f"row {r + 1} has width {len(row)}, expected {width}")

    all_int = all(isinstance(x, int) for row in rows for x in row)
    if all_int:
        alphabet = Alphabet(v, tuple(glyphs) if glyphs is not None else None)
        decoded = rows
    else:
        tokens = [str(x) for row in rows for x in row]
        if glyphs is not None:
            alphabet = Alphabet(v, tuple(glyphs))
        elif all(t.lstrip("-").isdigit() for t in tokens):
            alphabet = Alphabet(v)
        else:
            seen: list[str] = []
            for t in tokens:
                if t not in seen:
                    seen.append(t)
            if len(seen) > v:
                raise UnknownSymbolError(
                    f"found {len(seen)} distinct tokens, alphabet holds only {v}"
                )
            while len(seen) < v:
                # pad with unused placeholder glyphs so the display map stays a bijection
                filler = f"#{len(seen)}"
                if filler not in seen:
                    seen.append(filler)
            alphabet = Alphabet(v, tuple(seen))
        decoded = [tuple(alphabet.symbol(str(x)) for x in row) for row in rows]

    return AontArray(alphabet, s, tuple(decoded))


def _count_projection(array: AontArray, cols: tuple[int, ...]) -> list[int]:
    v = array.v
    idxs = [c - 1 for c in cols]
    counts = [0] * v ** len(cols)
    for row in array.rows:
        code = 0
        for i in idxs:
            code = code * v + row[i]
        counts[code] += 1
    return counts


def check_unbiased(array: AontArray, cols: Iterable[int]) -> PropertyReport:
    """Does every |I|-tuple appear exactly N/v^|I| times in the projection?"""
    cset = normalize_columns(cols, 2 * array.s)
    if len(cset) > array.s:
        raise OversizedColumnSetError(
            f"column set of size {len(cset)} exceeds s={array.s}"
        )
    counts = _count_projection(array, cset)
    expected = array.n_rows // array.v ** len(cset)
    for code, count in enumerate(counts):
        if count != expected:
            return PropertyReport(
                UNBIASED,
                cset,
                holds=False,
                expected_multiplicity=expected,
                first_violation=decode_index(code, array.v, len(cset)),
                observed_count=count,
            )
    return PropertyReport(UNBIASED, cset, holds=True, expected_multiplicity=expected)


def check_covering(array: AontArray, cols: Iterable[int]) -> PropertyReport:
    """Does every |I|-tuple appear at least once in the projection?"""
    cset = normalize_columns(cols, 2 * array.s)
    if len(cset) > array.s:
        raise OversizedColumnSetError(
            f"column set of size {len(cset)} exceeds s={array.s}"
        )
    counts = _count_projection(array, cset)
    for code, count in enumerate(counts):
        if count == 0:
            return PropertyReport(
                COVERING,
                cset,
                holds=False,
                first_violation=decode_index(code, array.v, len(cset)),
                observed_count=0,
            )
    return PropertyReport(COVERING, cset, holds=True)


def column_set_family(s: int, t_i: int, t_o: int) -> Iterator[tuple[int, ...]]:
    """Column sets the definitions quantify over, in deterministic order.

    Yields the input block, the output block, then every union of t_i input
    columns with s-t_o output columns in lexicographic (I, J) order.
    """
    yield tuple(range(1, s + 1))
    yield tuple(range(s + 1, 2 * s + 1))
    for i_cols in combinations(range(1, s + 1), t_i):
        for j_cols in combinations(range(s + 1, 2 * s + 1), s - t_o):
            yield i_cols + j_cols


def classify(array: AontArray, t_i: int, t_o: int) -> ClassificationVerdict:
    """Full verdict: aont, weak-aont-only, or neither, with a failure witness.

    The unbiased pass runs first and may stop at its first failure; the
    covering pass then runs to completion before weak-aont-only is declared.
    """
    if not 1 <= t_i <= t_o <= array.s:
        raise InvalidParametersError(
            f"need 1 <= t_i <= t_o <= s, got t_i={t_i}, t_o={t_o}, s={array.s}"
        )
    family = list(column_set_family(array.s, t_i, t_o))

    unbiased_witness: tuple[int, ...] | None = None
    for cols in family:
        if not check_unbiased(array, cols).holds:
            unbiased_witness = cols
            break
    if unbiased_witness is None:
        return ClassificationVerdict(t_i, t_o, AONT)

    for cols in family:
        if not check_covering(array, cols).holds:
            return ClassificationVerdict(t_i, t_o, NEITHER, witness=cols)
    return ClassificationVerdict(t_i, t_o, WEAK_AONT_ONLY, witness=unbiased_witness)


# arrays are immutable, so verdicts can be memoized for the verify-heavy paths
cached_classify = lru_cache(maxsize=512)(classify)


def passes_unbiased_family(array: AontArray, t_i: int, t_o: int) -> bool:
    """Fast equivalent of classify(...).verdict == AONT for search inner loops.

    Aborts a column set as soon as any projected tuple exceeds its expected
    multiplicity, which is the common failure mode during enumeration.
    """
    if not 1 <= t_i <= t_o <= array.s:
        raise InvalidParametersError(
            f"need 1 <= t_i <= t_o <= s, got t_i={t_i}, t_o={t_o}, s={array.s}"
        )
    v = array.v
    n = array.n_rows
    for cols in column_set_family(array.s, t_i, t_o):
        idxs = [c - 1 for c in cols]
        expected = n // v ** len(cols)
        counts = [0] * v ** len(cols)
        ok = True
        for row in array.rows:
            code = 0
            for i in idxs:
                code = code * v + row[i]
            counts[code] += 1
            if counts[code] > expected:
                ok = False
                break
        if not ok:
            return False
    return True


# --- CSV surface -----------------------------------------------------------
#
# One row per line, 2s comma-separated single-token symbols, with an optional
# first line "# v=<v> s=<s>". Parsing then serializing a canonical table
# reproduces it byte-for-byte apart from that header.


def parse_array_csv(text: str, v: int | None = None, s: int | None = None) -> AontArray:
    lines = [line for line in text.splitlines() if line.strip()]
    if lines and lines[0].lstrip().startswith("#"):
        header = lines.pop(0).lstrip("# ").strip()
        fields = dict(part.split("=", 1) for part in header.split() if "=" in part)
        try:
            header_v = int(fields["v"])
            header_s = int(fields["s"])
        except (KeyError, ValueError):
            raise DimensionMismatchError(f"malformed header: {header!r}") from None
        if v is not None and v != header_v or s is not None and s != header_s:
            raise DimensionMismatchError(
                f"header (v={header_v}, s={header_s}) conflicts with (v={v}, s={s})"
            )
        v, s = header_v, header_s
    if not lines:
        raise DimensionMismatchError("no data rows")
    rows = [tuple(tok.strip() for tok in line.split(",")) for line in lines]
    width = len(rows[0])
    if s is None:
        if width % 2:
            raise DimensionMismatchError(f"odd row width {width}, cannot split into inputs/outputs")
        s = width // 2
    if v is None:
        v = round(len(rows) ** (1.0 / s))
        if v < 2 or v**s != len(rows):
            raise DimensionMismatchError(
                f"{len(rows)} rows is not a perfect s={s} power of any alphabet size"
            )
    return parse_array(rows, v, s)


def load_array_csv(path: str, v: int | None = None, s: int | None = None) -> AontArray:
    with open(path, encoding="utf-8") as fh:
        return parse_array_csv(fh.read(), v=v, s=s)


def dump_array_csv(array: AontArray, header: bool = True) -> str:
    lines = []
    if header:
        lines.append(f"# v={array.v} s={array.s}")
    for row in array.rows:
        lines.append(",".join(array.alphabet.glyph(x) for x in row))
    return "\n".join(lines) + "\n"


def save_array_csv(array: AontArray, path: str, header: bool = True) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_array_csv(array, header=header))
