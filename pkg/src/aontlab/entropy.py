"""Exact-enumeration entropy engine.

Joint distributions over column subsets are accumulated as exact rationals
keyed by the mixed-radix tuple encoding; only the final log/sum runs in
floating point. Conditional entropy is H(X,Y) - H(Y), which is the
brute-force oracle valid for any array, not just verified transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arrays import AONT, AontArray, cached_classify, normalize_columns
from .coding import entropy_bits
from .errors import FormulaPreconditionError, InvalidParametersError
from .models import (
    INDEPENDENT,
    Distribution,
    InputModel,
    column_entropy,
    joint_probability,
)

ZERO = Fraction(0)


@dataclass(frozen=True)
class SubsetPair:
    """Protected input columns X and observed output columns Y (1-based)."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(sorted(set(self.x))))
        object.__setattr__(self, "y", tuple(sorted(set(self.y))))
        if not self.x:
            raise InvalidParametersError("X must be non-empty")


def _validate_pair(array: AontArray, pair: SubsetPair) -> None:
    s = array.s
    if pair.x[0] < 1 or pair.x[-1] > s:
        raise InvalidParametersError(f"X columns {pair.x} outside inputs 1..{s}")
    if pair.y and (pair.y[0] <= s or pair.y[-1] > 2 * s):
        raise InvalidParametersError(f"Y columns {pair.y} outside outputs {s + 1}..{2 * s}")


def _accumulate(array: AontArray, model: InputModel, cols: Sequence[int]) -> list[Fraction]:
    """Dense exact pmf over the projection onto `cols` (1-based, any order)."""
    v = array.v
    s = array.s
    idxs = [c - 1 for c in cols]
    masses = [ZERO] * v ** len(cols)
    for row in array.rows:
        p = joint_probability(model, row[:s])
        if p:
            code = 0
            for i in idxs:
                code = code * v + row[i]
            masses[code] += p
    return masses


def marginal_distribution(array: AontArray, model: InputModel, cols: Iterable[int]) -> Distribution:
    """Exact pmf the model induces on any mix of input/output columns."""
    cset = normalize_columns(cols, 2 * array.s)
    return Distribution(array.v, len(cset), tuple(_accumulate(array, model, cset)))


def subset_entropy(array: AontArray, model: InputModel, cols: Iterable[int]) -> float:
    return marginal_distribution(array, model, cols).entropy_bits()


def conditional_entropy(array: AontArray, model: InputModel, pair: SubsetPair) -> float:
    """Brute-force H(X|Y) = H(X,Y) - H(Y) from the exact joint."""
    _validate_pair(array, pair)
    v = array.v
    joint = _accumulate(array, model, pair.x + pair.y)
    h_xy = entropy_bits(joint)
    y_size = v ** len(pair.y)
    y_marginal = [ZERO] * y_size
    for code, p in enumerate(joint):
        if p:
            y_marginal[code % y_size] += p
    return h_xy - entropy_bits(y_marginal)


def conditional_entropy_formula(array: AontArray, model: InputModel, pair: SubsetPair) -> float:
    """Closed-form H(X|Y) = sum_i H(X_i) - H(Y).

    Valid only for an independent model on an array verified as a full
    symmetric transform at t = |X| with |Y| = s - t; anything else raises.
    """
    _validate_pair(array, pair)
    if model.kind != INDEPENDENT:
        raise FormulaPreconditionError("closed form requires an independent model")
    t = len(pair.x)
    if len(pair.y) != array.s - t:
        raise FormulaPreconditionError(
            f"closed form needs |Y| = s - |X| = {array.s - t}, got {len(pair.y)}"
        )
    if cached_classify(array, t, t).verdict != AONT:
        raise FormulaPreconditionError(f"array is not a verified (t={t}) transform")
    h_cols = sum(column_entropy(model, i) for i in range(1, array.s + 1))
    h_y = subset_entropy(array, model, pair.y) if pair.y else 0.0
    return h_cols - h_y


@dataclass(frozen=True)
class CompletionSet:
    """Complementary-input tuples consistent with a fixed (X, Y) observation."""

    pair: SubsetPair
    given_x: tuple[int, ...]
    given_y: tuple[int, ...]
    completions: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.completions)


def completion_set(
    array: AontArray,
    pair: SubsetPair,
    given_x: Sequence[int],
    given_y: Sequence[int],
) -> CompletionSet:
    """All tuples on the inputs outside X appearing in a row that matches
    X = given_x and Y = given_y. Empty output is legal for sparse arrays."""
    _validate_pair(array, pair)
    if len(given_x) != len(pair.x) or len(given_y) != len(pair.y):
        raise InvalidParametersError("observation tuples must match the subset sizes")
    complement = tuple(c for c in array.input_columns if c not in pair.x)
    found: set[tuple[int, ...]] = set()
    for row in array.rows:
        if array.project(row, pair.x) == tuple(given_x) and array.project(row, pair.y) == tuple(
            given_y
        ):
            found.add(array.project(row, complement))
    return CompletionSet(pair, tuple(given_x), tuple(given_y), tuple(sorted(found)))


def statistical_distance(array: AontArray, model: InputModel, pair: SubsetPair) -> float:
    """max over observed y of SD(P[X | Y=y], P[X]), computed exactly.

    Zero-mass y tuples have no conditional and are skipped.
    """
    _validate_pair(array, pair)
    v = array.v
    joint = _accumulate(array, model, pair.x + pair.y)
    x_size = v ** len(pair.x)
    y_size = v ** len(pair.y)
    x_marginal = [ZERO] * x_size
    y_marginal = [ZERO] * y_size
    for code, p in enumerate(joint):
        if p:
            x_marginal[code // y_size] += p
            y_marginal[code % y_size] += p
    worst = ZERO
    for y_code, p_y in enumerate(y_marginal):
        if not p_y:
            continue
        total = ZERO
        for x_code in range(x_size):
            total += abs(joint[x_code * y_size + y_code] / p_y - x_marginal[x_code])
        sd = total / 2
        if sd > worst:
            worst = sd
    return float(worst)
