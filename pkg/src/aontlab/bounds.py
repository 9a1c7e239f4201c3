"""Bound and exact-value evaluation for conditional entropies.

Every interval is computed from the input model alone (plus, for the
H(Y)-conditioned variants, a supplied output entropy) in double precision
over exact per-column entropies. The comparator places brute-force oracle
values against the applicable interval and records attainment.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log2
from typing import Sequence

from .arrays import AONT, WEAK_AONT_ONLY, AontArray, cached_classify
from .entropy import SubsetPair, conditional_entropy, subset_entropy
from .errors import (
    BlockTooLargeError,
    ClassificationMismatchError,
    InvalidParametersError,
    OutputEntropyRangeError,
    TooManyNonuniformError,
)
from .models import BLOCK_DEPENDENT, INDEPENDENT, InputModel, column_entropy

SYMMETRIC = "symmetric"
NONUNIFORM_EXACT = "nonuniform-exact"
BLOCK_EXACT = "block-exact"
ASYMMETRIC = "asymmetric"
ASYMMETRIC_GIVEN_HY = "asymmetric-hy"
WEAK = "weak"
WEAK_GIVEN_HY = "weak-hy"

ALL_TAGS = (
    SYMMETRIC,
    NONUNIFORM_EXACT,
    BLOCK_EXACT,
    ASYMMETRIC,
    ASYMMETRIC_GIVEN_HY,
    WEAK,
    WEAK_GIVEN_HY,
)

_EXACT_EPS = 1e-12
_SLACK = 1e-9


@dataclass(frozen=True)
class EntropyInterval:
    lower: float
    upper: float
    source: str
    exact: bool

    def __post_init__(self) -> None:
        if not (-_SLACK <= self.lower <= self.upper + _SLACK):
            raise InvalidParametersError(
                f"degenerate interval [{self.lower}, {self.upper}] from {self.source}"
            )

    def contains(self, value: float, tolerance: float = 1e-6) -> bool:
        return self.lower - tolerance <= value <= self.upper + tolerance


def _interval(lower: float, upper: float, source: str) -> EntropyInterval:
    return EntropyInterval(lower, upper, source, exact=abs(upper - lower) <= _EXACT_EPS)


def _point(value: float, source: str) -> EntropyInterval:
    return EntropyInterval(value, value, source, exact=True)


def _column_entropies(model: InputModel) -> list[float]:
    if model.kind != INDEPENDENT:
        raise InvalidParametersError("bounds from column entropies need an independent model")
    return [column_entropy(model, i) for i in range(1, model.s + 1)]


def _min_subset_sum(entropies: Sequence[float], t: int) -> float:
    """Sum of the t smallest column entropies; index breaks ties."""
    ordered = sorted(range(len(entropies)), key=lambda i: (entropies[i], i))
    return sum(entropies[i] for i in ordered[:t])


def _check_t_range(model: InputModel, t_i: int, t_o: int) -> None:
    if not 1 <= t_i <= t_o <= model.s:
        raise InvalidParametersError(
            f"need 1 <= t_i <= t_o <= s, got t_i={t_i}, t_o={t_o}, s={model.s}"
        )


def bounds_symmetric(model: InputModel, t: int) -> EntropyInterval:
    """Interval for H(X|Y) on a full symmetric transform, |X| = t, |Y] = s - t."""
    _check_t_range(model, t, t)
    hs = _column_entropies(model)
    log_v = log2(model.v)
    lower = max(0.0, sum(hs) - (model.s - t) * log_v)
    upper = _min_subset_sum(hs, t)
    return _interval(lower, upper, SYMMETRIC)


def exact_nonuniform_le_t(model: InputModel, t: int) -> float:
    """Exact H(X|Y) when at most t columns are non-uniform: the non-uniform
    entropies plus (t - r) * log2(v)."""
    _check_t_range(model, t, t)
    hs = _column_entropies(model)
    log_v = log2(model.v)
    nonuniform = [h for d, h in zip(model.columns, hs) if not d.is_uniform()]
    if len(nonuniform) > t:
        raise TooManyNonuniformError(
            f"{len(nonuniform)} non-uniform columns exceed t={t}"
        )
    return sum(nonuniform) + (t - len(nonuniform)) * log_v


def exact_block_dependent(model: InputModel, t: int) -> float:
    """Exact H(X|Y) for a dependent block of size <= t with uniform rest:
    H(block joint) + (t - |block|) * log2(v)."""
    if model.kind != BLOCK_DEPENDENT:
        raise InvalidParametersError("needs a block-dependent model")
    if not 1 <= t <= model.s:
        raise InvalidParametersError(f"need 1 <= t <= s, got t={t}, s={model.s}")
    if len(model.block) > t:
        raise BlockTooLargeError(f"block of size {len(model.block)} exceeds t={t}")
    return model.block_joint.entropy_bits() + (t - len(model.block)) * log2(model.v)


def bounds_asymmetric(
    model: InputModel,
    t_i: int,
    t_o: int,
    x_cols: Sequence[int] | None = None,
) -> EntropyInterval:
    """Interval for H(X|Y) on a full asymmetric transform, |X| = t_i,
    |Y| = s - t_o.

    The upper bound's H(X) term is pair-specific, so it enters only when
    `x_cols` is supplied; otherwise the X-independent envelope is returned.
    """
    _check_t_range(model, t_i, t_o)
    hs = _column_entropies(model)
    log_v = log2(model.v)
    total = sum(hs)
    min_sum = _min_subset_sum(hs, t_i)
    lower = max(0.0, total - (model.s - t_i) * log_v)
    terms = [
        min_sum + (t_o - t_i) * log_v,
        min_sum + model.s * log_v - total,
    ]
    if x_cols is not None:
        if len(set(x_cols)) != t_i:
            raise InvalidParametersError(f"X subset {x_cols} must have size t_i={t_i}")
        terms.append(sum(hs[c - 1] for c in x_cols))
    return _interval(lower, min(terms), ASYMMETRIC)


def bounds_asymmetric_given_hy(
    model: InputModel, t_i: int, t_o: int, h_y: float
) -> EntropyInterval:
    """H(Y)-conditioned sandwich for full asymmetric transforms; collapses to
    the closed-form identity when t_i = t_o."""
    _check_t_range(model, t_i, t_o)
    log_v = log2(model.v)
    if not -_SLACK <= h_y <= (model.s - t_o) * log_v + _SLACK:
        raise OutputEntropyRangeError(
            f"H(Y)={h_y} outside [0, {(model.s - t_o) * log_v}]"
        )
    total = sum(_column_entropies(model))
    lower = max(0.0, total - (t_o - t_i) * log_v - h_y)
    upper = min(total - h_y, (model.s + t_i - t_o) * log_v - h_y)
    return _interval(lower, upper, ASYMMETRIC_GIVEN_HY)


def _weak_log_term(v: int, s: int, t_i: int, t_o: int) -> float:
    return log2(v ** (s - t_i) - v ** (s - t_o) + 1)


def bounds_weak(
    model: InputModel,
    t_i: int,
    t_o: int,
    x_cols: Sequence[int] | None = None,
) -> EntropyInterval:
    """Interval for H(X|Y) under the covering relaxation; the completion-set
    size range v^(s-t_i) - v^(s-t_o) + 1 drives both ends."""
    _check_t_range(model, t_i, t_o)
    hs = _column_entropies(model)
    log_v = log2(model.v)
    total = sum(hs)
    log_term = _weak_log_term(model.v, model.s, t_i, t_o)
    lower = max(0.0, total - (model.s - t_o) * log_v - log_term)
    terms = [_min_subset_sum(hs, t_i) + log_term]
    if x_cols is not None:
        if len(set(x_cols)) != t_i:
            raise InvalidParametersError(f"X subset {x_cols} must have size t_i={t_i}")
        terms.append(sum(hs[c - 1] for c in x_cols))
    return _interval(lower, min(terms), WEAK)


def bounds_weak_given_hy(model: InputModel, t_i: int, t_o: int, h_y: float) -> EntropyInterval:
    """H(Y)-conditioned sandwich under the covering relaxation."""
    _check_t_range(model, t_i, t_o)
    log_v = log2(model.v)
    if not -_SLACK <= h_y <= (model.s - t_o) * log_v + _SLACK:
        raise OutputEntropyRangeError(
            f"H(Y)={h_y} outside [0, {(model.s - t_o) * log_v}]"
        )
    total = sum(_column_entropies(model))
    lower = max(0.0, total - _weak_log_term(model.v, model.s, t_i, t_o) - h_y)
    upper = total - h_y
    return _interval(lower, upper, WEAK_GIVEN_HY)


@dataclass(frozen=True)
class BoundComparison:
    pair: SubsetPair
    observed: float
    interval: EntropyInterval
    within: bool
    attains_lower: bool
    attains_upper: bool


def interval_for(
    array: AontArray,
    model: InputModel,
    pair: SubsetPair,
    which: str,
) -> EntropyInterval:
    """Build the interval a tag prescribes for this pair, after verifying the
    array actually belongs to the class the tag assumes."""
    t_i = len(pair.x)
    t_o = array.s - len(pair.y)
    if which in (SYMMETRIC, NONUNIFORM_EXACT, BLOCK_EXACT):
        if t_o != t_i:
            raise ClassificationMismatchError(
                f"{which} needs |Y| = s - |X|; got |X|={t_i}, |Y|={len(pair.y)}"
            )
        if cached_classify(array, t_i, t_i).verdict != AONT:
            raise ClassificationMismatchError(f"array is not a verified (t={t_i}) transform")
        if which == SYMMETRIC:
            return bounds_symmetric(model, t_i)
        if which == NONUNIFORM_EXACT:
            return _point(exact_nonuniform_le_t(model, t_i), NONUNIFORM_EXACT)
        return _point(exact_block_dependent(model, t_i), BLOCK_EXACT)
    if which in (ASYMMETRIC, ASYMMETRIC_GIVEN_HY):
        if t_o < t_i:
            raise ClassificationMismatchError(f"|X|={t_i} exceeds s - |Y|={t_o}")
        if cached_classify(array, t_i, t_o).verdict != AONT:
            raise ClassificationMismatchError(
                f"array is not a verified ({t_i},{t_o}) transform"
            )
        if which == ASYMMETRIC:
            return bounds_asymmetric(model, t_i, t_o, x_cols=pair.x)
        return bounds_asymmetric_given_hy(model, t_i, t_o, subset_entropy(array, model, pair.y))
    if which in (WEAK, WEAK_GIVEN_HY):
        if t_o < t_i:
            raise ClassificationMismatchError(f"|X|={t_i} exceeds s - |Y|={t_o}")
        if cached_classify(array, t_i, t_o).verdict not in (AONT, WEAK_AONT_ONLY):
            raise ClassificationMismatchError(
                f"array is not at least a covering ({t_i},{t_o}) transform"
            )
        if which == WEAK:
            return bounds_weak(model, t_i, t_o, x_cols=pair.x)
        return bounds_weak_given_hy(model, t_i, t_o, subset_entropy(array, model, pair.y))
    raise InvalidParametersError(f"unknown bound tag {which!r}")


def compare(
    array: AontArray,
    model: InputModel,
    pair: SubsetPair,
    which: str,
    tolerance: float = 1e-6,
) -> BoundComparison:
    """Evaluate the oracle H(X|Y) and place it against the tagged interval."""
    interval = interval_for(array, model, pair, which)
    observed = conditional_entropy(array, model, pair)
    return BoundComparison(
        pair=pair,
        observed=observed,
        interval=interval,
        within=interval.contains(observed, tolerance),
        attains_lower=abs(observed - interval.lower) <= tolerance,
        attains_upper=abs(observed - interval.upper) <= tolerance,
    )
