"""Prior probability models on the s inputs.

Two shapes are supported: s mutually independent per-column distributions,
or one dependent block of columns with every column outside the block
uniform and independent. All masses are exact rationals; entropy is the
only floating-point quantity (base-2 logarithms, 0*log 0 = 0).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import log2
from typing import Iterable, Iterator, Sequence

from .coding import decode_index, encode_tuple, entropy_bits
from .errors import (
    ArityMismatchError,
    BlockColumnError,
    BlockRangeError,
    InvalidParametersError,
    MassSumError,
    UnknownSymbolError,
)

INDEPENDENT = "independent"
BLOCK_DEPENDENT = "block-dependent"

ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Coerce ints, strings like '1/4', (num, den) pairs, or Fractions."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return Fraction(int(value[0]), int(value[1]))
    if isinstance(value, float):
        raise MassSumError(f"refusing inexact float mass {value!r}; pass a rational")
    return Fraction(value)


@dataclass(frozen=True)
class Distribution:
    """Exact pmf over length-`length` tuples from {0..v-1}, stored densely.

    Index order is the big-endian base-v encoding, i.e. lexicographic tuple
    order. length 0 is the trivial point distribution on the empty tuple.
    """

    v: int
    length: int
    masses: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.v < 2 or self.length < 0:
            raise InvalidParametersError(f"bad distribution shape v={self.v}, length={self.length}")
        if len(self.masses) != self.v**self.length:
            raise ArityMismatchError(
                f"expected {self.v ** self.length} masses, got {len(self.masses)}"
            )
        total = Fraction(0)
        for p in self.masses:
            if p < 0 or p > 1:
                raise MassSumError(f"mass {p} outside [0, 1]")
            total += p
        if total != ONE:
            raise MassSumError(f"masses sum to {total}, expected 1")

    def mass(self, tup: Sequence[int]) -> Fraction:
        if len(tup) != self.length:
            raise ArityMismatchError(f"tuple {tup!r} has length {len(tup)}, expected {self.length}")
        for x in tup:
            if not 0 <= x < self.v:
                raise UnknownSymbolError(f"symbol {x} outside 0..{self.v - 1}")
        return self.masses[encode_tuple(tup, self.v)]

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        for idx, p in enumerate(self.masses):
            yield decode_index(idx, self.v, self.length), p

    def entropy_bits(self) -> float:
        return entropy_bits(self.masses)

    def is_uniform(self) -> bool:
        target = Fraction(1, self.v**self.length)
        return all(p == target for p in self.masses)


def uniform(v: int, length: int = 1) -> Distribution:
    return Distribution(v, length, tuple([Fraction(1, v**length)] * v**length))


def column(v: int, masses: Iterable) -> Distribution:
    """Single-column distribution from any rational-like mass sequence."""
    return Distribution(v, 1, tuple(as_fraction(p) for p in masses))


def _coerce_distribution(d, length: int | None = None) -> Distribution:
    if isinstance(d, Distribution):
        return d
    masses = tuple(as_fraction(p) for p in d)
    if length == 1 or length is None:
        return Distribution(len(masses), 1, masses)
    raise ArityMismatchError("joint distributions must be passed as Distribution objects")


@dataclass(frozen=True)
class InputModel:
    """Prior on the s input columns; construct via the make_* helpers."""

    s: int
    v: int
    kind: str
    columns: tuple[Distribution, ...] | None = None
    block: tuple[int, ...] = ()
    block_joint: Distribution | None = None

    def __post_init__(self) -> None:
        if self.kind == INDEPENDENT:
            if self.columns is None or len(self.columns) != self.s:
                raise ArityMismatchError(f"independent model needs exactly {self.s} columns")
            for d in self.columns:
                if d.length != 1 or d.v != self.v:
                    raise ArityMismatchError(
                        f"column distribution over {d.v}^{d.length} does not match v={self.v}"
                    )
        elif self.kind == BLOCK_DEPENDENT:
            if self.block != tuple(sorted(set(self.block))):
                raise BlockRangeError(f"block {self.block} must be sorted and duplicate-free")
            if self.block and (self.block[0] < 1 or self.block[-1] > self.s):
                raise BlockRangeError(f"block {self.block} outside 1..{self.s}")
            joint = self.block_joint
            if joint is None or joint.length != len(self.block) or joint.v != self.v:
                raise ArityMismatchError(
                    f"block joint must be a distribution over {self.v}^{len(self.block)}"
                )
        else:
            raise InvalidParametersError(f"unknown model kind {self.kind!r}")


def make_independent_model(dists: Sequence) -> InputModel:
    """Model of s mutually independent columns; each entry is a Distribution
    over single symbols or a plain sequence of rational masses."""
    cols = tuple(_coerce_distribution(d) for d in dists)
    if not cols:
        raise ArityMismatchError("need at least one column distribution")
    v = cols[0].v
    return InputModel(s=len(cols), v=v, kind=INDEPENDENT, columns=cols)


def make_block_dependent_model(
    s: int,
    v: int,
    block: Iterable[int],
    joint: Distribution | None,
) -> InputModel:
    """One dependent block with the remaining columns uniform-independent.

    An empty block with a trivial joint degenerates to the all-uniform model.
    """
    block_t = tuple(sorted(set(int(c) for c in block)))
    if block_t and (block_t[0] < 1 or block_t[-1] > s):
        raise BlockRangeError(f"block {block_t} outside 1..{s}")
    if joint is None:
        if block_t:
            raise ArityMismatchError("non-empty block needs a joint distribution")
        joint = Distribution(v, 0, (ONE,))
    return InputModel(s=s, v=v, kind=BLOCK_DEPENDENT, block=block_t, block_joint=joint)


def uniform_model(s: int, v: int) -> InputModel:
    return make_independent_model([uniform(v)] * s)


def joint_probability(model: InputModel, x: Sequence[int]) -> Fraction:
    """Exact Pr[X_1..X_s = x]."""
    if len(x) != model.s:
        raise ArityMismatchError(f"input tuple length {len(x)}, expected {model.s}")
    if model.kind == INDEPENDENT:
        p = ONE
        for d, sym in zip(model.columns, x):
            p *= d.mass((sym,))
            if not p:
                return p
        return p
    inside = tuple(x[c - 1] for c in model.block)
    outside = model.s - len(model.block)
    for sym in x:
        if not 0 <= sym < model.v:
            raise UnknownSymbolError(f"symbol {sym} outside 0..{model.v - 1}")
    return model.block_joint.mass(inside) / model.v**outside


def column_entropy(model: InputModel, i: int) -> float:
    """H(X_i) in bits; dependent-block columns must be queried jointly."""
    if not 1 <= i <= model.s:
        raise InvalidParametersError(f"column {i} outside 1..{model.s}")
    if model.kind == INDEPENDENT:
        return model.columns[i - 1].entropy_bits()
    if i in model.block:
        raise BlockColumnError(f"column {i} lies in the dependent block {model.block}")
    return log2(model.v)


def nonuniform_columns(model: InputModel) -> tuple[int, ...]:
    """1-based labels of the non-uniform columns of an independent model."""
    if model.kind != INDEPENDENT:
        raise InvalidParametersError("only meaningful for independent models")
    return tuple(i + 1 for i, d in enumerate(model.columns) if not d.is_uniform())


# --- JSON surface -----------------------------------------------------------
#
# {"s": .., "v": .., "kind": "independent", "columns": [[[num, den], ..] per
# column]} or {"kind": "block-dependent", "block": {"indices": [..],
# "joint": [[tuple, [num, den]], ..]}}. Denominators are positive integers.


def _frac_pair(p: Fraction) -> list[int]:
    return [p.numerator, p.denominator]


def model_to_json_dict(model: InputModel) -> dict:
    doc: dict = {"s": model.s, "v": model.v, "kind": model.kind}
    if model.kind == INDEPENDENT:
        doc["columns"] = [[_frac_pair(p) for p in d.masses] for d in model.columns]
    else:
        doc["block"] = {
            "indices": list(model.block),
            "joint": [[list(tup), _frac_pair(p)] for tup, p in model.block_joint.items() if p],
        }
    return doc


def dump_model_json(model: InputModel) -> str:
    return json.dumps(model_to_json_dict(model), indent=2) + "\n"


def model_from_json_dict(doc: dict) -> InputModel:
    try:
        s = int(doc["s"])
        v = int(doc["v"])
        kind = doc["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParametersError(f"malformed model document: {exc}") from None
    if kind == INDEPENDENT:
        cols = [
            Distribution(v, 1, tuple(as_fraction(p) for p in masses))
            for masses in doc["columns"]
        ]
        if len(cols) != s:
            raise ArityMismatchError(f"expected {s} columns, got {len(cols)}")
        return make_independent_model(cols)
    if kind == BLOCK_DEPENDENT:
        block = tuple(int(c) for c in doc["block"]["indices"])
        size = len(block)
        masses = [Fraction(0)] * v**size
        for tup, pair in doc["block"]["joint"]:
            if len(tup) != size:
                raise ArityMismatchError(f"joint tuple {tup} has length {len(tup)}, expected {size}")
            masses[encode_tuple(tup, v)] = as_fraction(pair)
        return make_block_dependent_model(s, v, block, Distribution(v, size, tuple(masses)))
    raise InvalidParametersError(f"unknown model kind {kind!r}")


def load_model_json(path: str) -> InputModel:
    with open(path, encoding="utf-8") as fh:
        return model_from_json_dict(json.load(fh))


def save_model_json(model: InputModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_model_json(model))
