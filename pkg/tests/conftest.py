import random
from fractions import Fraction

import pytest

from aontlab import builtin, make_independent_model
from aontlab.models import InputModel


@pytest.fixture(scope="session")
def table1():
    return builtin("table1")


@pytest.fixture(scope="session")
def table2():
    return builtin("table2")


@pytest.fixture(scope="session")
def table3():
    return builtin("table3")


def example1_model() -> InputModel:
    F = Fraction
    return make_independent_model([(F(1, 4), F(1, 8), F(5, 8)), (F(1, 3), F(1, 6), F(1, 2))])


def example3_model() -> InputModel:
    F = Fraction
    return make_independent_model(
        [(F(1, 6), F(1, 3), F(1, 2)), (F(1, 2), F(1, 4), F(1, 4)), (F(7, 10), F(1, 5), F(1, 10))]
    )


def example4_model() -> InputModel:
    F = Fraction
    return make_independent_model([(F(1, 4), F(3, 4)), (F(1, 3), F(2, 3)), (F(1, 2), F(1, 2))])


def random_masses(rng: random.Random, v: int, max_weight: int = 12) -> tuple[Fraction, ...]:
    """Exact rational pmf from positive integer weights."""
    weights = [rng.randint(1, max_weight) for _ in range(v)]
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


def random_independent_model(rng: random.Random, s: int, v: int) -> InputModel:
    return make_independent_model([random_masses(rng, v) for _ in range(s)])
