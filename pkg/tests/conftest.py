"""Shared generators: seeded random data and hypothesis strategies."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tiltwall import CharVector, ReducedClass, RuledThreefold, TiltPoint


def rand_rat(rng: random.Random, span: int = 12, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_lattice_char(rng: random.Random) -> CharVector:
    return CharVector(
        rng.randint(-5, 5),
        rng.randint(-5, 5),
        rng.randint(-8, 8),
        Fraction(rng.randint(-10, 10), 2),
        Fraction(rng.randint(-10, 10), 2),
        Fraction(rng.randint(-18, 18), 6),
    )


def rand_reduced(rng: random.Random) -> ReducedClass:
    return ReducedClass(
        rng.randint(-3, 3), rng.randint(-4, 4), Fraction(rng.randint(-8, 8), 2)
    )


def rand_threefold(rng: random.Random) -> RuledThreefold:
    return RuledThreefold(rng.randint(0, 5), rng.randint(-3, 5))


def rand_point(rng: random.Random) -> TiltPoint:
    return TiltPoint(
        Fraction(rng.randint(1, 9), rng.randint(1, 4)), rand_rat(rng)
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260809)


rats = st.fractions(min_value=-30, max_value=30, max_denominator=6)

lattice_chars = st.builds(
    CharVector,
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-8, 8),
    st.integers(-10, 10).map(lambda n: Fraction(n, 2)),
    st.integers(-10, 10).map(lambda n: Fraction(n, 2)),
    st.integers(-18, 18).map(lambda n: Fraction(n, 6)),
)

reduced_classes = st.builds(
    ReducedClass,
    st.integers(-3, 3),
    st.integers(-4, 4),
    st.integers(-8, 8).map(lambda n: Fraction(n, 2)),
)

threefolds = st.builds(RuledThreefold, st.integers(0, 5), st.integers(-3, 5))

tilt_points = st.builds(
    TiltPoint,
    st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(lambda q: q > 0),
    rats,
)
