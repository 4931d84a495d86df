import random

import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import same_length
from seqforge.errors import DomainError
from seqforge.interleave_gray import (
    InterleaveSpec,
    deinterleave,
    gray_compose,
    gray_decompose,
    interleave,
    krone_sarwate_autocorrelation,
    shifted_interleave_correlation,
)
from seqforge.seqcore import BinarySequence, QuaternarySequence, auto_spectrum, cross_correlation


def test_interleave_small():
    spec = InterleaveSpec(BinarySequence([0, 1, 1]), BinarySequence([1, 0, 0]), 1, 0)
    # rows: (a0[1], a1[0]), (a0[2], a1[1]), (a0[0], a1[2])
    assert interleave(spec).symbols == (1, 1, 1, 0, 0, 0)


def test_gray_table():
    c = BinarySequence([0, 0, 1, 1])
    d = BinarySequence([0, 1, 1, 0])
    assert gray_compose(c, d).symbols == (0, 1, 2, 3)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=40))
def test_gray_round_trip(symbols):
    u = QuaternarySequence(symbols)
    assert gray_compose(*gray_decompose(u)) == u


@given(same_length(alphabet=2, min_size=1, max_size=20))
def test_deinterleave_inverts(pair):
    a, b = pair
    assert deinterleave(interleave(InterleaveSpec(a, b))) == (a, b)


def test_deinterleave_odd():
    with pytest.raises(DomainError):
        deinterleave(BinarySequence([0, 1, 1]))


def test_spec_validation():
    with pytest.raises(DomainError):
        InterleaveSpec(BinarySequence([0, 1]), BinarySequence([0, 1, 1]))


@given(same_length(alphabet=2, count=4, min_size=1, max_size=12), st.data())
def test_eq1_matches_direct(cols, data):
    n = len(cols[0])
    g = [data.draw(st.integers(0, n - 1)) for _ in range(4)]
    u = InterleaveSpec(cols[0], cols[1], g[0], g[1])
    v = InterleaveSpec(cols[2], cols[3], g[2], g[3])
    iu, iv = interleave(u), interleave(v)
    for tau in range(2 * n):
        assert shifted_interleave_correlation(u, v, tau) == cross_correlation(iu, iv, tau)


@given(same_length(alphabet=2, min_size=2, max_size=30))
def test_krone_sarwate(pair):
    c, d = pair
    spec = auto_spectrum(gray_compose(c, d))
    for tau in range(len(c)):
        assert krone_sarwate_autocorrelation(c, d, tau) == spec[tau]


def test_krone_sarwate_frozen():
    # frozen from a float oracle on a fixed random draw
    rng = random.Random(7)
    c = BinarySequence(rng.randint(0, 1) for _ in range(10))
    d = BinarySequence(rng.randint(0, 1) for _ in range(10))
    got = [krone_sarwate_autocorrelation(c, d, tau).to_json() for tau in range(10)]
    assert got == [[10, 0], [0, 0], [0, 2], [-2, 0], [4, -2], [2, 0], [4, 2], [-2, 0], [0, -2], [0, 0]]
