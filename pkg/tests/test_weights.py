from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from satake_kit.algebra import StructuralError
from satake_kit.weights import (
    Coweight,
    dominance_leq,
    dominant_coweights,
    dominant_pairs,
    is_dominant,
    normalize_pair,
    rho_pairing,
    to_partition,
)


def test_is_dominant_examples():
    assert is_dominant((2, 1, 0))
    assert not is_dominant((1, 2))
    assert is_dominant((0, 0, 0))
    assert is_dominant((1, 0, -1))


def test_dominance_examples():
    assert dominance_leq((1, 1), (2, 0))
    assert not dominance_leq((2, 0), (1, 1))
    assert dominance_leq((3, 1, 0), (3, 1, 0))
    assert not dominance_leq((1, 0), (1, 1))  # different sizes
    with pytest.raises(StructuralError):
        dominance_leq((1, 0), (1, 0, 0))


def test_rho_pairing_examples():
    assert rho_pairing((2, 0)) == rho_pairing(Coweight([2, 0]))
    r = rho_pairing((2, 0))
    assert (r.value, r.half_value) == (2, 1)
    r = rho_pairing((1, 1))
    assert (r.value, r.half_value) == (0, 0)
    assert rho_pairing((0, 0, 0)).value == 0
    assert rho_pairing((1, 0)).half_value == Fraction(1, 2)


def test_dominance_is_partial_order():
    for n, s in [(2, 4), (3, 4), (4, 3)]:
        ws = dominant_coweights(n, s)
        for a, b, c in product(ws, repeat=3):
            assert dominance_leq(a, a)
            if dominance_leq(a, b) and dominance_leq(b, a):
                assert a == b
            if dominance_leq(a, b) and dominance_leq(b, c):
                assert dominance_leq(a, c)


def test_rho_difference_nonnegative_integer_below():
    for lam, mu in dominant_pairs(3, 5):
        if dominance_leq(mu, lam):
            d = rho_pairing(lam).half_value - rho_pairing(mu).half_value
            assert d.denominator == 1 and d >= 0


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_rho_difference_integral_on_root_lattice(a, b):
    n = min(len(a), len(b))
    a, b = a[:n], b[:n]
    b[-1] += sum(a) - sum(b)  # force equal size
    d = rho_pairing(a).half_value - rho_pairing(b).half_value
    assert d.denominator == 1


def test_normalize_pair_and_partition():
    lam, mu, k = normalize_pair(Coweight([1, 0, -1]), Coweight([0, 0, 0]))
    assert (lam.parts, mu.parts, k) == ((2, 1, 0), (1, 1, 1), 1)
    assert to_partition(Coweight([3, 1, 0, 0])) == (3, 1)
    with pytest.raises(ValueError):
        to_partition(Coweight([1, -1]))


def test_enumeration_counts():
    # partitions of 4 with at most 2 parts
    assert [w.parts for w in dominant_coweights(2, 4)] == [(4, 0), (3, 1), (2, 2)]
    assert len(dominant_coweights(3, 6)) == 7
    assert all(is_dominant(w) for w in dominant_coweights(4, 5))


def test_coweight_value_semantics():
    a = Coweight([2, 1])
    assert a + Coweight([1, 1]) == Coweight([3, 2])
    assert a.shift(-1).parts == (1, 0)
    assert Coweight([0, 2]).dominant() == Coweight([2, 0])
    assert a.to_json() == [2, 1] and a.size == 3 and a.n == 2
