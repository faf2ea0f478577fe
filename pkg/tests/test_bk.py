import pytest

from satake_kit.algebra import QPolynomial
from satake_kit.bk import (
    DimensionOverflow,
    bk_filtration,
    bk_polynomial,
    bk_polynomial_matrix,
    build_irrep,
)
from satake_kit.gln import weight_multiplicity, weyl_dimension
from satake_kit.kostka import kostka_foulkes_charge
from satake_kit.weights import Coweight, dominant_coweights

Q = QPolynomial


def test_standard_rep():
    rep = build_irrep((1, 0))
    assert rep.dimension == 2
    assert rep.e_matrix().rank() == 1


def test_sym2_weights():
    rep = build_irrep((2, 0))
    assert rep.dimension == 3
    assert set(rep.weights()) == {Coweight([2, 0]), Coweight([1, 1]), Coweight([0, 2])}


def test_exterior_square():
    rep = build_irrep((1, 1, 0))
    assert rep.dimension == 3


def test_examples():
    assert bk_polynomial(build_irrep((2, 0)), (1, 1)) == Q({1: 1})
    rep = build_irrep((2, 1, 0))
    assert bk_polynomial(rep, (2, 1, 0)) == Q.one()
    assert bk_polynomial(rep, (1, 1, 1)) == Q({1: 1, 2: 1})
    assert bk_polynomial(rep, (3, 0, 0)).is_zero()


def test_filtration_monotone_and_exhaustive():
    for lam in dominant_coweights(3, 4):
        rep = build_irrep(lam)
        for mu in rep.weights():
            dims = bk_filtration(rep, mu).dims
            assert list(dims) == sorted(dims)
            assert dims[-1] == weight_multiplicity(lam, mu)
            assert bk_polynomial(rep, mu).evaluate(1) == weight_multiplicity(lam, mu)


def test_full_grid_and_matrix_route():
    for n, size in [(2, 5), (3, 3)]:
        for s in range(size + 1):
            for lam in dominant_coweights(n, s):
                rep = build_irrep(lam)
                assert rep.dimension == weyl_dimension(lam)
                for mu in dominant_coweights(n, s):
                    p = bk_polynomial(rep, mu)
                    assert p == kostka_foulkes_charge(lam, mu)
                    assert p == bk_polynomial_matrix(rep, mu)


def test_negative_highest_weight():
    rep = build_irrep((1, 0, -1))
    assert rep.dimension == 8
    assert bk_polynomial(rep, (0, 0, 0)) == Q({1: 1, 2: 1})


def test_dimension_guard():
    with pytest.raises(DimensionOverflow):
        build_irrep((4, 2, 0), max_dim=10)
    with pytest.raises(ValueError):
        build_irrep((0, 1))
