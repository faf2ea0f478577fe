from fractions import Fraction

import pytest

from satake_kit.algebra import QPolynomial
from satake_kit.stalks import (
    complex_stalk_poly,
    orbit_real_dimension,
    quaternionic_stalk_table,
    stalk_rows,
    stalk_table,
    symmetric_stalk_table,
)
from satake_kit.weights import dominance_leq, dominant_pairs, rho_pairing

Q = QPolynomial


def test_examples():
    assert complex_stalk_poly((1, 0), (1, 0)) == Q.one()
    assert complex_stalk_poly((2, 0), (1, 1)) == Q.one()
    assert complex_stalk_poly((2, 1, 0), (1, 1, 1)) == Q({0: 1, 1: 1})
    assert complex_stalk_poly((1, 1), (2, 0)).is_zero()


def test_quaternionic_degrees():
    rows = {(r.lam.parts, r.mu.parts): r for r in stalk_rows(2, 2, "quaternionic")}
    assert rows[((2, 0), (1, 1))].degrees == {Fraction(-4): 1}
    assert rows[((2, 0), (2, 0))].degrees == {Fraction(-4): 1}
    assert rows[((1, 1), (1, 1))].degrees == {Fraction(0): 1}
    cx = {(r.lam.parts, r.mu.parts): r for r in stalk_rows(2, 2, "complex")}
    assert cx[((2, 0), (1, 1))].degrees == {Fraction(-2): 1}


def test_orbit_dimensions():
    assert orbit_real_dimension((2, 0), "complex") == 4
    assert orbit_real_dimension((2, 0), "quaternionic") == 8
    assert orbit_real_dimension((1, 1), "quaternionic") == 0
    with pytest.raises(ValueError):
        orbit_real_dimension((1, 0), "octonionic")
    with pytest.raises(ValueError):
        stalk_rows(2, 2, "octonionic")


@pytest.mark.parametrize("n,size", [(2, 6), (3, 5), (4, 4)])
def test_parity_and_doubling(n, size):
    cx = stalk_table(n, size, "complex")
    qt = quaternionic_stalk_table(n, size)
    sy = symmetric_stalk_table(n, size)
    assert cx.parity_ok() and qt.parity_ok() and sy.parity_ok()
    for a, b, c in zip(cx.rows, qt.rows, sy.rows):
        assert a.poly == b.poly == c.poly
        assert b.degrees == c.degrees
        assert b.degrees == {2 * d: v for d, v in a.degrees.items()}
        assert all(d % 4 == (-4 * rho_pairing(a.lam).half_value) % 4 for d in b.degrees)


def test_constant_term_and_degree_bound():
    for n, size in [(2, 6), (3, 5)]:
        for lam, mu in dominant_pairs(n, size):
            if not dominance_leq(mu, lam):
                continue
            p = complex_stalk_poly(lam, mu)
            assert p[0] == 1  # the stalk is nonzero in the lowest degree
            gap = rho_pairing(lam).half_value - rho_pairing(mu).half_value
            if lam != mu:
                assert p.degree() < gap
            else:
                assert p == Q.one()


def test_table_json_shape():
    data = stalk_table(2, 2, "quaternionic").to_json()
    assert data["parity_ok"] is True
    row = next(r for r in data["rows"] if r["lam"] == [2, 0] and r["mu"] == [1, 1])
    assert row == {"lam": [2, 0], "mu": [1, 1], "poly": "1", "degrees": {"-4": 1}, "orbit_dim": 8}
