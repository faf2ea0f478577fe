import pytest

from satake_kit.algebra import MultiPolynomial, PolyMatrix, StructuralError
from satake_kit.centralizers import interleave_permutation, tau_embed_matrix
from satake_kit.twistor import (
    ClassBasis,
    EquivariantRing,
    build_phi,
    cup_matrix,
    e_T,
    e_T2n,
    e_T_X,
    expected_charpoly,
    localization_injective,
    localization_map,
    splitting_holds,
    twistor_pullback,
    twistor_report,
    upsilon_basis,
    upsilon_h_basis,
    upsilon_prime_basis,
)


def t1() -> MultiPolynomial:
    return MultiPolynomial.var(0, 1)


def test_n1_cup_matrices():
    t = t1()
    assert cup_matrix(upsilon_basis(1)) == PolyMatrix([[t, 1], [0, -t]], 1)
    assert cup_matrix(upsilon_h_basis(1)) == PolyMatrix([[t * t]], 1)
    assert cup_matrix(upsilon_prime_basis(1)) == PolyMatrix([[0, 1], [t * t, 0]], 1)
    full = MultiPolynomial.gens(2)
    assert cup_matrix(upsilon_basis(1, restricted=False)) == PolyMatrix([[full[0], 1], [0, full[1]]], 2)


def test_n1_phi():
    phi = build_phi(1)
    t = t1()
    assert phi.phi == PolyMatrix([[1, 0], [-t, 1]], 1)
    assert phi.det_phi == MultiPolynomial.one(1)


def test_localization_examples():
    ring = EquivariantRing(1, "complex")
    xi = ring.gen()
    t = t1()
    assert localization_map(xi * xi, ring) == [t * t, t * t]
    assert localization_map(ring.one(), ring) == [MultiPolynomial.one(1)] * 2
    q = EquivariantRing(2, "quaternionic")
    ts = MultiPolynomial.gens(2)
    assert localization_map(q.gen(), q) == [ts[0] * ts[0], ts[1] * ts[1]]


def test_pullback():
    q = EquivariantRing(2, "quaternionic")
    c = EquivariantRing(2, "complex")
    assert twistor_pullback(q.one(), 2) == c.one()
    assert c.equal(twistor_pullback(q.gen(), 2), c.gen() ** 2)
    assert twistor_pullback(q.relation(), 2).is_zero()


def test_relations_vanish_under_localization():
    for n in (1, 2, 3):
        for kind in ("complex_full", "complex", "quaternionic"):
            ring = EquivariantRing(n, kind)
            assert all(v.is_zero() for v in localization_map(ring.relation(), ring))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrices_and_phi(n):
    assert cup_matrix(upsilon_basis(n, restricted=False)) == e_T2n(n)
    assert cup_matrix(upsilon_basis(n)) == e_T(n)
    assert cup_matrix(upsilon_h_basis(n)) == e_T_X(n)
    assert cup_matrix(upsilon_prime_basis(n)) == tau_embed_matrix(e_T_X(n))
    assert splitting_holds(n)
    phi = build_phi(n)
    assert phi.perm == interleave_permutation(n, n)
    assert phi.det_phi.is_constant() and abs(phi.det_phi.constant_term()) == 1
    assert phi.phi * phi.tau_e_T_X == phi.e_T * phi.phi
    assert cup_matrix(upsilon_basis(n)).charpoly() == expected_charpoly(n)
    for basis in (upsilon_basis(n, restricted=False), upsilon_basis(n), upsilon_h_basis(n)):
        assert localization_injective(basis)


def test_report_all_checks_pass():
    report = twistor_report(2)
    assert all(report["checks"].values())
    assert report["phi"]["det"] in ("1", "-1")


def test_basis_errors():
    ring = EquivariantRing(2, "quaternionic")
    eta = ring.gen()
    missing = ClassBasis(ring, "bad", (eta + 1, eta * 0 + 2 * ring.one()), ("a", "b"))
    with pytest.raises(StructuralError):
        missing.coordinates(eta)  # not monic
    gap = ClassBasis(ring, "gap", (eta, eta * 0 + ring.one() * 0 + eta * eta), ("a", "b"))
    with pytest.raises(StructuralError):
        gap.coordinates(ring.one())  # degree 0 not covered
    with pytest.raises(ValueError):
        EquivariantRing(2, "real")
    with pytest.raises(StructuralError):
        ring.reduce(MultiPolynomial.one(5))
