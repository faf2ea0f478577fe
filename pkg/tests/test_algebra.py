"""Exact arithmetic: q-polynomials, multivariate polynomials and matrices."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from satake_kit.algebra import (
    MultiPolynomial,
    NonPolynomialResult,
    NotDivisible,
    PolyMatrix,
    QPolynomial,
    RationalMatrix,
    SingularMatrix,
    StructuralError,
    kernel_power,
    matrix_conjugate,
    nullspace,
    poly_mul,
    rank,
    variable_names,
)
from satake_kit.algebra.qpoly import q

NAMES = variable_names(2, ["xi"])
T1, T2, XI = MultiPolynomial.gens(3)


# -- strategies ------------------------------------------------------------------

small = st.integers(-4, 4)
fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def polys(nvars: int = 3, max_terms: int = 4):
    mono = st.tuples(*[st.integers(0, 2)] * nvars)
    return st.dictionaries(mono, fractions, max_size=max_terms).map(lambda d: MultiPolynomial(d, nvars))


qpolys = st.dictionaries(st.integers(-4, 6), small, max_size=5).map(QPolynomial)


def rational_matrices(n: int):
    return st.lists(st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n).map(RationalMatrix)


def to_sympy(p: MultiPolynomial, syms):
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s**e for s, e in zip(syms, m)])
                for m, c in p.terms.items()), sympy.Integer(0))


# -- QPolynomial -------------------------------------------------------------------

def test_qpoly_basic_values():
    k = q + q * q
    assert k == QPolynomial({1: 1, 2: 1})
    assert str(k) == "q + q^2"
    assert k.degree() == 2 and k.low_degree() == 1
    assert k.evaluate(1) == 2
    assert str(k.invert().shift(2)) == "1 + q"
    assert QPolynomial({0: 0}).is_zero()
    assert str(QPolynomial({-1: 1, 1: -2})) == "q^(-1) - 2*q"


def test_qpoly_json_roundtrip():
    k = QPolynomial({3: 2, 4: 1, 5: 1})
    assert QPolynomial.from_json(k.to_json()) == k


@given(qpolys, qpolys, qpolys)
def test_qpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QPolynomial.zero()


@given(qpolys, st.integers(-3, 3))
def test_qpoly_evaluate_is_homomorphism(a, k):
    x = Fraction(3, 2)
    assert (a * a.shift(k)).evaluate(x) == a.evaluate(x) * a.shift(k).evaluate(x)
    assert a.invert().invert() == a


# -- MultiPolynomial -----------------------------------------------------------------

def test_difference_of_squares():
    assert poly_mul(XI - T1, XI + T1) == XI**2 - T1**2


def test_product_of_two_linear_factors():
    p = (XI - T1) * (XI - T2)
    assert p == XI**2 - (T1 + T2) * XI + T1 * T2
    assert p.to_str(NAMES) == "t1*t2 - t1*xi - t2*xi + xi^2"


def test_one_is_identity():
    p = T1 * XI + 3
    assert poly_mul(MultiPolynomial.one(3), p) == p


def test_nvars_mismatch_is_structural():
    with pytest.raises(StructuralError):
        poly_mul(T1, MultiPolynomial.one(2))
    with pytest.raises(StructuralError):
        MultiPolynomial({(1, -1): 1}, 2)


@given(polys(), polys(), polys())
def test_multipoly_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(polys(), polys())
def test_multipoly_matches_sympy(a, b):
    syms = sympy.symbols("a b c")
    assert sympy.expand(to_sympy(a * b, syms) - to_sympy(a, syms) * to_sympy(b, syms)) == 0


@given(polys(), polys())
def test_exact_division(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_exact_division_refuses_non_polynomial():
    with pytest.raises(NotDivisible):
        (T1 + 1).exact_div(T2)


def test_substitution_and_evaluation():
    p = XI**2 - T1**2
    assert p.compose([T1, T2, T1], 3).is_zero()
    assert p.evaluate([2, 0, 3]) == 5
    assert p.coefficients_in(2) == {2: MultiPolynomial.one(3), 0: -(T1**2)}


def test_canonical_text_is_deterministic():
    p = (T1 + T2 + XI) ** 2
    assert p.to_str(NAMES) == "t1^2 + 2*t1*t2 + 2*t1*xi + t2^2 + 2*t2*xi + xi^2"


# -- matrices ---------------------------------------------------------------------

def test_n1_conjugation_example():
    (t,) = MultiPolynomial.gens(1)
    g = PolyMatrix([[1, 0], [-t, 1]], 1)
    x = PolyMatrix([[0, 1], [t * t, 0]], 1)
    assert matrix_conjugate(g, x) == PolyMatrix([[t, 1], [0, -t]], 1)


def test_conjugating_identity():
    (t,) = MultiPolynomial.gens(1)
    g = PolyMatrix([[1, t], [0, 1]], 1)
    ident = PolyMatrix.identity(2, 1)
    assert matrix_conjugate(g, ident) == ident
    assert ident.det() == MultiPolynomial.one(1)


def test_conjugation_errors():
    (t,) = MultiPolynomial.gens(1)
    with pytest.raises(SingularMatrix):
        matrix_conjugate(PolyMatrix([[t, t], [t, t]], 1), PolyMatrix.identity(2, 1))
    # conjugating by diag(t, 1) puts 1/t into an entry
    with pytest.raises(NonPolynomialResult):
        matrix_conjugate(PolyMatrix([[t, 0], [0, 1]], 1), PolyMatrix([[0, 0], [1, 0]], 1))


@given(rational_matrices(3))
def test_rational_det_inverse_charpoly_vs_sympy(m):
    ref = sympy.Matrix([[sympy.Rational(a.numerator, a.denominator) for a in r] for r in m.rows])
    assert m.det() == Fraction(str(ref.det()))
    x = sympy.Symbol("x")
    ref_cp = [Fraction(str(c)) for c in ref.charpoly(x).all_coeffs()]
    assert m.charpoly() == ref_cp
    assert m.rank() == ref.rank()
    if m.det():
        assert m * m.inverse() == RationalMatrix.identity(3)


@given(rational_matrices(3), rational_matrices(3))
def test_conjugation_preserves_charpoly(g, x):
    if not g.det():
        return
    assert g.conjugate(x).charpoly() == x.charpoly()


def test_poly_conjugation_preserves_charpoly():
    t1, t2 = MultiPolynomial.gens(2)
    lower = PolyMatrix([[1, 0, 0], [t1, 1, 0], [t2, t1 * t2, 1]], 2)
    upper = PolyMatrix([[1, t2, t1 * t1], [0, 1, t2], [0, 0, 1]], 2)
    g = lower * upper  # unit determinant, so the conjugate stays polynomial
    x = PolyMatrix([[t1, 1, 0], [0, t2, 1], [1, 0, t1 + t2]], 2)
    assert g.det() == MultiPolynomial.one(2)
    assert g.conjugate(x).charpoly() == x.charpoly()
    assert g * g.inverse() == PolyMatrix.identity(3, 2)


def test_kernel_power_examples():
    j2 = RationalMatrix([[0, 1], [0, 0]])
    assert len(kernel_power(j2, 1)) == 1
    assert len(kernel_power(j2, 2)) == 2
    assert len(kernel_power(RationalMatrix.identity(3), 4)) == 0
    with pytest.raises(ValueError):
        kernel_power(j2, 0)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_kernel_increments_nonincreasing(blocks):
    n = sum(blocks)
    rows = [[0] * n for _ in range(n)]
    pos = 0
    for b in blocks:
        for i in range(b - 1):
            rows[pos + i][pos + i + 1] = 1
        pos += b
    x = RationalMatrix(rows)
    dims = [len(kernel_power(x, k)) for k in range(1, n + 2)]
    incs = [dims[0]] + [b - a for a, b in zip(dims, dims[1:])]
    assert all(a >= b for a, b in zip(incs, incs[1:]))
    assert dims[-1] == n


@given(rational_matrices(3))
def test_rank_nullity(m):
    assert m.rank() + len(m.kernel()) == 3
    for v in m.kernel():
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in m.rows)


def test_nullspace_and_rank_helpers():
    assert rank([[1, 2], [2, 4]]) == 1
    assert nullspace([[1, 2], [2, 4]], 2) == [(Fraction(-2), Fraction(1))]
    assert rank([]) == 0


def test_matrix_shape_errors():
    with pytest.raises(StructuralError):
        RationalMatrix([[1, 2]])
    with pytest.raises(StructuralError):
        PolyMatrix([[T1]], 1)
