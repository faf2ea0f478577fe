"""Kostant sections, regular centralizers, the interleaving map and the Shalika slice.

Matrix helpers here accept either a :class:`RationalMatrix` (sample points)
or a :class:`PolyMatrix` (symbolic checks); the block constructions are
ring-generic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from satake_kit.algebra.matrix import (
    PolyMatrix,
    RationalMatrix,
    SingularMatrix,
    block_matrix,
    nullspace,
    rank,
    rref,
)
from satake_kit.algebra.multipoly import MultiPolynomial
from satake_kit.checks import Check, VerificationError

Matrix = Union[RationalMatrix, PolyMatrix]
Entry = Union[Fraction, int, MultiPolynomial]


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


def _like(rows: Sequence[Sequence[Entry]], nvars: int | None) -> Matrix:
    return RationalMatrix(rows) if nvars is None else PolyMatrix(rows, nvars)


def _nvars_of(entries: Sequence[Entry]) -> int | None:
    for e in entries:
        if isinstance(e, MultiPolynomial):
            return e.nvars
    return None


# -- characteristic polynomials and sections --------------------------------

def chevalley(x: Matrix) -> list:
    """``(c_1..c_s)`` with ``det(t - x) = t^s + c_1 t^{s-1} + ... + c_s``."""
    return x.charpoly()[1:]


def interleave(c: Sequence[Entry]) -> list:
    """``tau(c) = (0, c_1, 0, c_2, ..., 0, c_n)``: the point with ``p(x^2)`` as polynomial."""
    out: list = []
    for ci in c:
        out.extend([ci * 0, ci])
    return out


def kostant_section(c: Sequence[Entry], nvars: int | None = None) -> Matrix:
    """Companion matrix: ones above the diagonal, last row ``(-c_s, ..., -c_1)``."""
    s = len(c)
    if s == 0:
        raise PreconditionError("need at least one coefficient")
    if nvars is None:
        nvars = _nvars_of(c)
    rows: list[list[Entry]] = [[1 if j == i + 1 else 0 for j in range(s)] for i in range(s - 1)]
    rows.append([-c[s - 1 - j] for j in range(s)])
    return _like(rows, nvars)


def tau_embed_matrix(c: Matrix) -> Matrix:
    """``C -> [[0, I], [C, 0]]``."""
    return block_matrix([[c.zero_like(), c.identity_like()], [c, c.zero_like()]])


def interleave_permutation(n: int, nvars: int | None = None) -> Matrix:
    """``P`` sending the ordered basis ``(e_1, e_3, .., e_{2n-1}, e_2, .., e_{2n})`` to ``(e_1, .., e_{2n})``.

    As a matrix: ``P e_k = e_{2k-1}`` and ``P e_{n+k} = e_{2k}``.
    """
    m = 2 * n
    rows = [[0] * m for _ in range(m)]
    for k in range(n):
        rows[2 * k][k] = 1
        rows[2 * k + 1][n + k] = 1
    return _like(rows, nvars)


def companion_conjugation_check(c: Sequence[Entry], nvars: int | None = None) -> Matrix:
    """Verify ``kappa_2n(tau(c)) = P [[0, I], [kappa_n(c), 0]] P^{-1}`` and return ``P``.

    Raises :class:`VerificationError` if the identity fails.
    """
    if nvars is None:
        nvars = _nvars_of(c)
    n = len(c)
    p = interleave_permutation(n, nvars)
    lhs = kostant_section(interleave(c), nvars)
    rhs = p.conjugate(tau_embed_matrix(kostant_section(c, nvars)))
    if lhs != rhs:
        raise VerificationError(f"companion conjugation identity fails at c = {list(c)}")
    return p


# -- commutants and regularity ----------------------------------------------

def commutant_basis(x: RationalMatrix) -> list[RationalMatrix]:
    """A basis of ``{y : xy = yx}`` from an exact linear solve."""
    s = x.dim
    rows = []
    for i in range(s):
        for j in range(s):
            row = [Fraction(0)] * (s * s)
            for k in range(s):
                row[k * s + j] += x[i, k]
                row[i * s + k] -= x[k, j]
            rows.append(row)
    return [RationalMatrix([v[a * s : (a + 1) * s] for a in range(s)]) for v in nullspace(rows, s * s)]


def is_regular(x: RationalMatrix) -> bool:
    """Commutant dimension equals the matrix size."""
    return len(commutant_basis(x)) == x.dim


def centralizer_basis(x: RationalMatrix) -> list[RationalMatrix]:
    """``I, x, ..., x^{s-1}`` for regular ``x``; otherwise a basis of the full commutant."""
    if not is_regular(x):
        return commutant_basis(x)
    powers = [x.identity_like()]
    for _ in range(x.dim - 1):
        powers.append(powers[-1] * x)
    flat = [[a for r in m.rows for a in r] for m in powers]
    if rank(flat) != x.dim:  # pragma: no cover - regular implies cyclic
        raise VerificationError("powers of a regular matrix are dependent")
    return powers


def centralizer_embedding(g: Matrix, c: Matrix) -> Matrix:
    """``g -> diag(g, g)``, landing in the centralizer of ``tau(C)``."""
    if not g.commutes_with(c):
        raise PreconditionError("g does not commute with C")
    if not g.det():
        raise SingularMatrix("g is not invertible")
    zero = g.zero_like()
    return block_matrix([[g, zero], [zero, g]])


# -- Shalika slice ------------------------------------------------------------

def shalika_conjugate(a: Matrix, c: Matrix, x: Matrix) -> Matrix:
    """``[[I, 0], [X, I]] [[A, I], [C, -A]] [[I, 0], [-X, I]]``."""
    ident, zero = a.identity_like(), a.zero_like()
    left = block_matrix([[ident, zero], [x, ident]])
    mid = block_matrix([[a, ident], [c, -a]])
    right = block_matrix([[ident, zero], [-x, ident]])
    return left * mid * right


def shalika_closed_form(a: Matrix, c: Matrix, x: Matrix) -> Matrix:
    """``[[A - X, I], [C + XA + AX - X^2, X - A]]``."""
    return block_matrix([[a - x, a.identity_like()], [c + x * a + a * x - x * x, x - a]])


@dataclass(frozen=True)
class ShalikaForm:
    normal: Matrix
    conjugated: Matrix
    verified: bool


def shalika_normal_form(a: Matrix, c: Matrix) -> ShalikaForm:
    """The representative ``C + A^2`` reached by the gauge ``X = A``."""
    normal = c + a * a
    conjugated = shalika_conjugate(a, c, a)
    target = tau_embed_matrix(normal)
    return ShalikaForm(normal, conjugated, conjugated == target)


@dataclass(frozen=True)
class GaugeSolutions:
    """Affine solution set ``particular + span(directions)`` of the vanishing-diagonal condition."""

    particular: RationalMatrix | None
    nullity: int


def shalika_gauge_solutions(a: RationalMatrix, c: RationalMatrix) -> GaugeSolutions:
    """Solve for all ``X`` making both diagonal blocks of the conjugate vanish.

    ``X`` is symbolic; the diagonal-block entries are affine in its entries
    and are solved exactly.
    """
    n = a.dim
    m = n * n
    xs = PolyMatrix([[MultiPolynomial.var(i * n + j, m) for j in range(n)] for i in range(n)], m)
    lift = lambda r: PolyMatrix(r.rows, m)  # noqa: E731
    conj = shalika_conjugate(lift(a), lift(c), xs)
    equations = []
    for blk in (0, n):
        for i in range(n):
            for j in range(n):
                p = conj[blk + i, blk + j]
                if p.total_degree() > 1:
                    raise VerificationError("diagonal blocks are not affine in X")
                coeffs = [Fraction(0)] * (m + 1)
                for mono, v in p.terms.items():
                    if sum(mono) == 0:
                        coeffs[m] = -v
                    else:
                        coeffs[mono.index(1)] = v
                equations.append(coeffs)
    red, pivots = rref(equations, m + 1)
    if m in pivots:
        return GaugeSolutions(None, 0)
    sol = [Fraction(0)] * m
    for row, p in zip(red, pivots):
        sol[p] = row[m]
    return GaugeSolutions(RationalMatrix([sol[i * n : (i + 1) * n] for i in range(n)]), m - len(pivots))


def moment_map_image(x: Matrix, c: Matrix) -> Matrix:
    """``x tau(C) x^{-1}``; a singular ``x`` raises :class:`SingularMatrix`."""
    return x.conjugate(tau_embed_matrix(c))


# -- sampling -------------------------------------------------------------------

def random_rational(rng: random.Random, bound: int = 5, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_matrix(rng: random.Random, n: int) -> RationalMatrix:
    return RationalMatrix([[random_rational(rng) for _ in range(n)] for _ in range(n)])


def random_invertible(rng: random.Random, n: int) -> RationalMatrix:
    while True:
        g = random_matrix(rng, n)
        if g.det():
            return g


def random_point(rng: random.Random, s: int) -> list[Fraction]:
    return [random_rational(rng) for _ in range(s)]


def random_test_matrix(rng: random.Random, n: int) -> RationalMatrix:
    """A mix of generic, scalar, derogatory and non-semisimple regular matrices."""
    kind = rng.randrange(4)
    if kind == 0 or n == 1:
        return random_matrix(rng, n)
    if kind == 1:
        return RationalMatrix.identity(n) * random_rational(rng)
    g = random_invertible(rng, n)
    if kind == 2:
        # repeated eigenvalue in two Jordan blocks: derogatory
        a = random_rational(rng)
        diag = [a, a] + random_point(rng, n - 2)
    else:
        # one Jordan block: regular, not semisimple
        a = random_rational(rng)
        return g.conjugate(upper_bidiagonal([a] * n))
    d = RationalMatrix([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])
    return g.conjugate(d)


def upper_bidiagonal(diag: Sequence[Entry], nvars: int | None = None) -> Matrix:
    """Diagonal ``diag``, ones directly above it."""
    s = len(diag)
    rows = [[diag[i] if i == j else (1 if j == i + 1 else 0) for j in range(s)] for i in range(s)]
    return _like(rows, nvars)


def symbolic_matrix(n: int, nvars: int, offset: int = 0) -> PolyMatrix:
    """Generic ``n x n`` matrix whose entries are the variables ``offset .. offset + n^2 - 1``."""
    return PolyMatrix([[MultiPolynomial.var(offset + i * n + j, nvars) for j in range(n)] for i in range(n)], nvars)


# -- check suites -----------------------------------------------------------------

SYMBOLIC_LIMIT = 2


def check_companion(n: int, seed: int, samples: int = 50) -> list[Check]:
    """Kostant-section identities; symbolic in ``c`` for small ``n``, sampled beyond."""
    rng = random.Random(seed)
    checks = []
    if n <= SYMBOLIC_LIMIT:
        c = MultiPolynomial.gens(n)
        companion_conjugation_check(c)
        checks.append(Check(f"companion_conjugation_symbolic_n{n}", True))
    else:
        for _ in range(samples):
            companion_conjugation_check(random_point(rng, n))
        checks.append(Check(f"companion_conjugation_sampled_n{n}", True, f"{samples} points"))
    ok = all(chevalley(kostant_section(c)) == c for c in (random_point(rng, s) for s in range(1, 7) for _ in range(17)))
    checks.append(Check("kostant_section_charpoly", ok))
    ok = all(is_regular(kostant_section(random_point(rng, n))) for _ in range(10))
    checks.append(Check(f"companion_regular_n{n}", ok))
    return checks


def check_tau(n: int, seed: int, samples: int = 100) -> list[Check]:
    """Regularity transfer along ``tau`` and the interleaved characteristic polynomial."""
    rng = random.Random(seed)
    checks = []
    agree = 0
    for _ in range(samples):
        c = random_test_matrix(rng, n)
        agree += is_regular(c) == is_regular(tau_embed_matrix(c))
    checks.append(Check(f"tau_regularity_n{n}", agree == samples, f"{agree}/{samples}"))
    if n <= 3:
        c = symbolic_matrix(n, n * n)
        ok = chevalley(tau_embed_matrix(c)) == interleave(chevalley(c))
        checks.append(Check(f"interleaved_charpoly_symbolic_n{n}", ok))
    ok = all(
        chevalley(tau_embed_matrix(m)) == interleave(chevalley(m))
        for m in (random_matrix(rng, n) for _ in range(10))
    )
    checks.append(Check(f"interleaved_charpoly_sampled_n{n}", ok))
    ts = _distinct_squares(rng, n)
    e = upper_bidiagonal([t * t for t in ts])
    expected = [Fraction(1)]
    for t in ts:
        expected = [a - t * t * b for a, b in zip(expected + [Fraction(0)], [Fraction(0)] + expected)]
    checks.append(Check(f"e_T_X_regular_n{n}", is_regular(e) and e.charpoly() == expected))
    return checks


def _distinct_squares(rng: random.Random, n: int) -> list[Fraction]:
    while True:
        ts = random_point(rng, n)
        if len({t * t for t in ts}) == n and all(ts):
            return ts


def check_embedding(n: int, seed: int, samples: int = 20) -> list[Check]:
    """``g -> diag(g, g)`` lands in the centralizer of ``tau(C)`` and is multiplicative."""
    rng = random.Random(seed)
    lands = mult = base = True
    for _ in range(samples):
        c = random_matrix(rng, n)
        g1, g2 = _random_centralizer_element(rng, c), _random_centralizer_element(rng, c)
        tc = tau_embed_matrix(c)
        d1, d2 = centralizer_embedding(g1, c), centralizer_embedding(g2, c)
        lands &= d1.commutes_with(tc) and d2.commutes_with(tc)
        mult &= centralizer_embedding(g1 * g2, c) == d1 * d2
        base &= chevalley(tc) == interleave(chevalley(c))
    ident = RationalMatrix.identity(n)
    unit = centralizer_embedding(ident, random_matrix(rng, n)) == RationalMatrix.identity(2 * n)
    return [
        Check(f"embedding_lands_in_centralizer_n{n}", lands),
        Check(f"embedding_multiplicative_n{n}", mult),
        Check(f"embedding_over_tau_n{n}", base),
        Check(f"embedding_unit_n{n}", unit),
    ]


def _random_centralizer_element(rng: random.Random, c: RationalMatrix) -> RationalMatrix:
    """``p(C)`` for a random polynomial ``p`` of degree below ``n``, resampled until invertible."""
    n = c.dim
    while True:
        coeffs = random_point(rng, n)
        g = c.zero_like()
        for a in coeffs:
            g = g * c + c.identity_like() * a
        if g.det():
            return g


def check_shalika(n: int, seed: int, samples: int = 100) -> list[Check]:
    """The conjugation identity, the normal form ``C + A^2`` and its uniqueness."""
    rng = random.Random(seed)
    checks = []
    if n <= SYMBOLIC_LIMIT:
        m = 3 * n * n
        a, c, x = (symbolic_matrix(n, m, k * n * n) for k in range(3))
        ok = shalika_conjugate(a, c, x) == shalika_closed_form(a, c, x)
        checks.append(Check(f"shalika_identity_symbolic_n{n}", ok))
    normal = unique = True
    for _ in range(samples):
        a, c = random_matrix(rng, n), random_matrix(rng, n)
        form = shalika_normal_form(a, c)
        normal &= form.verified and form.normal == c + a * a
        sol = shalika_gauge_solutions(a, c)
        unique &= sol.particular == a and sol.nullity == 0
    checks.append(Check(f"shalika_normal_form_n{n}", normal, f"{samples} samples"))
    checks.append(Check(f"shalika_unique_n{n}", unique, f"{samples} samples"))
    c = random_matrix(rng, n)
    checks.append(Check(f"shalika_trivial_n{n}", shalika_normal_form(c.zero_like(), c).normal == c))
    x = random_invertible(rng, n * 2)
    checks.append(
        Check(f"moment_map_charpoly_n{n}", chevalley(moment_map_image(x, c)) == interleave(chevalley(c)))
    )
    return checks


CHECKS = {
    "companion": check_companion,
    "tau": check_tau,
    "shalika": check_shalika,
    "embedding": check_embedding,
}
