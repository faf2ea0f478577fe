"""Decategorified spectral side: shearing, branching along ``psi_X`` and free modules.

``psi_X`` restricts a ``GL_2n`` module to ``GL_n x G_m`` with ``GL_n`` acting
diagonally and ``h in G_m`` acting by ``diag(h, .., h, h^-1, .., h^-1)``.  On
characters this is the substitution ``x_i -> x_i h``, ``x_{n+i} -> x_i h^-1``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from satake_kit.algebra.qpoly import QPolynomial
from satake_kit.centralizers import PreconditionError
from satake_kit.gln import CharacterPoly, character, schur_expand, weyl_dimension
from satake_kit.weights import Coweight, as_coweight, is_dominant

Bidegree = tuple[int, int]


class BigradedSeries:
    """Finitely supported ``(cohomological degree i, weight j) -> dimension``."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[Bidegree, int] | Iterable[tuple[int, int, int]] = ()) -> None:
        items = dims.items() if isinstance(dims, Mapping) else (((i, j), d) for i, j, d in dims)
        out: dict[Bidegree, int] = defaultdict(int)
        for (i, j), d in items:
            d = int(d)
            if d < 0:
                raise ValueError(f"negative dimension {d} at ({i}, {j})")
            out[(int(i), int(j))] += d
        self._dims = {k: v for k, v in sorted(out.items()) if v}

    @property
    def dims(self) -> dict[Bidegree, int]:
        return dict(self._dims)

    def __getitem__(self, key: Bidegree) -> int:
        return self._dims.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigradedSeries):
            return NotImplemented
        return self._dims == other._dims

    def __repr__(self) -> str:
        return f"BigradedSeries({self.to_json()!r})"

    def total(self) -> int:
        return sum(self._dims.values())

    def weights(self) -> set[int]:
        return {j for _, j in self._dims}

    def degree_multiset(self) -> list[int]:
        return sorted(i for (i, _), d in self._dims.items() for _ in range(d))

    def hilbert_numerator(self) -> QPolynomial:
        """Forget the weight: ``sum dim * s^i``."""
        out: dict[int, int] = defaultdict(int)
        for (i, _), d in self._dims.items():
            out[i] += d
        return QPolynomial(out)

    def to_json(self) -> list[list[int]]:
        return [[i, j, d] for (i, j), d in self._dims.items()]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> BigradedSeries:
        for entry in data:
            if len(entry) != 3:
                raise ValueError(f"expected [i, j, dim], got {entry!r}")
        return cls((e[0], e[1], e[2]) for e in data)

    @classmethod
    def loads(cls, text: str) -> BigradedSeries:
        return cls.from_json(json.loads(text))


def shear(series: BigradedSeries, direction: int = 1, allow_odd: bool = False) -> BigradedSeries:
    """``A~^i_j = A^{i+j}_j``: the entry at ``(i, j)`` moves to ``(i - j, j)``.

    ``direction=-1`` is the inverse regrading.  Odd weights are rejected
    unless ``allow_odd`` is set.
    """
    if direction not in (1, -1):
        raise ValueError("direction must be 1 or -1")
    odd = sorted(j for j in series.weights() if j % 2)
    if odd and not allow_odd:
        raise PreconditionError(f"odd weights {odd} cannot be sheared")
    return BigradedSeries({(i - direction * j, j): d for (i, j), d in series.dims.items()})


def adjoint_generators(n: int) -> BigradedSeries:
    """Linear generators of ``Sym(g_2n[-2])``: degree 2, weights from ``psi_X``.

    The ``n x n`` blocks carry weights: dual of the upper-right block ``-2``,
    diagonal blocks ``0``, dual of the lower-left block ``+2``.
    """
    m = n * n
    return BigradedSeries({(2, -2): m, (2, 0): 2 * m, (2, 2): m})


# -- branching ------------------------------------------------------------------

@dataclass(frozen=True)
class BranchingDecomposition:
    Lam: Coweight
    parts: tuple[tuple[Coweight, int, int], ...]  # (lam, j, multiplicity)

    def total_dimension(self) -> int:
        return sum(m * weyl_dimension(lam) for lam, _, m in self.parts)

    def multiplicity(self, lam: Coweight | Sequence[int], j: int) -> int:
        lam = as_coweight(lam)
        return sum(m for mu, k, m in self.parts if mu == lam and k == j)

    def as_dict(self) -> dict[tuple[Coweight, int], int]:
        return {(lam, j): m for lam, j, m in self.parts}

    def diagonal(self) -> dict[Coweight, int]:
        """Forget ``j``: the restriction along the diagonal ``GL_n -> GL_2n``."""
        out: dict[Coweight, int] = defaultdict(int)
        for lam, _, m in self.parts:
            out[lam] += m
        return dict(out)

    def to_json(self) -> dict:
        return {
            "Lam": self.Lam.to_json(),
            "parts": [{"lam": lam.to_json(), "j": j, "mult": m} for lam, j, m in self.parts],
        }


def _check_Lam(Lam: Coweight | Sequence[int]) -> Coweight:
    Lam = as_coweight(Lam)
    if len(Lam) % 2 or not len(Lam):
        raise PreconditionError("Lam must have even positive length 2n")
    if not is_dominant(Lam):
        raise PreconditionError(f"{Lam} is not dominant")
    return Lam


def psi_x_character(Lam: Coweight | Sequence[int]) -> CharacterPoly:
    """``ch V_Lam(x_1 h, .., x_n h, x_1 h^-1, .., x_n h^-1)`` in variables ``x_1..x_n, h``."""
    Lam = _check_Lam(Lam)
    n = len(Lam) // 2
    terms: dict[tuple[int, ...], int] = defaultdict(int)
    for e, c in character(Lam).terms.items():
        x = tuple(e[i] + e[n + i] for i in range(n))
        terms[x + (sum(e[:n]) - sum(e[n:]),)] += c
    return CharacterPoly(terms, n + 1)


def branch_psi_x(Lam: Coweight | Sequence[int]) -> BranchingDecomposition:
    """Decompose ``V_Lam`` along ``psi_X`` into ``sum m_{lam,j} s_lam(x) h^j``."""
    Lam = _check_Lam(Lam)
    n = len(Lam) // 2
    expansion = schur_expand(psi_x_character(Lam), n)
    parts = sorted(((lam, extra[0], m) for (lam, extra), m in expansion.items()), key=lambda t: (t[1], t[0].parts), reverse=True)
    return BranchingDecomposition(Lam, tuple(parts))


def diagonal_branching(Lam: Coweight | Sequence[int]) -> dict[Coweight, int]:
    """Restriction along ``delta``, computed separately via the substitution ``h = 1``."""
    Lam = _check_Lam(Lam)
    n = len(Lam) // 2
    terms: dict[tuple[int, ...], int] = defaultdict(int)
    for e, c in character(Lam).terms.items():
        terms[tuple(e[i] + e[n + i] for i in range(n))] += c
    return {lam: m for (lam, _), m in schur_expand(CharacterPoly(terms, n), n).items()}


# -- the functor on free modules --------------------------------------------------

@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(s) / prod_d (1 - s^d)`` over the generator degrees ``d``."""

    numerator: QPolynomial
    generator_degrees: tuple[int, ...]

    def coefficients(self, max_degree: int) -> dict[int, int]:
        """Power-series coefficients up to ``max_degree`` (generator degrees must be positive)."""
        if any(d <= 0 for d in self.generator_degrees):
            raise ValueError("expansion needs positive generator degrees")
        lo = self.numerator.low_degree() if not self.numerator.is_zero() else 0
        series = {k: v for k, v in self.numerator if k <= max_degree}
        for d in self.generator_degrees:
            acc = dict(series)
            for k in range(lo, max_degree + 1):
                prev = acc.get(k - d, 0)
                if prev:
                    acc[k] = acc.get(k, 0) + prev
            series = {k: v for k, v in acc.items() if v}
        return dict(sorted(series.items()))


@dataclass(frozen=True)
class FreeModuleImage:
    Lam: Coweight
    summands: tuple[tuple[Coweight, int, int], ...]  # (lam, shift j, multiplicity)
    via_branching: HilbertSeries
    via_shear: HilbertSeries

    @property
    def hilbert_identity(self) -> bool:
        return self.via_branching == self.via_shear

    def to_json(self) -> dict:
        return {
            "Lam": self.Lam.to_json(),
            "summands": [{"lam": lam.to_json(), "shift": j, "mult": m} for lam, j, m in self.summands],
            "generator_degrees": list(self.via_branching.generator_degrees),
            "hilbert_numerator": str(self.via_branching.numerator),
            "hilbert_identity": self.hilbert_identity,
        }


def target_generator_degrees(n: int) -> tuple[int, ...]:
    """``Sym(g_n[-4])``: ``n^2`` generators, all in degree 4."""
    return (4,) * (n * n)


def weight_series(Lam: Coweight | Sequence[int]) -> BigradedSeries:
    """``V_Lam`` in cohomological degree 0, graded by the ``h``-weight (from weight multiplicities)."""
    ch = psi_x_character(Lam)
    dims: dict[Bidegree, int] = defaultdict(int)
    for e, c in ch.terms.items():
        dims[(0, e[-1])] += c
    return BigradedSeries(dims)


def phi_on_free_module(Lam: Coweight | Sequence[int]) -> FreeModuleImage:
    """Image of ``Sym(g_2n[-2]) (x) V_Lam`` as ``sum Sym(g_n[-4]) (x) V_lam[-j]``.

    The summands come from :func:`branch_psi_x`.  Independently, the weight
    series of ``V_Lam`` is sheared and base-changed to ``Sym(g_n[-4])``; the
    two one-variable Hilbert series must coincide.
    """
    Lam = _check_Lam(Lam)
    n = len(Lam) // 2
    gens = target_generator_degrees(n)
    decomposition = branch_psi_x(Lam)
    numerator = QPolynomial.zero()
    for lam, j, m in decomposition.parts:
        numerator = numerator + QPolynomial.monomial(j, m * weyl_dimension(lam))
    via_branching = HilbertSeries(numerator, gens)
    # base change of a free module: Sym(g_n[-4]) (x) (sheared generators of the module)
    sheared = shear(weight_series(Lam), allow_odd=True)
    via_shear = HilbertSeries(sheared.hilbert_numerator(), gens)
    return FreeModuleImage(Lam, decomposition.parts, via_branching, via_shear)
