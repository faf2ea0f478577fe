"""Explicit irreducible GL_n modules and the Brylinski-Kostant filtration.

``V_lam`` is realised inside ``(Q^n)^{\\otimes d}``: start from the
column-antisymmetrised highest weight vector and close up under the lowering
operators ``E_{i+1,i}``.  Weight spaces are stored in reduced echelon form
over the tensor basis, which makes coordinates a lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from satake_kit.algebra.matrix import RationalMatrix, rank
from satake_kit.algebra.qpoly import QPolynomial
from satake_kit.gln import weyl_dimension
from satake_kit.weights import Coweight, as_coweight, is_dominant

Key = tuple[int, ...]
Vector = dict[Key, Fraction]

DEFAULT_MAX_DIM = 3000


class DimensionOverflow(ValueError):
    """The requested module exceeds the configured dimension bound."""


def _perm_sign(p: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def highest_weight_vector(parts: Sequence[int]) -> Vector:
    """Tensor product over the columns of ``lam`` of ``e_1 ^ ... ^ e_c``."""
    columns = []
    for c in range(parts[0] if parts else 0):
        columns.append(sum(1 for p in parts if p > c))
    vec: Vector = {(): Fraction(1)}
    for c in columns:
        wedge = {p: _perm_sign(p) for p in permutations(range(c))}
        vec = {k + p: v * s for k, v in vec.items() for p, s in wedge.items()}
    return vec


def _apply_elementary(vec: Mapping[Key, Fraction], src: int, dst: int) -> Vector:
    """Apply ``E_{dst,src}`` (sending ``e_src`` to ``e_dst``) on the tensor power."""
    out: Vector = {}
    for key, c in vec.items():
        for pos, a in enumerate(key):
            if a == src:
                k2 = key[:pos] + (dst,) + key[pos + 1 :]
                out[k2] = out.get(k2, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def _add(a: Vector, b: Mapping[Key, Fraction], scale: Fraction = Fraction(1)) -> Vector:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, Fraction(0)) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


@dataclass
class _Echelon:
    """Reduced echelon basis of a subspace of the tensor power."""

    pivots: list[Key] = field(default_factory=list)
    vectors: list[Vector] = field(default_factory=list)

    def reduce(self, v: Vector) -> Vector:
        for p, b in zip(self.pivots, self.vectors):
            c = v.get(p)
            if c:
                v = _add(v, b, -c)
        return v

    def insert(self, v: Vector) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        v = {k: c * inv for k, c in v.items()}
        for i, b in enumerate(self.vectors):
            c = b.get(p)
            if c:
                self.vectors[i] = _add(b, v, -c)
        self.pivots.append(p)
        self.vectors.append(v)
        return True

    def coordinates(self, v: Mapping[Key, Fraction]) -> list[Fraction]:
        coords = [v.get(p, Fraction(0)) for p in self.pivots]
        residual = dict(v)
        for c, b in zip(coords, self.vectors):
            if c:
                residual = _add(residual, b, -c)
        if residual:
            raise ValueError("vector does not lie in the subspace")
        return coords


def _weight(key: Key, n: int) -> Coweight:
    counts = [0] * n
    for a in key:
        counts[a] += 1
    return Coweight(counts)


@dataclass
class WeightedRep:
    """An exact model of an irreducible GL_n module with weight-adapted basis."""

    n: int
    highest_weight: Coweight
    weight_spaces: dict[Coweight, _Echelon]
    twist: int = 0  # the module is this model tensored with det^twist

    @property
    def dimension(self) -> int:
        return sum(len(e.vectors) for e in self.weight_spaces.values())

    def weights(self) -> list[Coweight]:
        return sorted(self.weight_spaces, reverse=True)

    def weight_dimension(self, mu: Coweight | Sequence[int]) -> int:
        mu = as_coweight(mu).shift(-self.twist)
        e = self.weight_spaces.get(mu)
        return len(e.vectors) if e else 0

    def basis(self) -> list[tuple[Coweight, Vector]]:
        return [(mu, v) for mu in self.weights() for v in self.weight_spaces[mu].vectors]

    def raise_op(self, v: Mapping[Key, Fraction], i: int) -> Vector:
        """``E_{i,i+1}`` (0-based ``i``)."""
        return _apply_elementary(v, i + 1, i)

    def lower_op(self, v: Mapping[Key, Fraction], i: int) -> Vector:
        """``E_{i+1,i}`` (0-based ``i``)."""
        return _apply_elementary(v, i, i + 1)

    def principal_nilpotent(self, v: Mapping[Key, Fraction]) -> Vector:
        """``e_n = sum_i E_{i,i+1}``."""
        out: Vector = {}
        for i in range(self.n - 1):
            out = _add(out, self.raise_op(v, i))
        return out

    def operator_matrix(self, op) -> RationalMatrix:
        """Matrix (columns = images of basis vectors) of ``op`` in the weight basis."""
        basis = self.basis()
        offsets: dict[Coweight, int] = {}
        pos = 0
        for mu in self.weights():
            offsets[mu] = pos
            pos += len(self.weight_spaces[mu].vectors)
        dim = pos
        cols = []
        for _, v in basis:
            image = op(v)
            col = [Fraction(0)] * dim
            for mu, part in _split_by_weight(image, self.n).items():
                coords = self.weight_spaces[mu].coordinates(part)
                for j, c in enumerate(coords):
                    col[offsets[mu] + j] = c
            cols.append(col)
        return RationalMatrix(list(zip(*cols))) if dim else RationalMatrix([[0]])

    def e_matrix(self) -> RationalMatrix:
        return self.operator_matrix(self.principal_nilpotent)


def _split_by_weight(v: Mapping[Key, Fraction], n: int) -> dict[Coweight, Vector]:
    out: dict[Coweight, Vector] = {}
    for k, c in v.items():
        out.setdefault(_weight(k, n), {})[k] = c
    return out


def build_irrep(lam: Coweight | Sequence[int], max_dim: int = DEFAULT_MAX_DIM) -> WeightedRep:
    """Construct ``V_lam`` inside a tensor power of the standard module.

    Negative parts are handled by a determinant twist, recorded on the result.
    """
    lam = as_coweight(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    n = len(lam)
    twist = min(0, min(lam.parts)) if n else 0
    base = lam.shift(-twist)
    dim = weyl_dimension(base)
    if dim > max_dim:
        raise DimensionOverflow(f"dim V_{lam} = {dim} exceeds the bound {max_dim}")
    hw = highest_weight_vector(base.parts)
    spaces: dict[Coweight, _Echelon] = {}
    top = _Echelon()
    top.insert(hw)
    spaces[base] = top
    level = [base]
    while level:
        nxt: list[Coweight] = []
        for mu in level:
            for v in list(spaces[mu].vectors):
                for i in range(n - 1):
                    w = _apply_elementary(v, i, i + 1)
                    if not w:
                        continue
                    nu = Coweight([m - (j == i) + (j == i + 1) for j, m in enumerate(mu.parts)])
                    if nu not in spaces:
                        spaces[nu] = _Echelon()
                        nxt.append(nu)
                    spaces[nu].insert(w)
        level = nxt
    rep = WeightedRep(n, base, spaces, twist=twist)
    if rep.dimension != dim:  # pragma: no cover - would indicate a construction bug
        raise AssertionError(f"built dimension {rep.dimension} != Weyl dimension {dim}")
    return rep


@dataclass(frozen=True)
class BKFiltration:
    """``dims[i] = dim F_i V(mu)`` for ``i = 0, 1, ...`` until it stabilises."""

    mu: Coweight
    dims: tuple[int, ...]

    def polynomial(self) -> QPolynomial:
        coeffs = {}
        prev = 0
        for i, d in enumerate(self.dims):
            if d - prev:
                coeffs[i] = d - prev
            prev = d
        return QPolynomial(coeffs)


def bk_filtration(rep: WeightedRep, mu: Coweight | Sequence[int]) -> BKFiltration:
    """Dimensions of ``ker e_n^{i+1} ∩ V(mu)``."""
    mu = as_coweight(mu)
    internal = mu.shift(-rep.twist)
    space = rep.weight_spaces.get(internal)
    if space is None:
        return BKFiltration(mu, ())
    total = len(space.vectors)
    images = [dict(v) for v in space.vectors]
    dims: list[int] = []
    while True:
        images = [rep.principal_nilpotent(v) for v in images]
        keys = sorted({k for v in images for k in v})
        r = rank([[v.get(k, Fraction(0)) for k in keys] for v in images]) if keys else 0
        dims.append(total - r)
        if r == 0:
            break
    return BKFiltration(mu, tuple(dims))


def bk_polynomial(rep: WeightedRep, mu: Coweight | Sequence[int]) -> QPolynomial:
    """``P_mu(V, q) = sum_i dim(F_i V(mu) / F_{i-1} V(mu)) q^i``."""
    return bk_filtration(rep, mu).polynomial()


def bk_polynomial_matrix(rep: WeightedRep, mu: Coweight | Sequence[int]) -> QPolynomial:
    """Same polynomial, computed from powers of the matrix of ``e_n`` on the whole module."""
    mu = as_coweight(mu)
    internal = mu.shift(-rep.twist)
    if internal not in rep.weight_spaces:
        return QPolynomial.zero()
    e = rep.e_matrix()
    cols: list[int] = []
    pos = 0
    for w in rep.weights():
        k = len(rep.weight_spaces[w].vectors)
        if w == internal:
            cols = list(range(pos, pos + k))
        pos += k
    total = len(cols)
    coeffs: dict[int, int] = {}
    prev = 0
    power = e
    i = 0
    while prev < total:
        sub = [[power[r, c] for c in cols] for r in range(power.dim)]
        dim_ker = total - rank(sub)
        if dim_ker - prev:
            coeffs[i] = dim_ker - prev
        prev = dim_ker
        power = power * e
        i += 1
    return QPolynomial(coeffs)
