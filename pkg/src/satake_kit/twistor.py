"""Torus-equivariant cohomology of P^{2n-1} and HP^{n-1} and the twistor map between them.

Rings are presented as ``Q[t_1..t_m][c]/(relation)`` with ``c`` the class
variable (``xi`` or ``eta``), stored as the last variable of a
:class:`MultiPolynomial`.  Coefficient-ring objects (cup matrices, ``Phi``)
live in ``Q[t_1..t_m]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from satake_kit.algebra.matrix import PolyMatrix, SingularMatrix, block_matrix
from satake_kit.algebra.multipoly import MultiPolynomial, StructuralError, variable_names
from satake_kit.centralizers import interleave_permutation, tau_embed_matrix
from satake_kit.checks import VerificationError

KINDS = ("complex_full", "complex", "quaternionic")


@dataclass(frozen=True)
class EquivariantRing:
    """``H^*_T`` of a projective space as a quotient of a polynomial ring.

    * ``complex_full``: ``Q[t_1..t_2n][xi] / prod_{i<=2n} (xi - t_i)`` (torus ``T_2n``)
    * ``complex``: ``Q[t_1..t_n][xi] / prod_{i<=n} (xi^2 - t_i^2)`` (restricted to ``T_n``)
    * ``quaternionic``: ``Q[t_1..t_n][eta] / prod_{i<=n} (eta - t_i^2)``
    """

    n: int
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def n_t(self) -> int:
        return 2 * self.n if self.kind == "complex_full" else self.n

    @property
    def nvars(self) -> int:
        return self.n_t + 1

    @property
    def class_index(self) -> int:
        return self.n_t

    @property
    def class_name(self) -> str:
        return "eta" if self.kind == "quaternionic" else "xi"

    @property
    def names(self) -> list[str]:
        return variable_names(self.n_t, [self.class_name])

    @property
    def coefficient_names(self) -> list[str]:
        return variable_names(self.n_t)

    def t(self, i: int) -> MultiPolynomial:
        """``t_i`` (1-based); in the restricted ring ``t_{n+s}`` means ``-t_s``."""
        if self.kind == "complex" and i > self.n:
            return -MultiPolynomial.var(i - self.n - 1, self.nvars)
        return MultiPolynomial.var(i - 1, self.nvars)

    def gen(self) -> MultiPolynomial:
        return MultiPolynomial.var(self.class_index, self.nvars)

    def one(self) -> MultiPolynomial:
        return MultiPolynomial.one(self.nvars)

    def relation(self) -> MultiPolynomial:
        c = self.gen()
        rel = self.one()
        if self.kind == "complex_full":
            for i in range(1, 2 * self.n + 1):
                rel = rel * (c - self.t(i))
        elif self.kind == "complex":
            for i in range(1, self.n + 1):
                rel = rel * (c * c - self.t(i) * self.t(i))
        else:
            for i in range(1, self.n + 1):
                rel = rel * (c - self.t(i) * self.t(i))
        return rel

    @property
    def rank(self) -> int:
        """Rank as a free module over the coefficient ring."""
        return self.n if self.kind == "quaternionic" else 2 * self.n

    def reduce(self, x: MultiPolynomial) -> MultiPolynomial:
        """Canonical representative: class-variable degree below :attr:`rank`."""
        self._check(x)
        rel = self.relation()
        d = self.rank
        c = self.gen()
        while x.degree_in(self.class_index) >= d:
            coeffs = x.coefficients_in(self.class_index)
            k = max(coeffs)
            x = x - coeffs[k] * c ** (k - d) * rel
        return x

    def _check(self, x: MultiPolynomial) -> None:
        if x.nvars != self.nvars:
            raise StructuralError(f"element has {x.nvars} variables, ring has {self.nvars}")

    def equal(self, a: MultiPolynomial, b: MultiPolynomial) -> bool:
        return self.reduce(a - b).is_zero()

    def to_coefficient(self, x: MultiPolynomial) -> MultiPolynomial:
        """View a class-variable-free element as an element of ``Q[t]``."""
        if x.degree_in(self.class_index) > 0:
            raise StructuralError("element involves the class variable")
        return x.compose(MultiPolynomial.gens(self.n_t) + [MultiPolynomial.zero(self.n_t)], self.n_t)

    def from_coefficient(self, x: MultiPolynomial) -> MultiPolynomial:
        return x.compose(MultiPolynomial.gens(self.nvars)[: self.n_t], self.nvars)

    def fixed_point_values(self) -> list[MultiPolynomial]:
        """Images of the class variable at the torus-fixed points (in ``Q[t]``)."""
        ts = MultiPolynomial.gens(self.n_t)
        if self.kind == "complex_full":
            return ts
        if self.kind == "complex":
            return ts + [-t for t in ts]
        return [t * t for t in ts]

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "presentation": f"Q[{','.join(self.coefficient_names)}][{self.class_name}]/({self.relation().to_str(self.names)})",
        }


def localization_map(x: MultiPolynomial, ring: EquivariantRing) -> list[MultiPolynomial]:
    """Restriction to the fixed points: one element of ``Q[t]`` per fixed point."""
    ring._check(x)
    gens = MultiPolynomial.gens(ring.n_t)
    return [x.compose(gens + [v], ring.n_t) for v in ring.fixed_point_values()]


def twistor_pullback(x: MultiPolynomial, n: int) -> MultiPolynomial:
    """``f^*``: the quaternionic ring to the restricted complex ring, ``eta -> xi^2``."""
    source = EquivariantRing(n, "quaternionic")
    target = EquivariantRing(n, "complex")
    source._check(x)
    gens = MultiPolynomial.gens(target.nvars)
    xi = target.gen()
    return target.reduce(x.compose(gens[:n] + [xi * xi], target.nvars))


@dataclass(frozen=True)
class ClassBasis:
    """An ordered basis of an equivariant ring over its coefficient ring."""

    ring: EquivariantRing
    label: str
    elements: tuple[MultiPolynomial, ...]
    names: tuple[str, ...]

    def coordinates(self, x: MultiPolynomial) -> list[MultiPolynomial]:
        """Coefficients (in ``Q[t]``) of ``x`` in this basis.

        Each basis element must be monic in the class variable with distinct
        degrees, so the expansion is triangular and exact.
        """
        ring = self.ring
        ci = ring.class_index
        by_degree: dict[int, int] = {}
        for j, b in enumerate(self.elements):
            d = b.degree_in(ci)
            lead = b.coefficients_in(ci)[d]
            if lead != 1 or d in by_degree:
                raise StructuralError(f"basis {self.label} is not monic-triangular in {ring.class_name}")
            by_degree[d] = j
        x = ring.reduce(x)
        coords = [MultiPolynomial.zero(ring.nvars) for _ in self.elements]
        while not x.is_zero():
            d = x.degree_in(ci)
            if d not in by_degree:
                raise StructuralError(f"basis {self.label} does not span the ring")
            j = by_degree[d]
            c = x.coefficients_in(ci)[d]
            coords[j] = coords[j] + c
            x = x - c * self.elements[j]
        return [ring.to_coefficient(c) for c in coords]

    def to_json(self) -> dict:
        names = self.ring.names
        return {
            "label": self.label,
            "elements": [[nm, e.to_str(names)] for nm, e in zip(self.names, self.elements)],
        }


def upsilon_basis(n: int, restricted: bool = True) -> ClassBasis:
    """Fundamental classes ``[P^{i-1}] = prod_{s=i+1}^{2n} (xi - t_s)``, ``i = 1..2n``."""
    ring = EquivariantRing(n, "complex" if restricted else "complex_full")
    xi = ring.gen()
    elems = []
    for i in range(1, 2 * n + 1):
        e = ring.one()
        for s in range(i + 1, 2 * n + 1):
            e = e * (xi - ring.t(s))
        elems.append(e)
    names = tuple(f"[P^{i - 1}]" for i in range(1, 2 * n + 1))
    return ClassBasis(ring, "Upsilon", tuple(elems), names)


def upsilon_h_basis(n: int) -> ClassBasis:
    """``[HP^{i-1}] = prod_{s=i+1}^{n} (eta - t_s^2)``, ``i = 1..n``."""
    ring = EquivariantRing(n, "quaternionic")
    eta = ring.gen()
    elems = []
    for i in range(1, n + 1):
        e = ring.one()
        for s in range(i + 1, n + 1):
            e = e * (eta - ring.t(s) * ring.t(s))
        elems.append(e)
    names = tuple(f"[HP^{i - 1}]" for i in range(1, n + 1))
    return ClassBasis(ring, "UpsilonH", tuple(elems), names)


def _prime_pieces(n: int) -> tuple[EquivariantRing, list[MultiPolynomial], list[MultiPolynomial]]:
    ring = EquivariantRing(n, "complex")
    xi = ring.gen()
    even = []
    for i in range(1, n + 1):
        e = ring.one()
        for s in range(i + 1, n + 1):
            e = e * (xi * xi - ring.t(s) * ring.t(s))
        even.append(e)
    odd = [xi * e for e in even]
    return ring, odd, even


def upsilon_prime_basis(n: int, interleaved: bool = False) -> ClassBasis:
    """The split basis ``{[HP^{i-1}][2]} ∪ {[HP^{i-1}]}`` of the restricted complex ring.

    Default order is all shifted classes first; ``interleaved`` gives
    ``[HP^0][2], [HP^0], [HP^1][2], [HP^1], ...``.
    """
    ring, odd, even = _prime_pieces(n)
    odd_names = [f"[HP^{i - 1}][2]" for i in range(1, n + 1)]
    even_names = [f"[HP^{i - 1}]" for i in range(1, n + 1)]
    if interleaved:
        elems = [x for pair in zip(odd, even) for x in pair]
        names = [x for pair in zip(odd_names, even_names) for x in pair]
        label = "UpsilonPrime(interleaved)"
    else:
        elems = odd + even
        names = odd_names + even_names
        label = "UpsilonPrime"
    return ClassBasis(ring, label, tuple(elems), tuple(names))


def cup_matrix(basis: ClassBasis, multiplier: MultiPolynomial | None = None) -> PolyMatrix:
    """Matrix of ``multiplier * (-)`` (default: the class variable) in ``basis``.

    Column ``j`` holds the coordinates of ``multiplier * basis[j]``.
    """
    ring = basis.ring
    m = ring.gen() if multiplier is None else multiplier
    cols = [basis.coordinates(m * b) for b in basis.elements]
    k = len(cols)
    return PolyMatrix([[cols[j][i] for j in range(k)] for i in range(k)], ring.n_t)


# -- the displayed matrices ------------------------------------------------

def e_T2n(n: int) -> PolyMatrix:
    """Upper bidiagonal, diagonal ``t_1..t_2n``, ones above (over ``Q[t_1..t_2n]``)."""
    m = 2 * n
    ts = MultiPolynomial.gens(m)
    rows = [[ts[i] if i == j else (1 if j == i + 1 else 0) for j in range(m)] for i in range(m)]
    return PolyMatrix(rows, m)


def e_T(n: int) -> PolyMatrix:
    """``e_T2n`` restricted along ``t_{n+s} = -t_s`` (over ``Q[t_1..t_n]``)."""
    ts = MultiPolynomial.gens(n)
    images = ts + [-t for t in ts]
    return e_T2n(n).map_entries(lambda a: a.compose(images, n), n)


def e_T_X(n: int) -> PolyMatrix:
    """Upper bidiagonal, diagonal ``t_1^2..t_n^2``, ones above."""
    ts = MultiPolynomial.gens(n)
    rows = [[ts[i] * ts[i] if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]
    return PolyMatrix(rows, n)


def change_of_basis(source: ClassBasis, target: ClassBasis) -> PolyMatrix:
    """Column ``j`` = coordinates of ``source[j]`` in ``target``."""
    cols = [target.coordinates(x) for x in source.elements]
    k = len(cols)
    return PolyMatrix([[cols[j][i] for j in range(k)] for i in range(k)], source.ring.n_t)


@dataclass(frozen=True)
class PhiConstruction:
    n: int
    phi_prime: PolyMatrix
    perm: PolyMatrix
    phi: PolyMatrix
    e_T: PolyMatrix
    tau_e_T_X: PolyMatrix
    det_phi: MultiPolynomial


def build_phi(n: int) -> PhiConstruction:
    """Build ``Phi = Phi' P`` and check ``e^T = Phi (tau e^T_X) Phi^{-1}`` exactly.

    ``Phi'`` has as columns the coordinates of the interleaved split classes
    ``c_j`` in the fundamental-class basis ``b``; ``P`` reorders ``d`` (split,
    block order) into ``c``.
    """
    b = upsilon_basis(n, restricted=True)
    c = upsilon_prime_basis(n, interleaved=True)
    d = upsilon_prime_basis(n, interleaved=False)
    phi_prime = change_of_basis(c, b)
    perm = change_of_basis(d, c)
    if perm != interleave_permutation(n, n):
        raise VerificationError("reordering matrix is not the interleaving permutation")
    phi = phi_prime * perm
    target = e_T(n)
    source = tau_embed_matrix(e_T_X(n))
    det = phi.det()
    if not det.is_constant() or det.is_zero():
        raise SingularMatrix(f"det Phi = {det} is not a unit")
    conj = phi.conjugate(source)
    if conj != target:
        raise VerificationError("e^T != Phi (tau e^T_X) Phi^{-1}")
    return PhiConstruction(n, phi_prime, perm, phi, target, source, det)


def splitting_holds(n: int) -> bool:
    """``xi^2`` preserves both halves of the split basis and acts on each as ``eta`` on ``UpsilonH``."""
    ring = EquivariantRing(n, "complex")
    xi = ring.gen()
    m = cup_matrix(upsilon_prime_basis(n), xi * xi)
    h = cup_matrix(upsilon_h_basis(n))
    zero = h.zero_like()
    return m == block_matrix([[h, zero], [zero, h]])


def expected_charpoly(n: int) -> list[MultiPolynomial]:
    """Coefficients ``[1, c_1, ..., c_2n]`` of ``prod_i (x^2 - t_i^2)``."""
    ts = MultiPolynomial.gens(n)
    coeffs = [MultiPolynomial.one(n)]
    for t in ts:
        nxt = coeffs + [MultiPolynomial.zero(n), MultiPolynomial.zero(n)]
        for k, c in enumerate(coeffs):
            nxt[k + 2] = nxt[k + 2] - t * t * c
        coeffs = nxt
    return coeffs


def localization_injective(basis: ClassBasis) -> bool:
    """Nonzero determinant of the localization matrix, certified at one rational point.

    A polynomial that is nonzero somewhere is nonzero, so a single
    evaluation at distinct primes is a proof, not a heuristic.
    """
    point = _PRIMES[: basis.ring.n_t]
    return localization_matrix(basis).evaluate(point).det() != 0


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def twistor_report(n: int) -> dict:
    """Everything the ``twistor`` command prints, with verification flags."""
    qring = EquivariantRing(n, "quaternionic")
    cring = EquivariantRing(n, "complex")
    fring = EquivariantRing(n, "complex_full")
    names_t = variable_names(n)
    ups_full = upsilon_basis(n, restricted=False)
    ups = upsilon_basis(n)
    upsh = upsilon_h_basis(n)
    upsp = upsilon_prime_basis(n)
    phi = build_phi(n)
    eta = qring.gen()
    xi = cring.gen()
    checks = {
        "pullback_eta_is_xi_squared": cring.equal(twistor_pullback(eta, n), xi * xi),
        "pullback_relation_vanishes": twistor_pullback(qring.relation(), n).is_zero(),
        "loc_eta": localization_map(eta, qring) == [t * t for t in MultiPolynomial.gens(n)],
        "cup_upsilon_full_is_e_T2n": cup_matrix(ups_full) == e_T2n(n),
        "cup_upsilon_is_e_T": cup_matrix(ups) == e_T(n),
        "cup_upsilon_prime_is_tau_e_T_X": cup_matrix(upsp) == tau_embed_matrix(e_T_X(n)),
        "phi_conjugation": phi.phi.conjugate(phi.tau_e_T_X) == phi.e_T,
        "splitting": splitting_holds(n),
        "charpoly_upsilon": cup_matrix(ups).charpoly() == expected_charpoly(n),
        "charpoly_upsilon_prime": cup_matrix(upsp).charpoly() == expected_charpoly(n),
        "localization_injective": all(localization_injective(b) for b in (ups_full, ups, upsh)),
    }
    return {
        "n": n,
        "rings": [fring.describe(), cring.describe(), qring.describe()],
        "bases": [ups.to_json(), upsh.to_json(), upsp.to_json()],
        "cup_matrices": {
            "Upsilon": cup_matrix(ups).to_json(names_t),
            "UpsilonH": cup_matrix(upsh).to_json(names_t),
            "UpsilonPrime": cup_matrix(upsp).to_json(names_t),
        },
        "phi": {
            "phi_prime": phi.phi_prime.to_json(names_t),
            "P": phi.perm.to_json(names_t),
            "phi": phi.phi.to_json(names_t),
            "det": phi.det_phi.to_str(names_t),
        },
        "pontryagin_sign": "p^T_X = -e^T_X (recorded, not re-derived)",
        "checks": checks,
    }


def localization_matrix(basis: ClassBasis) -> PolyMatrix:
    """Rows: fixed points; columns: basis elements."""
    cols = [localization_map(b, basis.ring) for b in basis.elements]
    k = len(cols)
    return PolyMatrix([[cols[j][i] for j in range(k)] for i in range(k)], basis.ring.n_t)
