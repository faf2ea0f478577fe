"""Square matrices over QQ and over QQ[x_1..x_m] with exact linear algebra."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from satake_kit.algebra.multipoly import MultiPolynomial, NotDivisible, StructuralError


class SingularMatrix(ArithmeticError):
    """The matrix has zero determinant (over the fraction field)."""


class NonPolynomialResult(ArithmeticError):
    """A fraction-field computation did not clear to polynomial entries."""


class _SquareMatrix:
    """Shared structure for the two concrete matrix classes.

    Subclasses supply ``_zero``/``_one`` and ``_div`` (exact division in the
    entry ring); everything else is ring-generic.
    """

    __slots__ = ("_rows", "dim")

    def __init__(self, rows: Iterable[Iterable]) -> None:
        rows = tuple(tuple(self._convert(x) for x in r) for r in rows)
        if not rows:
            raise StructuralError("matrices must be at least 1x1")
        if any(len(r) != len(rows) for r in rows):
            raise StructuralError("matrix must be square")
        self._rows = rows
        self.dim = len(rows)

    # hooks
    def _convert(self, x):
        return x

    def _zero(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def _div(self, a, b):
        raise NotImplementedError

    def _new(self, rows):
        return type(self)._from_rows(self, rows)

    @classmethod
    def _from_rows(cls, like, rows):
        return cls(rows)

    # access
    @property
    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self._rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def transpose(self):
        return self._new(zip(*self._rows))

    # ring operations
    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise StructuralError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.dim != self.dim:
            raise StructuralError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return self._new(
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)
        )

    def __sub__(self, other):
        self._check(other)
        return self._new(
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)
        )

    def __neg__(self):
        return self._new([-a for a in r] for r in self._rows)

    def __mul__(self, other):
        if not isinstance(other, _SquareMatrix):
            return self._new([a * other for a in r] for r in self._rows)
        self._check(other)
        n = self.dim
        cols = [other.column(j) for j in range(n)]
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = self._zero()
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return self._new(out)

    def __rmul__(self, scalar):
        return self._new([scalar * a for a in r] for r in self._rows)

    def __pow__(self, k: int):
        result = self.identity_like()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def identity_like(self):
        n = self.dim
        z, o = self._zero(), self._one()
        return self._new([o if i == j else z for j in range(n)] for i in range(n))

    def zero_like(self):
        z = self._zero()
        return self._new([z] * self.dim for _ in range(self.dim))

    def is_zero(self) -> bool:
        return all(not a for r in self._rows for a in r)

    def trace(self):
        acc = self._zero()
        for i in range(self.dim):
            acc = acc + self._rows[i][i]
        return acc

    def commutes_with(self, other) -> bool:
        return self * other == other * self

    # exact elimination
    def _bareiss_gauss_jordan(self, augment: bool):
        """Fraction-free Gauss-Jordan on ``[self | I]``.

        Returns ``(d, sign, right)``: ``d`` is the final common pivot, so that
        ``det = sign * d`` and ``right = d * self^{-1}`` (``None`` unless
        ``augment``).  ``d`` is zero for singular input.
        """
        n = self.dim
        z, o = self._zero(), self._one()
        width = 2 * n if augment else n
        m = [
            list(r) + ([o if i == j else z for j in range(n)] if augment else [])
            for i, r in enumerate(self._rows)
        ]
        prev = o
        sign = 1
        for k in range(n):
            piv = next((i for i in range(k, n) if m[i][k]), None)
            if piv is None:
                return z, sign, None
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            pk = m[k][k]
            row_k = m[k]
            for i in range(n):
                if i == k:
                    continue
                f = m[i][k]
                row_i = m[i]
                m[i] = [self._div(pk * row_i[j] - f * row_k[j], prev) for j in range(width)]
            prev = pk
        right = self._new([row[n:] for row in m]) if augment else None
        return prev, sign, right

    def det(self):
        d, sign, _ = self._bareiss_gauss_jordan(augment=False)
        return d if sign == 1 else -d

    def scaled_inverse(self):
        """Return ``(d, A)`` with ``A = d * self^{-1}``; ``d`` is the determinant up to sign."""
        d, _, right = self._bareiss_gauss_jordan(augment=True)
        if not d:
            raise SingularMatrix("matrix is singular")
        return d, right

    def inverse(self):
        d, adj = self.scaled_inverse()
        try:
            return self._new([self._div(a, d) for a in r] for r in adj.rows)
        except NotDivisible as exc:
            raise NonPolynomialResult("inverse has non-polynomial entries") from exc

    def conjugate(self, x):
        """Return ``self * x * self^{-1}``, cleared to the entry ring."""
        self._check(x)
        d, adj = self.scaled_inverse()
        prod = self * x * adj
        try:
            return self._new([self._div(a, d) for a in r] for r in prod.rows)
        except NotDivisible as exc:
            raise NonPolynomialResult("conjugate is not polynomial") from exc

    def charpoly(self) -> list:
        """Coefficients ``[1, c_1, ..., c_n]`` of ``det(x I - self)`` (Faddeev-LeVerrier)."""
        n = self.dim
        coeffs = [self._one()]
        ident = self.identity_like()
        mk = self.zero_like()
        for k in range(1, n + 1):
            mk = self * mk + ident * coeffs[-1]
            ck = (self * mk).trace()
            coeffs.append(-ck / k)
        return coeffs

    def to_str_rows(self, fmt: Callable = str) -> list[list[str]]:
        return [[fmt(a) for a in r] for r in self._rows]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_str_rows()!r})"


class RationalMatrix(_SquareMatrix):
    """Square matrix with exact rational entries."""

    __slots__ = ()

    def _convert(self, x):
        return Fraction(x)

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _div(self, a, b):
        return a / b

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> RationalMatrix:
        return cls([[0] * n for _ in range(n)])

    def rank(self) -> int:
        return rank(self._rows)

    def kernel(self) -> list[tuple[Fraction, ...]]:
        return nullspace(self._rows, self.dim)

    def to_json(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self._rows]


class PolyMatrix(_SquareMatrix):
    """Square matrix whose entries are :class:`MultiPolynomial` in a common ring."""

    __slots__ = ("nvars",)

    def __init__(self, rows: Iterable[Iterable], nvars: int | None = None) -> None:
        rows = [list(r) for r in rows]
        if nvars is None:
            found = {a.nvars for r in rows for a in r if isinstance(a, MultiPolynomial)}
            if len(found) != 1:
                raise StructuralError("cannot infer a unique variable count for PolyMatrix")
            nvars = found.pop()
        self.nvars = nvars
        super().__init__(rows)

    @classmethod
    def _from_rows(cls, like, rows):
        return cls(rows, like.nvars)

    def _convert(self, x):
        if isinstance(x, MultiPolynomial):
            if x.nvars != self.nvars:
                raise StructuralError("all entries must share nvars")
            return x
        return MultiPolynomial.constant(x, self.nvars)

    def _zero(self):
        return MultiPolynomial.zero(self.nvars)

    def _one(self):
        return MultiPolynomial.one(self.nvars)

    def _div(self, a, b):
        return a.exact_div(b)

    def _check(self, other) -> None:
        super()._check(other)
        if other.nvars != self.nvars:
            raise StructuralError("variable-count mismatch between matrices")

    @classmethod
    def identity(cls, n: int, nvars: int) -> PolyMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], nvars)

    @classmethod
    def zeros(cls, n: int, nvars: int) -> PolyMatrix:
        return cls([[0] * n for _ in range(n)], nvars)

    def evaluate(self, point: Sequence) -> RationalMatrix:
        return RationalMatrix([[a.evaluate(point) for a in r] for r in self._rows])

    def map_entries(self, fn: Callable[[MultiPolynomial], MultiPolynomial], nvars: int | None = None) -> PolyMatrix:
        return PolyMatrix([[fn(a) for a in r] for r in self._rows], self.nvars if nvars is None else nvars)

    def to_json(self, names: Sequence[str]) -> list[list[str]]:
        return [[a.to_str(names) for a in r] for r in self._rows]


def matrix_conjugate(g: PolyMatrix, x: PolyMatrix) -> PolyMatrix:
    """``g x g^{-1}`` over the fraction field, cleared to polynomial entries."""
    return g.conjugate(x)


def block_matrix(blocks: Sequence[Sequence[_SquareMatrix]]):
    """Assemble a square block matrix from a square grid of equal-size square blocks."""
    first = blocks[0][0]
    rows = []
    for block_row in blocks:
        for i in range(first.dim):
            row = []
            for b in block_row:
                row.extend(b.rows[i])
            rows.append(row)
    return first._new(rows)


# -- row reduction over QQ -------------------------------------------------

def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over QQ; returns the nonzero rows and pivot columns."""
    m = [[Fraction(a) for a in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of ``{v : A v = 0}`` for the matrix with the given rows."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def kernel_power(x: RationalMatrix, k: int) -> list[tuple[Fraction, ...]]:
    """Exact basis of ``ker(x^k)``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return (x**k).kernel()
