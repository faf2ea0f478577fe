"""Exact multivariate polynomials over QQ."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]
Scalar = int | Fraction


class StructuralError(ValueError):
    """Operands have incompatible shapes (variable counts, dimensions)."""


class NotDivisible(ArithmeticError):
    """Raised by :meth:`MultiPolynomial.exact_div` when the quotient is not a polynomial."""


def _grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    return (sum(mono), mono)


class MultiPolynomial:
    """Polynomial in ``nvars`` commuting variables with rational coefficients.

    Terms are kept in graded-lexicographic order (largest first) so that
    iteration and serialization are deterministic.  Instances are immutable.
    """

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None, nvars: int) -> None:
        if nvars < 0:
            raise StructuralError("nvars must be nonnegative")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise StructuralError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise StructuralError(f"negative exponent in {mono}")
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = dict(sorted(clean.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True))
        self.nvars = nvars
        self._hash: int | None = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> MultiPolynomial:
        return cls({}, nvars)

    @classmethod
    def constant(cls, c: Scalar, nvars: int) -> MultiPolynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def one(cls, nvars: int) -> MultiPolynomial:
        return cls.constant(1, nvars)

    @classmethod
    def var(cls, index: int, nvars: int) -> MultiPolynomial:
        if not 0 <= index < nvars:
            raise StructuralError(f"variable index {index} out of range for {nvars} variables")
        mono = [0] * nvars
        mono[index] = 1
        return cls({tuple(mono): 1}, nvars)

    @classmethod
    def gens(cls, nvars: int) -> list[MultiPolynomial]:
        return [cls.var(i, nvars) for i in range(nvars)]

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def degree_in(self, index: int) -> int:
        if not self._terms:
            return -1
        return max(m[index] for m in self._terms)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = next(iter(self._terms))
        return mono, self._terms[mono]

    def coefficients_in(self, index: int) -> dict[int, MultiPolynomial]:
        """Split as ``sum_k c_k * x_index^k``; each ``c_k`` is free of ``x_index``."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mono, c in self._terms.items():
            k = mono[index]
            stripped = mono[:index] + (0,) + mono[index + 1 :]
            buckets.setdefault(k, {})[stripped] = c
        return {k: MultiPolynomial(t, self.nvars) for k, t in sorted(buckets.items())}

    def uses_only(self, indices: Iterable[int]) -> bool:
        allowed = set(indices)
        return all(not e or i in allowed for m in self._terms for i, e in enumerate(m))

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> MultiPolynomial:
        if isinstance(other, MultiPolynomial):
            if other.nvars != self.nvars:
                raise StructuralError(
                    f"variable-count mismatch: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, (int, Rational)):
            return MultiPolynomial.constant(Fraction(other), self.nvars)
        return NotImplemented

    def __add__(self, other) -> MultiPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultiPolynomial(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> MultiPolynomial:
        return MultiPolynomial({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other) -> MultiPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MultiPolynomial:
        return (-self) + other

    def __mul__(self, other) -> MultiPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return MultiPolynomial(out, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> MultiPolynomial:
        if isinstance(scalar, MultiPolynomial):
            return self.exact_div(scalar)
        scalar = Fraction(scalar)
        return MultiPolynomial({m: c / scalar for m, c in self._terms.items()}, self.nvars)

    def __pow__(self, k: int) -> MultiPolynomial:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, divisor: MultiPolynomial) -> MultiPolynomial:
        """Return ``self / divisor``; raise :class:`NotDivisible` if it is not a polynomial."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm_d, lc_d = divisor.leading_term()
        quotient: dict[Monomial, Fraction] = {}
        rem = self
        while not rem.is_zero():
            lm_r, lc_r = rem.leading_term()
            diff = tuple(a - b for a, b in zip(lm_r, lm_d))
            if any(e < 0 for e in diff):
                raise NotDivisible("polynomial division leaves a remainder")
            c = lc_r / lc_d
            quotient[diff] = c
            rem = rem - MultiPolynomial({diff: c}, self.nvars) * divisor
        return MultiPolynomial(quotient, self.nvars)

    def divides(self, other: MultiPolynomial) -> bool:
        try:
            other.exact_div(self)
        except NotDivisible:
            return False
        return True

    # -- substitution -------------------------------------------------
    def substitute(self, mapping: Mapping[int, MultiPolynomial | Scalar]) -> MultiPolynomial:
        """Replace variable ``i`` by ``mapping[i]`` (same variable count)."""
        images = []
        for i in range(self.nvars):
            img = mapping.get(i)
            if img is None:
                images.append(MultiPolynomial.var(i, self.nvars))
            else:
                images.append(self._coerce(img))
        return self.compose(images, self.nvars)

    def compose(self, images: Sequence[MultiPolynomial | Scalar], nvars: int) -> MultiPolynomial:
        """Substitute ``x_i -> images[i]``; the images live in a ring with ``nvars`` variables."""
        if len(images) != self.nvars:
            raise StructuralError("need one image per variable")
        imgs = [
            im if isinstance(im, MultiPolynomial) else MultiPolynomial.constant(im, nvars)
            for im in images
        ]
        for im in imgs:
            if im.nvars != nvars:
                raise StructuralError("images must share the target variable count")
        cache: dict[tuple[int, int], MultiPolynomial] = {}

        def power(i: int, e: int) -> MultiPolynomial:
            if (i, e) not in cache:
                cache[(i, e)] = imgs[i] ** e
            return cache[(i, e)]

        total = MultiPolynomial.zero(nvars)
        for mono, c in self._terms.items():
            term = MultiPolynomial.constant(c, nvars)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise StructuralError("point has the wrong number of coordinates")
        total = Fraction(0)
        for mono, c in self._terms.items():
            v = c
            for x, e in zip(point, mono):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    # -- comparison / hashing ----------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self._terms == MultiPolynomial.constant(Fraction(other), self.nvars)._terms
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- text ---------------------------------------------------------
    def to_str(self, names: Sequence[str] | None = None) -> str:
        """Canonical text form, terms in descending grlex order."""
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise StructuralError("need one name per variable")
        if not self._terms:
            return "0"
        out: list[str] = []
        for mono, c in self._terms.items():
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            mag_s = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = mag_s + "*" + "*".join(factors)
            else:
                body = mag_s
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"MultiPolynomial({self.to_str()!r}, nvars={self.nvars})"


def poly_mul(a: MultiPolynomial, b: MultiPolynomial) -> MultiPolynomial:
    """Exact product; raises :class:`StructuralError` on a variable-count mismatch."""
    if a.nvars != b.nvars:
        raise StructuralError(f"variable-count mismatch: {a.nvars} vs {b.nvars}")
    return a * b


def variable_names(n_t: int, extra: Sequence[str] = ()) -> list[str]:
    """The canonical names ``t1..tn`` followed by ``extra`` (``xi``, ``eta``, ...)."""
    return [f"t{i + 1}" for i in range(n_t)] + list(extra)
