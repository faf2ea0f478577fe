"""Laurent polynomials in a single variable ``q`` with integer coefficients."""

from __future__ import annotations

from typing import Iterator, Mapping


class QPolynomial:
    """An immutable Laurent polynomial ``sum_k c_k q^k`` with ``c_k`` in ZZ.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their coefficient maps are equal.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        clean: dict[int, int] = {}
        for exp, c in (coeffs or {}).items():
            if c:
                clean[int(exp)] = int(c)
        self._coeffs = dict(sorted(clean.items()))
        self._hash: int | None = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> QPolynomial:
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> QPolynomial:
        return cls({0: c})

    @classmethod
    def zero(cls) -> QPolynomial:
        return cls()

    @classmethod
    def one(cls) -> QPolynomial:
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("degree of the zero polynomial")
        return max(self._coeffs)

    def low_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("low degree of the zero polynomial")
        return min(self._coeffs)

    def __getitem__(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._coeffs.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __add__(self, other: QPolynomial | int) -> QPolynomial:
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: QPolynomial | int) -> QPolynomial:
        return self + (-other)

    def __rsub__(self, other: int) -> QPolynomial:
        return QPolynomial.constant(other) - self

    def __mul__(self, other: QPolynomial | int) -> QPolynomial:
        if isinstance(other, int):
            return QPolynomial({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> QPolynomial:
        """Multiply by ``q^k``."""
        return QPolynomial({e + k: c for e, c in self._coeffs.items()})

    def invert(self) -> QPolynomial:
        """Substitute ``q -> q^{-1}``."""
        return QPolynomial({-e: c for e, c in self._coeffs.items()})

    def scale_exponents(self, k: int) -> QPolynomial:
        """Substitute ``q -> q^k``."""
        return QPolynomial({k * e: c for e, c in self._coeffs.items()})

    def evaluate(self, value):
        total = 0
        for e, c in self._coeffs.items():
            total += c * value**e
        return total

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._coeffs)

    def nonnegative(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> QPolynomial:
        return cls({int(e): c for e, c in data.items()})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in self._coeffs.items():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}" if e > 0 else f"q^({e})"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPolynomial({self._coeffs!r})"


q = QPolynomial.monomial(1)
