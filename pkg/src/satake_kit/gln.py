"""Weight multiplicities, dimensions and characters of irreducible GL_n modules.

Everything here goes through Gelfand-Tsetlin patterns, which makes this
module the independent oracle the tableau and linear-algebra code is
checked against.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import prod
from typing import Iterator, Mapping, Sequence

from satake_kit.algebra.multipoly import MultiPolynomial, StructuralError
from satake_kit.weights import Coweight, as_coweight, is_dominant

Exponent = tuple[int, ...]


def gt_patterns(top: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every Gelfand-Tsetlin pattern with the given top row.

    Rows are listed top (length n) to bottom (length 1).
    """
    top = tuple(top)

    def rec(rows: list[tuple[int, ...]]):
        last = rows[-1]
        if len(last) == 1:
            yield tuple(rows)
            return
        yield from (
            r for nxt in _interlacing(last) for r in rec(rows + [nxt])
        )

    if not top:
        return
    yield from rec([top])


def _interlacing(row: tuple[int, ...], target_sum: int | None = None) -> Iterator[tuple[int, ...]]:
    """Rows ``nu`` of length ``len(row) - 1`` with ``row[i] >= nu[i] >= row[i+1]``."""
    m = len(row) - 1
    # suffix bounds for pruning on the row sum
    lo_suffix = [0] * (m + 1)
    hi_suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        lo_suffix[i] = lo_suffix[i + 1] + row[i + 1]
        hi_suffix[i] = hi_suffix[i + 1] + row[i]

    def rec(i: int, acc: list[int], s: int):
        if i == m:
            if target_sum is None or s == target_sum:
                yield tuple(acc)
            return
        for v in range(row[i + 1], row[i] + 1):
            if target_sum is not None:
                rest = target_sum - s - v
                if rest < lo_suffix[i + 1] or rest > hi_suffix[i + 1]:
                    continue
            acc.append(v)
            yield from rec(i + 1, acc, s + v)
            acc.pop()

    yield from rec(0, [], 0)


def pattern_weight(pattern: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Weight ``(mu_1..mu_n)`` with ``mu_k = |row of length k| - |row of length k-1|``."""
    sums = [sum(r) for r in reversed(pattern)]  # lengths 1..n
    return tuple(sums[0:1]) + tuple(sums[k] - sums[k - 1] for k in range(1, len(sums)))


def weight_multiplicity(lam: Coweight | Sequence[int], mu: Coweight | Sequence[int]) -> int:
    """``dim V_lam(mu)``: the number of GT patterns with top row ``lam`` and weight ``mu``."""
    lam, mu = as_coweight(lam), as_coweight(mu)
    if len(lam) != len(mu):
        raise StructuralError("lam and mu must have the same length")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if lam.size != mu.size:
        return 0
    n = len(lam)
    # row of length k must sum to mu_1 + ... + mu_k
    partial = [sum(mu.parts[:k]) for k in range(n + 1)]

    def count(row: tuple[int, ...]) -> int:
        k = len(row)
        if k == 1:
            return 1
        return sum(count(nxt) for nxt in _interlacing(row, partial[k - 1]))

    return count(lam.parts)


def weyl_dimension(lam: Coweight | Sequence[int]) -> int:
    lam = as_coweight(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    n = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


class CharacterPoly:
    """A Laurent polynomial with integer coefficients in ``nvars`` variables.

    Used for characters ``x_1..x_n`` (optionally with a trailing ``h``).  Keys
    are exponent tuples that may contain negative entries.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Exponent, int], nvars: int) -> None:
        self.terms = {tuple(k): int(v) for k, v in terms.items() if v}
        self.nvars = nvars

    def __add__(self, other: CharacterPoly) -> CharacterPoly:
        out = defaultdict(int, self.terms)
        for k, v in other.terms.items():
            out[k] += v
        return CharacterPoly(out, self.nvars)

    def __sub__(self, other: CharacterPoly) -> CharacterPoly:
        return self + other.scale(-1)

    def scale(self, c: int) -> CharacterPoly:
        return CharacterPoly({k: c * v for k, v in self.terms.items()}, self.nvars)

    def __mul__(self, other: CharacterPoly) -> CharacterPoly:
        out: dict[Exponent, int] = defaultdict(int)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[tuple(a + b for a, b in zip(k1, k2))] += v1 * v2
        return CharacterPoly(out, self.nvars)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def at_ones(self) -> int:
        return sum(self.terms.values())

    def is_symmetric(self, nsym: int | None = None) -> bool:
        """Symmetric under permutations of the first ``nsym`` variables."""
        nsym = self.nvars if nsym is None else nsym
        for k, v in self.terms.items():
            for i in range(nsym - 1):
                swapped = list(k)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), 0) != v:
                    return False
        return True

    def to_multipoly(self) -> MultiPolynomial:
        if any(e < 0 for k in self.terms for e in k):
            raise ValueError("character has negative exponents; twist by det first")
        return MultiPolynomial({k: Fraction(v) for k, v in self.terms.items()}, self.nvars)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        out = []
        for k in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            v = self.terms[k]
            factors = []
            for name, e in zip(names, k):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}" if e > 0 else f"{name}^({e})")
            body = "*".join(factors) if factors else "1"
            if abs(v) != 1:
                body = f"{abs(v)}*{body}" if factors else str(abs(v))
            out.append(body if not out and v > 0 else (f"-{body}" if not out else ("+ " if v > 0 else "- ") + body))
        return " ".join(out)

    def __repr__(self) -> str:
        return f"CharacterPoly({self.to_str()!r})"


def character(lam: Coweight | Sequence[int]) -> CharacterPoly:
    """Schur polynomial ``s_lam(x_1..x_n)`` as a sum over GT patterns."""
    lam = as_coweight(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    terms: dict[Exponent, int] = defaultdict(int)
    for pat in gt_patterns(lam.parts):
        terms[pattern_weight(pat)] += 1
    return CharacterPoly(terms, len(lam))


def schur_expand(ch: CharacterPoly, n: int) -> dict[tuple[Coweight, tuple[int, ...]], int]:
    """Decompose a character in ``x_1..x_n`` (plus spectator variables) into Schur polynomials.

    ``ch`` must be symmetric in the first ``n`` variables; remaining variables
    are carried along as a grading.  Returns ``{(lam, extra_exponents): mult}``.
    Works by repeatedly subtracting ``s_lam`` for the lexicographically largest
    monomial.  A negative multiplicity raises ``ArithmeticError``.
    """
    rest = CharacterPoly(dict(ch.terms), ch.nvars)
    result: dict[tuple[Coweight, tuple[int, ...]], int] = {}
    schur_cache: dict[tuple[int, ...], CharacterPoly] = {}
    while not rest.is_zero():
        lead = max(rest.terms)
        lam = lead[:n]
        extra = lead[n:]
        if not is_dominant(lam):
            raise ArithmeticError(f"leading exponent {lead} is not dominant; input not symmetric")
        mult = rest.terms[lead]
        if mult < 0:
            raise ArithmeticError(f"negative multiplicity {mult} for {lam} at {extra}")
        if lam not in schur_cache:
            schur_cache[lam] = character(lam)
        s = schur_cache[lam]
        shifted = CharacterPoly({k + extra: v for k, v in s.terms.items()}, ch.nvars)
        rest = rest - shifted.scale(mult)
        result[(Coweight(lam), extra)] = mult
    return result
