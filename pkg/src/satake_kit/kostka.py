"""Kostka-Foulkes polynomials by two independent routes.

``kostka_foulkes_charge`` sums ``q^charge`` over semistandard tableaux;
``kostka_foulkes_lusztig`` is the alternating sum of the q-analogue of
Kostant's partition function over the symmetric group.  The two share no
code beyond the coweight helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from satake_kit.algebra.multipoly import StructuralError
from satake_kit.algebra.qpoly import QPolynomial
from satake_kit.weights import Coweight, as_coweight, is_dominant, normalize_pair


@dataclass(frozen=True)
class SSYT:
    """A semistandard Young tableau in English notation (row 0 is the longest)."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def content(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for r in self.rows:
            for a in r:
                counts[a - 1] += 1
        return tuple(counts)

    def reading_word(self) -> tuple[int, ...]:
        """Rows read left to right, from the bottom row up."""
        return tuple(a for r in reversed(self.rows) for a in r)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if len(lower) > len(upper) or any(lower[j] <= upper[j] for j in range(len(lower))):
                return False
        return True


def semistandard_tableaux(shape: Sequence[int], content: Sequence[int]) -> Iterator[SSYT]:
    """All SSYT of the given partition shape and content, built as a chain of horizontal strips."""
    shape = tuple(p for p in shape if p)
    content = tuple(content)
    if sum(shape) != sum(content):
        return
    nrows = len(shape)

    def rec(letter: int, current: tuple[int, ...], rows: list[list[int]]):
        if letter > len(content):
            if current == shape:
                yield SSYT(tuple(tuple(r) for r in rows))
            return
        need = content[letter - 1]
        for nxt in _horizontal_strips(current, shape, need):
            new_rows = [r + [letter] * (b - a) for r, a, b in zip(rows, current, nxt)]
            yield from rec(letter + 1, nxt, new_rows)

    yield from rec(1, (0,) * nrows, [[] for _ in range(nrows)])


def _horizontal_strips(inner: tuple[int, ...], outer: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Shapes ``nu`` with ``inner <= nu <= outer`` and ``nu / inner`` a horizontal strip of ``size`` boxes."""
    m = len(inner)

    def rec(i: int, acc: list[int], left: int):
        if i == m:
            if left == 0:
                yield tuple(acc)
            return
        hi = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for v in range(inner[i], hi + 1):
            if v - inner[i] > left:
                break
            acc.append(v)
            yield from rec(i + 1, acc, left - (v - inner[i]))
            acc.pop()

    yield from rec(0, [], size)


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word whose content is a partition.

    The word is cut into standard subwords: starting from the right, find a
    1, then move left (cyclically) to find 2, 3, ...; each wrap-around bumps
    the index, and the charge is the sum of the indices.
    """
    w = list(word)
    length = len(w)
    used = [False] * length
    total = 0
    remaining = length
    while remaining:
        top = 0
        present = {w[p] for p in range(length) if not used[p]}
        while top + 1 in present:
            top += 1
        if top == 0:
            raise ValueError("word content is not a partition")
        pos = length
        index = 0
        for letter in range(1, top + 1):
            found = None
            for p in range(pos - 1, -1, -1):
                if not used[p] and w[p] == letter:
                    found = p
                    break
            if found is None:
                if letter > 1:
                    index += 1
                for p in range(length - 1, pos - 1, -1):
                    if not used[p] and w[p] == letter:
                        found = p
                        break
            if found is None:  # pragma: no cover - guarded by `present`
                raise ValueError("malformed word")
            used[found] = True
            remaining -= 1
            total += index
            pos = found
    return total


def _prepare(lam: Coweight | Sequence[int], mu: Coweight | Sequence[int]) -> tuple[Coweight, Coweight] | None:
    lam, mu = as_coweight(lam), as_coweight(mu)
    if len(lam) != len(mu):
        raise StructuralError("lam and mu must have the same length")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if lam.size != mu.size:
        return None
    lam, mu, _ = normalize_pair(lam, mu)
    return lam, mu


def kostka_foulkes_charge(lam: Coweight | Sequence[int], mu: Coweight | Sequence[int]) -> QPolynomial:
    """``K_{lam,mu}(q) = sum_T q^charge(T)`` over SSYT of shape ``lam`` and content ``mu``."""
    prepared = _prepare(lam, mu)
    if prepared is None:
        return QPolynomial.zero()
    lam, mu = prepared
    if not is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")
    coeffs: dict[int, int] = {}
    for t in semistandard_tableaux(lam.parts, mu.parts):
        c = charge(t.reading_word())
        coeffs[c] = coeffs.get(c, 0) + 1
    return QPolynomial(coeffs)


@lru_cache(maxsize=None)
def _partition_q(v: tuple[int, ...]) -> QPolynomial:
    if len(v) == 1:
        return QPolynomial.one() if v[0] == 0 else QPolynomial.zero()
    first = v[0]
    if first < 0 or sum(v) != 0:
        return QPolynomial.zero()
    total = QPolynomial.zero()
    # distribute `first` copies of roots e_1 - e_j (j = 2..n)
    for m in _compositions(first, len(v) - 1):
        total = total + _partition_q(tuple(a + b for a, b in zip(v[1:], m)))
    return total.shift(first)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _compositions(total - k, parts - 1):
            yield (k,) + rest


def q_partition_function(v: Coweight | Sequence[int]) -> QPolynomial:
    """Sum of ``q^(number of roots)`` over ways to write ``v`` as a sum of positive roots ``e_i - e_j``."""
    v = as_coweight(v)
    if not v.parts:
        return QPolynomial.one()
    return _partition_q(v.parts)


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def kostka_foulkes_lusztig(lam: Coweight | Sequence[int], mu: Coweight | Sequence[int]) -> QPolynomial:
    """``sum_w sign(w) P_q(w(lam + rho) - (mu + rho))`` over the symmetric group."""
    prepared = _prepare(lam, mu)
    if prepared is None:
        return QPolynomial.zero()
    lam, mu = prepared
    n = len(lam)
    rho = [n - 1 - i for i in range(n)]
    lr = [a + r for a, r in zip(lam.parts, rho)]
    mr = [a + r for a, r in zip(mu.parts, rho)]
    total = QPolynomial.zero()
    for perm in permutations(range(n)):
        v = tuple(lr[perm[i]] - mr[i] for i in range(n))
        p = _partition_q(v)
        if not p.is_zero():
            total = total + p * _sign(perm)
    return total
