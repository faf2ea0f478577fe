"""Coweights of GL_n, dominance order and pairings with rho."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterator, Sequence

from satake_kit.algebra.multipoly import StructuralError


@dataclass(frozen=True, order=True)
class Coweight:
    """An integer vector ``(lam_1, ..., lam_n)``; entries may be negative."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in parts))

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __add__(self, other: Coweight) -> Coweight:
        _same_length(self, other)
        return Coweight([a + b for a, b in zip(self.parts, other.parts)])

    def __sub__(self, other: Coweight) -> Coweight:
        _same_length(self, other)
        return Coweight([a - b for a, b in zip(self.parts, other.parts)])

    def shift(self, k: int) -> Coweight:
        """Add ``k * (1, ..., 1)`` (tensor with ``det^k``)."""
        return Coweight([p + k for p in self.parts])

    def dominant(self) -> Coweight:
        """The dominant representative of the Weyl orbit."""
        return Coweight(sorted(self.parts, reverse=True))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_coweight(x: Coweight | Sequence[int]) -> Coweight:
    return x if isinstance(x, Coweight) else Coweight(x)


def _same_length(a: Coweight, b: Coweight) -> None:
    if len(a) != len(b):
        raise StructuralError(f"coweights of different lengths: {a} vs {b}")


def is_dominant(lam: Coweight | Sequence[int]) -> bool:
    p = as_coweight(lam).parts
    return all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def dominance_leq(mu: Coweight | Sequence[int], lam: Coweight | Sequence[int]) -> bool:
    """``mu <= lam``: equal sizes and every partial sum of ``mu`` bounded by that of ``lam``."""
    mu, lam = as_coweight(mu), as_coweight(lam)
    _same_length(mu, lam)
    if mu.size != lam.size:
        return False
    return all(a <= b for a, b in zip(accumulate(mu.parts), accumulate(lam.parts)))


def in_root_lattice(v: Coweight | Sequence[int]) -> bool:
    return as_coweight(v).size == 0


def in_positive_cone(v: Coweight | Sequence[int]) -> bool:
    """True iff ``v`` is a nonnegative integer combination of positive roots ``e_i - e_{i+1}``."""
    v = as_coweight(v)
    return v.size == 0 and all(s >= 0 for s in accumulate(v.parts))


@dataclass(frozen=True)
class RhoPairing:
    value: int  # <lam, 2 rho_n>
    half_value: Fraction  # <lam, rho_n>


def rho_pairing(lam: Coweight | Sequence[int]) -> RhoPairing:
    lam = as_coweight(lam)
    n = lam.n
    two_rho = sum(p * (n + 1 - 2 * (i + 1)) for i, p in enumerate(lam.parts))
    return RhoPairing(two_rho, Fraction(two_rho, 2))


def normalize_pair(lam: Coweight, mu: Coweight) -> tuple[Coweight, Coweight, int]:
    """Twist both by the same power of det so that every entry is nonnegative.

    Returns the shifted pair and the shift ``k`` that was added.
    """
    _same_length(lam, mu)
    low = min(min(lam.parts, default=0), min(mu.parts, default=0))
    k = -low if low < 0 else 0
    return lam.shift(k), mu.shift(k), k


def to_partition(lam: Coweight) -> tuple[int, ...]:
    """Drop trailing zeros of a nonnegative dominant coweight."""
    parts = list(lam.parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"{lam} has negative parts; normalize first")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def dominant_coweights(n: int, size: int) -> list[Coweight]:
    """Nonnegative dominant coweights of GL_n with ``|lam| == size``, lexicographically descending."""
    out: list[Coweight] = []

    def rec(prefix: list[int], remaining: int, cap: int) -> None:
        if len(prefix) == n:
            if remaining == 0:
                out.append(Coweight(prefix))
            return
        for p in range(min(cap, remaining), -1, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], size, size)
    return out


def dominant_pairs(n: int, max_size: int) -> list[tuple[Coweight, Coweight]]:
    """All ``(lam, mu)`` nonnegative dominant with ``|lam| = |mu| <= max_size``."""
    pairs = []
    for s in range(max_size + 1):
        ws = dominant_coweights(n, s)
        for lam in ws:
            for mu in ws:
                pairs.append((lam, mu))
    return pairs
