"""IC-stalk Poincare polynomials for complex and quaternionic GL_n orbit closures."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from satake_kit.algebra.qpoly import QPolynomial
from satake_kit.kostka import kostka_foulkes_charge
from satake_kit.weights import (
    Coweight,
    as_coweight,
    dominance_leq,
    dominant_coweights,
    is_dominant,
    rho_pairing,
)

Flavor = Literal["complex", "quaternionic", "symmetric"]
FLAVORS: tuple[str, ...] = ("complex", "quaternionic", "symmetric")


def _rho(lam: Coweight) -> Fraction:
    return rho_pairing(lam).half_value


def complex_stalk_poly(lam: Coweight | Sequence[int], mu: Coweight | Sequence[int]) -> QPolynomial:
    """``q^<lam - mu, rho> K_{lam,mu}(q^{-1})``; zero off the orbit closure."""
    lam, mu = as_coweight(lam), as_coweight(mu).dominant()
    if not dominance_leq(mu, lam):
        return QPolynomial.zero()
    shift = _rho(lam - mu)
    if shift.denominator != 1:  # pragma: no cover - mu <= lam forces integrality
        raise ArithmeticError(f"<lam - mu, rho> = {shift} is not an integer")
    return kostka_foulkes_charge(lam, mu).invert().shift(int(shift))


def degree_step(flavor: str) -> int:
    return 2 if flavor == "complex" else 4


def orbit_real_dimension(lam: Coweight | Sequence[int], flavor: str) -> int:
    """Real dimension of the orbit: ``2<lam, 2rho>`` (complex) or ``8<lam, rho>`` (quaternionic)."""
    lam = as_coweight(lam)
    two_rho = rho_pairing(lam).value
    if flavor == "complex":
        return 2 * two_rho
    if flavor in ("quaternionic", "symmetric"):
        return 4 * two_rho
    raise ValueError(f"unknown flavor {flavor!r}")


def stalk_degrees(lam: Coweight, poly: QPolynomial, flavor: str) -> dict[Fraction, int]:
    """Place ``sum_i d_i q^i`` in cohomological degrees ``step*i - step*<lam, rho>``."""
    step = degree_step(flavor)
    base = step * _rho(lam)
    return {step * i - base: d for i, d in poly}


@dataclass(frozen=True)
class StalkRow:
    lam: Coweight
    mu: Coweight
    poly: QPolynomial
    degrees: dict[Fraction, int]
    orbit_dim: int


@dataclass
class StalkTable:
    n: int
    flavor: str
    size_bound: int
    rows: list[StalkRow] = field(default_factory=list)

    def parity_ok(self) -> bool:
        """Nonzero stalks only in degrees ``d`` with ``d + step*<lam, rho>`` divisible by ``step``."""
        step = degree_step(self.flavor)
        for row in self.rows:
            if not row.poly.is_polynomial():
                return False
            base = step * _rho(row.lam)
            for deg in row.degrees:
                shifted = deg + base
                if shifted.denominator != 1 or int(shifted) % step:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "flavor": self.flavor,
            "size": self.size_bound,
            "parity_ok": self.parity_ok(),
            "rows": [
                {
                    "lam": r.lam.to_json(),
                    "mu": r.mu.to_json(),
                    "poly": str(r.poly),
                    "degrees": {_fmt_deg(d): v for d, v in sorted(r.degrees.items())},
                    "orbit_dim": r.orbit_dim,
                }
                for r in self.rows
            ],
        }


def _fmt_deg(d: Fraction) -> str:
    return str(d.numerator) if d.denominator == 1 else f"{d.numerator}/{d.denominator}"


def stalk_rows(n: int, size: int, flavor: str = "complex") -> list[StalkRow]:
    """Rows ``(lam, mu)`` with ``mu <= lam`` dominant, ``lam`` nonnegative and ``|lam| == size``."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    rows = []
    ws = dominant_coweights(n, size)
    for lam in ws:
        for mu in ws:
            if not dominance_leq(mu, lam):
                continue
            poly = complex_stalk_poly(lam, mu)
            rows.append(StalkRow(lam, mu, poly, stalk_degrees(lam, poly, flavor), orbit_real_dimension(lam, flavor)))
    return rows


def stalk_table(n: int, size_bound: int, flavor: str = "complex") -> StalkTable:
    """All rows with ``|lam| <= size_bound``, smallest sizes first."""
    table = StalkTable(n, flavor, size_bound)
    for s in range(size_bound + 1):
        table.rows.extend(stalk_rows(n, s, flavor))
    return table


def quaternionic_stalk_table(n: int, size_bound: int) -> StalkTable:
    return stalk_table(n, size_bound, "quaternionic")


def symmetric_stalk_table(n: int, size_bound: int) -> StalkTable:
    """Stalks along ``LSp_{2n}``-orbits on ``Gr_{2n}``: the same table as the quaternionic one."""
    return stalk_table(n, size_bound, "symmetric")


def is_diagonal_row(row: StalkRow) -> bool:
    return row.lam == row.mu and is_dominant(row.lam)
