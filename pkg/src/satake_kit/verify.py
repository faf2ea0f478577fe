"""Verification suites shared by the ``verify`` command and the test-suite.

Each suite returns a list of :class:`Check` records; none of them raise on a
mathematical failure (hard errors from the underlying constructions are
caught and reported as failed checks).
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from satake_kit.bk import bk_polynomial, bk_polynomial_matrix, build_irrep
from satake_kit.centralizers import check_companion, check_embedding, check_shalika, check_tau
from satake_kit.checks import Check
from satake_kit.gln import weight_multiplicity, weyl_dimension
from satake_kit.kostka import kostka_foulkes_charge, kostka_foulkes_lusztig
from satake_kit.spectral import (
    adjoint_generators,
    branch_psi_x,
    diagonal_branching,
    phi_on_free_module,
    shear,
    target_generator_degrees,
)
from satake_kit.stalks import complex_stalk_poly, stalk_table
from satake_kit.twistor import EquivariantRing, build_phi, localization_map, twistor_report
from satake_kit.weights import Coweight, dominance_leq, dominant_coweights, dominant_pairs

Ranges = Sequence[tuple[int, int]]

# (n, max |lam|) grids at full strength
KOSTKA_RANGES: Ranges = ((1, 6), (2, 6), (3, 6), (4, 5))
BK_RANGES: Ranges = ((1, 4), (2, 6), (3, 4))
STALK_RANGES: Ranges = ((1, 6), (2, 6), (3, 6), (4, 5))
TWISTOR_NS = (1, 2, 3, 4)
PHI_NS = (1, 2, 3)
COMPANION_SYMBOLIC_NS = (1, 2)
COMPANION_SAMPLED_NS = (3, 4, 5)
CENTRALIZER_NS = (1, 2, 3)
SHALIKA_SYMBOLIC_NS = (1, 2)
SPECTRAL_NS = (1, 2)
SPECTRAL_MAX_SIZE = 4


def _guard(name: str, fn: Callable[[], list[Check]]) -> list[Check]:
    try:
        return fn()
    except Exception as exc:  # a hard error from a construction is a failed check
        return [Check(name, False, f"{type(exc).__name__}: {exc}")]


def kostka_suite(ranges: Ranges = KOSTKA_RANGES) -> list[Check]:
    """Charge and Lusztig formulas agree; ``K(1)`` is the weight multiplicity."""
    checks = []
    for n, size in ranges:
        agree = mult = 0
        pairs = dominant_pairs(n, size)
        for lam, mu in pairs:
            k = kostka_foulkes_charge(lam, mu)
            agree += k == kostka_foulkes_lusztig(lam, mu)
            mult += k.evaluate(1) == weight_multiplicity(lam, mu)
        total = len(pairs)
        checks.append(Check(f"kostka_charge_vs_lusztig_n{n}_size{size}", agree == total, f"{agree}/{total}"))
        checks.append(Check(f"kostka_q1_multiplicity_n{n}_size{size}", mult == total, f"{mult}/{total}"))
    return checks


def bk_suite(ranges: Ranges = BK_RANGES, matrix_route_size: int = 3) -> list[Check]:
    """Filtration polynomials from explicit modules equal the Kostka-Foulkes polynomials."""
    checks = []
    for n, size in ranges:
        agree = total = matrix_agree = matrix_total = 0
        for s in range(size + 1):
            weights = dominant_coweights(n, s)
            for lam in weights:
                rep = build_irrep(lam)
                for mu in weights:
                    p = bk_polynomial(rep, mu)
                    agree += p == kostka_foulkes_charge(lam, mu)
                    total += 1
                    if s <= matrix_route_size:
                        matrix_agree += p == bk_polynomial_matrix(rep, mu)
                        matrix_total += 1
        checks.append(Check(f"bk_equals_kostka_n{n}_size{size}", agree == total, f"{agree}/{total}"))
        checks.append(
            Check(f"bk_matrix_route_n{n}_size{size}", matrix_agree == matrix_total, f"{matrix_agree}/{matrix_total}")
        )
    return checks


def stalk_suite(ranges: Ranges = STALK_RANGES) -> list[Check]:
    """Quaternionic and symmetric tables repeat the complex polynomials with degrees doubled."""
    checks = []
    for n, size in ranges:
        cx = stalk_table(n, size, "complex")
        qt = stalk_table(n, size, "quaternionic")
        sy = stalk_table(n, size, "symmetric")
        same = all(
            a.lam == b.lam == c.lam and a.mu == b.mu == c.mu and a.poly == b.poly == c.poly
            for a, b, c in zip(cx.rows, qt.rows, sy.rows)
        ) and len(cx.rows) == len(qt.rows) == len(sy.rows)
        doubled = all(
            {2 * d: v for d, v in a.degrees.items()} == b.degrees for a, b in zip(cx.rows, qt.rows)
        )
        diagonal = all(r.poly == 1 for r in cx.rows if r.lam == r.mu)
        tag = f"n{n}_size{size}"
        checks += [
            Check(f"stalks_same_polynomials_{tag}", same, f"{len(cx.rows)} rows"),
            Check(f"stalks_degrees_doubled_{tag}", doubled),
            Check(f"stalks_parity_mod4_{tag}", qt.parity_ok() and sy.parity_ok()),
            Check(f"stalks_parity_mod2_complex_{tag}", cx.parity_ok()),
            Check(f"stalks_diagonal_one_{tag}", diagonal),
        ]
        off = [(lam, mu) for lam, mu in dominant_pairs(n, size) if not dominance_leq(mu, lam)]
        checks.append(Check(f"stalks_vanish_off_closure_{tag}", all(complex_stalk_poly(*p).is_zero() for p in off)))
    return checks


def twistor_suite(ns: Iterable[int] = TWISTOR_NS) -> list[Check]:
    """Ring presentations, pullback, localization and cup matrices."""
    checks = []
    for n in ns:
        def run(n: int = n) -> list[Check]:
            out = []
            for kind in ("complex_full", "complex", "quaternionic"):
                ring = EquivariantRing(n, kind)
                rel = ring.relation()
                ok = rel.degree_in(ring.class_index) == ring.rank and all(
                    v.is_zero() for v in localization_map(rel, ring)
                )
                out.append(Check(f"twistor_relation_{kind}_n{n}", ok))
            report = twistor_report(n)
            out += [Check(f"twistor_{name}_n{n}", bool(v)) for name, v in report["checks"].items()]
            return out

        checks += _guard(f"twistor_n{n}", run)
    return checks


def phi_suite(ns: Iterable[int] = PHI_NS) -> list[Check]:
    checks = []
    for n in ns:
        def run(n: int = n) -> list[Check]:
            phi = build_phi(n)  # raises unless the conjugation identity holds
            det_ok = phi.det_phi.is_constant() and abs(phi.det_phi.constant_term()) == 1
            return [Check(f"phi_conjugation_n{n}", True), Check(f"phi_unit_det_n{n}", det_ok, str(phi.det_phi))]

        checks += _guard(f"phi_conjugation_n{n}", run)
    return checks


def companion_suite(
    seed: int, symbolic_ns: Iterable[int] = COMPANION_SYMBOLIC_NS, sampled_ns: Iterable[int] = COMPANION_SAMPLED_NS
) -> list[Check]:
    checks = []
    for n in list(symbolic_ns) + list(sampled_ns):
        checks += _guard(f"companion_n{n}", lambda n=n: check_companion(n, seed + n, samples=50))
    return checks


def centralizer_suite(seed: int, ns: Iterable[int] = CENTRALIZER_NS) -> list[Check]:
    checks = []
    for n in ns:
        checks += _guard(f"tau_n{n}", lambda n=n: check_tau(n, seed + n, samples=100))
        checks += _guard(f"embedding_n{n}", lambda n=n: check_embedding(n, seed + n))
    return checks


def shalika_suite(seed: int, ns: Iterable[int] = SHALIKA_SYMBOLIC_NS) -> list[Check]:
    checks = []
    for n in ns:
        checks += _guard(f"shalika_n{n}", lambda n=n: check_shalika(n, seed + n, samples=100))
    return checks


def _spectral_weights(n: int, max_size: int) -> list[Coweight]:
    out = [lam for s in range(max_size + 1) for lam in dominant_coweights(2 * n, s)]
    # self-dual-up-to-det examples with negative entries
    out.append(Coweight([1] + [0] * (2 * n - 2) + [-1]))
    return out


def spectral_suite(ns: Iterable[int] = SPECTRAL_NS, max_size: int = SPECTRAL_MAX_SIZE) -> list[Check]:
    checks = []
    degrees = shear(adjoint_generators(1)).degree_multiset()
    checks.append(Check("shear_shift_example_degrees", degrees == [0, 2, 2, 4], str(degrees)))
    om = branch_psi_x((1, 0)).as_dict()
    checks.append(
        Check("branch_omega1_two_shifts", om == {(Coweight([1]), 1): 1, (Coweight([1]), -1): 1}, str(om))
    )
    for n in ns:
        det = branch_psi_x([1] * (2 * n)).as_dict()
        checks.append(Check(f"branch_det_squared_n{n}", det == {(Coweight([2] * n), 0): 1}))
        gens = shear(adjoint_generators(n))
        ok = gens.degree_multiset() == [0] * n * n + [2] * 2 * n * n + [4] * n * n
        checks.append(Check(f"shear_generators_n{n}", ok and set(target_generator_degrees(n)) == {4}))
        hilbert = dims = diag = sym = parity = 0
        weights = _spectral_weights(n, max_size)
        for Lam in weights:
            dec = branch_psi_x(Lam)
            hilbert += phi_on_free_module(Lam).hilbert_identity
            dims += dec.total_dimension() == weyl_dimension(Lam)
            diag += dec.diagonal() == diagonal_branching(Lam)
            table = dec.as_dict()
            sym += all(table.get((lam, -j)) == m for (lam, j), m in table.items())
            parity += all((j - Lam.size) % 2 == 0 for _, j, _ in dec.parts)
        total = len(weights)
        tag = f"n{n}_size{max_size}"
        checks += [
            Check(f"phi_hilbert_identity_{tag}", hilbert == total, f"{hilbert}/{total}"),
            Check(f"branch_dimension_{tag}", dims == total, f"{dims}/{total}"),
            Check(f"branch_diagonal_{tag}", diag == total, f"{diag}/{total}"),
            Check(f"branch_weight_symmetry_{tag}", sym == total, f"{sym}/{total}"),
            Check(f"branch_weight_parity_{tag}", parity == total, f"{parity}/{total}"),
        ]
    return checks


SUITE_NAMES = ("kostka", "bk", "stalks", "twistor", "phi", "companion", "centralizers", "shalika", "spectral")


def _cap(ranges: Ranges, n: int) -> list[tuple[int, int]]:
    return [(k, s) for k, s in ranges if k <= n]


def _ns(ns: Iterable[int], n: int) -> list[int]:
    return [k for k in ns if k <= n]


def run_suite(name: str, n: int, seed: int) -> list[Check]:
    """Run one named suite with every range capped at rank ``n``."""
    if name == "kostka":
        return kostka_suite(_cap(KOSTKA_RANGES, n))
    if name == "bk":
        return bk_suite(_cap(BK_RANGES, n))
    if name == "stalks":
        return stalk_suite(_cap(STALK_RANGES, n))
    if name == "twistor":
        return twistor_suite(_ns(TWISTOR_NS, n))
    if name == "phi":
        return phi_suite(_ns(PHI_NS, n))
    if name == "companion":
        return companion_suite(seed, _ns(COMPANION_SYMBOLIC_NS, n), _ns(COMPANION_SAMPLED_NS, n))
    if name == "centralizers":
        return centralizer_suite(seed, _ns(CENTRALIZER_NS, n))
    if name == "shalika":
        return shalika_suite(seed, _ns((1, 2, 3), n))
    if name == "spectral":
        return spectral_suite(_ns(SPECTRAL_NS, n))
    raise ValueError(f"unknown suite {name!r}")


def run_suites(names: Sequence[str], n: int, seed: int) -> dict[str, list[Check]]:
    if list(names) == ["all"]:
        names = SUITE_NAMES
    return {name: run_suite(name, n, seed) for name in names}
