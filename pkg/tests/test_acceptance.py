"""Acceptance criteria, one test each, run at the full stated ranges.

Each test records a PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary, and running this file as a script prints them directly.
"""

from __future__ import annotations

import io
import time
from typing import Callable

import pytest

from satake_kit import cli
from satake_kit.checks import Check
from satake_kit.verify import (
    BK_RANGES,
    CENTRALIZER_NS,
    COMPANION_SAMPLED_NS,
    COMPANION_SYMBOLIC_NS,
    KOSTKA_RANGES,
    PHI_NS,
    SHALIKA_SYMBOLIC_NS,
    SPECTRAL_MAX_SIZE,
    SPECTRAL_NS,
    STALK_RANGES,
    TWISTOR_NS,
    bk_suite,
    centralizer_suite,
    companion_suite,
    kostka_suite,
    phi_suite,
    shalika_suite,
    spectral_suite,
    stalk_suite,
    twistor_suite,
)

pytestmark = pytest.mark.acceptance

SEED = 20240607
RESULTS: dict[str, tuple[bool, str]] = {}


def record(label: str, run: Callable[[], list[Check]], budget: float | None = None) -> None:
    start = time.perf_counter()
    passed, detail = False, "error"
    try:
        checks = run()
        elapsed = time.perf_counter() - start
        failed = [c.name for c in checks if not c.passed]
        in_budget = budget is None or elapsed < budget
        passed = bool(checks) and not failed and in_budget
        detail = f"{len(checks) - len(failed)}/{len(checks)} checks, {elapsed:.1f}s"
        if not in_budget:
            detail += f" (budget {budget:.0f}s)"
        assert checks, "no checks ran"
        assert not failed, f"failed: {failed}"
        assert in_budget, detail
    finally:
        RESULTS[label] = (passed, detail)


def test_01_kostka_oracle_equivalence():
    assert (3, 6) in KOSTKA_RANGES and (4, 5) in KOSTKA_RANGES
    record("01 Kostka-Foulkes charge vs Lusztig, q=1 multiplicity", lambda: kostka_suite(KOSTKA_RANGES), 120)


def test_02_brylinski_kostant_identity():
    assert (3, 4) in BK_RANGES and (2, 6) in BK_RANGES
    record("02 filtration polynomial equals Kostka-Foulkes", lambda: bk_suite(BK_RANGES), 300)


def test_03_doubled_degree_stalks():
    record("03 quaternionic and symmetric stalk tables", lambda: stalk_suite(STALK_RANGES))


def test_04_twistor_suite():
    assert max(TWISTOR_NS) == 4
    record("04 equivariant rings, pullback, localization, cup matrices", lambda: twistor_suite(TWISTOR_NS))


def test_05_phi_conjugation():
    assert max(PHI_NS) == 3
    record("05 Phi conjugation identity", lambda: phi_suite(PHI_NS), 60)


def test_06_companion_identity():
    assert COMPANION_SYMBOLIC_NS == (1, 2) and COMPANION_SAMPLED_NS == (3, 4, 5)
    record("06 Kostant section companion identity", lambda: companion_suite(SEED))


def test_07_centralizer_suite():
    assert max(CENTRALIZER_NS) == 3
    record("07 regularity, tau, centralizer embedding", lambda: centralizer_suite(SEED, CENTRALIZER_NS))


def test_08_shalika_normal_form():
    assert SHALIKA_SYMBOLIC_NS == (1, 2)
    record("08 Shalika normal form", lambda: shalika_suite(SEED, SHALIKA_SYMBOLIC_NS))


def test_09_spectral_suite():
    assert SPECTRAL_NS == (1, 2) and SPECTRAL_MAX_SIZE == 4
    record("09 shear, branching, free-module Hilbert identity", lambda: spectral_suite(SPECTRAL_NS, SPECTRAL_MAX_SIZE))


def _verify_bytes() -> tuple[int, bytes]:
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(["verify", "--suite", "all", "--seed", str(SEED)], stdout=out, stderr=err)
    return code, out.getvalue().encode()


def test_10_determinism():
    def run() -> list[Check]:
        (c1, b1), (c2, b2) = _verify_bytes(), _verify_bytes()
        return [
            Check("verify_exit_zero", c1 == c2 == 0),
            Check("byte_identical_envelopes", b1 == b2, f"{len(b1)} bytes"),
        ]

    record("10 verify --suite all is byte-deterministic", run)


def summary_lines() -> list[str]:
    return [f"{'PASS' if ok else 'FAIL'} {label} [{detail}]" for label, (ok, detail) in sorted(RESULTS.items())]


if __name__ == "__main__":  # pragma: no cover
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(summary_lines()))
