"""``satake-kit`` command-line front end.

Exit codes: 0 success, 1 a requested verification failed, 2 usage or input
error.  JSON is written with sorted keys and no timing information unless
``--timing`` is given, so identical invocations give identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence, TextIO

from satake_kit import __version__
from satake_kit.bk import DimensionOverflow, bk_polynomial, build_irrep
from satake_kit.cache import ResultCache, canonical_json
from satake_kit.centralizers import CHECKS as CENTRALIZER_CHECKS
from satake_kit.centralizers import PreconditionError
from satake_kit.checks import Check
from satake_kit.gln import weight_multiplicity
from satake_kit.kostka import kostka_foulkes_charge, kostka_foulkes_lusztig
from satake_kit.spectral import BigradedSeries, branch_psi_x, phi_on_free_module, shear
from satake_kit.stalks import FLAVORS, StalkRow, StalkTable, stalk_rows
from satake_kit.twistor import twistor_report
from satake_kit.verify import SUITE_NAMES, run_suites
from satake_kit.weights import Coweight, dominance_leq, dominant_coweights, is_dominant

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad arguments or input discovered after parsing."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    size: int | None = None
    flavor: str | None = None
    format: str = "json"
    seed: int | None = None
    params: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None and v != {}}


@dataclass
class ResultEnvelope:
    config: RunConfig
    payload: Any
    checks: list[Check]
    timing: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        out = {
            "tool": "satake-kit",
            "version": __version__,
            "config": self.config.to_json(),
            "payload": self.payload,
            "checks": [c.to_json() for c in self.checks],
            "status": "pass" if self.passed else "fail",
        }
        if self.timing is not None:
            out["timing_seconds"] = round(self.timing, 3)
        return out


# -- helpers ------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _coweight(parts: Sequence[int], n: int, what: str, dominant: bool = True) -> Coweight:
    if len(parts) != n:
        raise UsageError(f"{what} must have {n} entries, got {len(parts)}")
    cw = Coweight(parts)
    if dominant and not is_dominant(cw):
        raise UsageError(f"{what} = {list(parts)} is not dominant")
    return cw


def _pool_map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _dump(obj: Any, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)
    return canonical_json(obj)


# -- commands -----------------------------------------------------------------
# each returns (payload, checks, tabular rows or None)

Rows = list[dict[str, str]]
Outcome = tuple[Any, list[Check], Rows | None]


def _kostka_cell(pair: tuple[tuple[int, ...], tuple[int, ...]]) -> dict:
    lam, mu = pair
    k = kostka_foulkes_charge(lam, mu)
    return {
        "lam": list(lam),
        "mu": list(mu),
        "poly": str(k),
        "lusztig_agrees": k == kostka_foulkes_lusztig(lam, mu),
        "q1_is_multiplicity": k.evaluate(1) == weight_multiplicity(lam, mu),
    }


def cmd_kostka(args: argparse.Namespace) -> Outcome:
    lam = _coweight(args.lam, args.n, "--lam")
    mu = _coweight(args.mu, args.n, "--mu")
    poly = kostka_foulkes_charge(lam, mu)
    checks = []
    if args.check:
        checks.append(Check("charge_vs_lusztig", poly == kostka_foulkes_lusztig(lam, mu)))
    return {"poly": str(poly)}, checks, None


def cmd_kostka_table(args: argparse.Namespace) -> Outcome:
    pairs = []
    for s in range(args.size + 1):
        ws = dominant_coweights(args.n, s)
        pairs += [(lam.parts, mu.parts) for lam in ws for mu in ws if dominance_leq(mu, lam)]
    rows = _pool_map(_kostka_cell, pairs, args.jobs)
    checks = [
        Check("charge_vs_lusztig", all(r["lusztig_agrees"] for r in rows), f"{len(rows)} cells"),
        Check("q1_is_multiplicity", all(r["q1_is_multiplicity"] for r in rows), f"{len(rows)} cells"),
    ]
    table = [{"lam": _fmt(r["lam"]), "mu": _fmt(r["mu"]), "poly": r["poly"]} for r in rows]
    payload = {"n": args.n, "size": args.size, "rows": [{k: r[k] for k in ("lam", "mu", "poly")} for r in rows]}
    return payload, checks, table


def cmd_bk(args: argparse.Namespace) -> Outcome:
    lam = _coweight(args.lam, args.n, "--lam")
    try:
        rep = build_irrep(lam)
    except DimensionOverflow as exc:
        raise UsageError(str(exc)) from exc
    if args.mu:
        mus = [_coweight(args.mu, args.n, "--mu", dominant=False)]
    else:
        mus = [w for w in rep.weights() if is_dominant(w)]
        mus = [w.shift(rep.twist) for w in mus]
    table = []
    agree = True
    for mu in mus:
        p = bk_polynomial(rep, mu)
        entry = {"mu": mu.to_json(), "poly": str(p)}
        if is_dominant(mu):
            k = kostka_foulkes_charge(lam, mu)
            entry["kostka"] = str(k)
            agree &= p == k
        table.append(entry)
    payload = {"lam": lam.to_json(), "dimension": rep.dimension, "table": table}
    return payload, [Check("bk_equals_kostka", agree, f"{len(table)} weights")], None


def _stalk_json(row: StalkRow) -> dict:
    return {
        "lam": row.lam.to_json(),
        "mu": row.mu.to_json(),
        "poly": str(row.poly),
        "degrees": {_fmt_frac(d): v for d, v in sorted(row.degrees.items())},
        "orbit_dim": row.orbit_dim,
    }


def _fmt_frac(d) -> str:
    return str(d.numerator) if d.denominator == 1 else f"{d.numerator}/{d.denominator}"


def _fmt(parts: Iterable[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _stalk_job(job: tuple[int, int, str]) -> list[StalkRow]:
    return stalk_rows(*job)


def cmd_stalks(args: argparse.Namespace) -> Outcome:
    chunks = _pool_map(_stalk_job, [(args.n, s, args.flavor) for s in range(args.size + 1)], args.jobs)
    rows = [r for chunk in chunks for r in chunk]
    table = StalkTable(args.n, args.flavor, args.size, rows)
    checks = [
        Check("parity", table.parity_ok()),
        Check("diagonal_one", all(r.poly == 1 for r in rows if r.lam == r.mu)),
    ]
    payload = {"n": args.n, "flavor": args.flavor, "size": args.size, "rows": [_stalk_json(r) for r in rows]}
    flat = [
        {
            "lam": _fmt(r.lam),
            "mu": _fmt(r.mu),
            "poly": str(r.poly),
            "degrees": ";".join(f"{_fmt_frac(d)}:{v}" for d, v in sorted(r.degrees.items())),
            "orbit_dim": str(r.orbit_dim),
        }
        for r in rows
    ]
    return payload, checks, flat


def cmd_twistor(args: argparse.Namespace) -> Outcome:
    report = twistor_report(args.n)
    checks = [Check(k, bool(v)) for k, v in report["checks"].items()]
    return report, checks, None


def cmd_centralizers(args: argparse.Namespace) -> Outcome:
    checks = CENTRALIZER_CHECKS[args.check](args.n, args.seed)
    return {"check": args.check, "n": args.n, "seed": args.seed}, checks, None


def cmd_branch(args: argparse.Namespace) -> Outcome:
    Lam = _coweight(args.Lam, 2 * args.n, "--Lam")
    dec = branch_psi_x(Lam)
    image = phi_on_free_module(Lam)
    payload = {"branching": dec.to_json(), "free_module": image.to_json()}
    return payload, [Check("hilbert_identity", image.hilbert_identity)], None


def cmd_shear(args: argparse.Namespace) -> Outcome:
    try:
        text = Path(args.input).read_text(encoding="utf-8")
        series = BigradedSeries.loads(text)
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read series from {args.input}: {exc}") from exc
    out = shear(series, -1 if args.inverse else 1)
    checks = [Check("total_preserved", out.total() == series.total())]
    return out.to_json(), checks, None


def cmd_verify(args: argparse.Namespace) -> Outcome:
    results = run_suites(args.suite, args.n, args.seed)
    checks = [Check(f"{suite}.{c.name}", c.passed, c.detail) for suite, cs in results.items() for c in cs]
    payload = {suite: {"passed": sum(c.passed for c in cs), "total": len(cs)} for suite, cs in results.items()}
    return payload, checks, None


COMMANDS: dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "kostka": cmd_kostka,
    "kostka-table": cmd_kostka_table,
    "bk": cmd_bk,
    "stalks": cmd_stalks,
    "twistor": cmd_twistor,
    "centralizers": cmd_centralizers,
    "branch": cmd_branch,
    "shear": cmd_shear,
    "verify": cmd_verify,
}
CACHED = {"kostka", "kostka-table", "bk", "stalks", "twistor", "branch"}


# -- parsing --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-cache", action="store_true", help="always recompute")
    common.add_argument("--cache-dir", help="cache directory (default: $SATAKE_KIT_CACHE_DIR or ~/.cache/satake-kit)")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes for table commands")
    common.add_argument("--envelope", action="store_true", help="wrap output in a result envelope")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the envelope")

    parser = argparse.ArgumentParser(prog="satake-kit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"satake-kit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kostka", parents=[common], help="one Kostka-Foulkes polynomial")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--lam", type=int, nargs="+", required=True)
    p.add_argument("--mu", type=int, nargs="+", required=True)
    p.add_argument("--check", action="store_true", help="cross-check against the Lusztig formula")

    p = sub.add_parser("kostka-table", parents=[common], help="all Kostka-Foulkes polynomials up to a size")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    p = sub.add_parser("bk", parents=[common], help="Brylinski-Kostant filtration polynomials of V_lam")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--lam", type=int, nargs="+", required=True)
    p.add_argument("--mu", type=int, nargs="+")

    p = sub.add_parser("stalks", parents=[common], help="IC-stalk tables")
    p.add_argument("--flavor", choices=FLAVORS, default="complex")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    p = sub.add_parser("twistor", parents=[common], help="equivariant cohomology and the matrix Phi")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("centralizers", parents=[common], help="Kostant-section and centralizer checks")
    p.add_argument("--check", choices=sorted(CENTRALIZER_CHECKS), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("branch", parents=[common], help="branching of a GL_2n module along psi_X")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--Lam", type=int, nargs="+", required=True)

    p = sub.add_parser("shear", parents=[common], help="shear a bigraded series given as [[i, j, dim], ...]")
    p.add_argument("--input", required=True)
    p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", nargs="+", choices=("all",) + SUITE_NAMES, default=["all"])
    p.add_argument("--n", type=_positive, default=2)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    skip = {"command", "n", "size", "flavor", "format", "seed", "no_cache", "cache_dir", "jobs", "envelope", "pretty", "timing"}
    params = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    return RunConfig(
        command=args.command,
        n=getattr(args, "n", None),
        size=getattr(args, "size", None),
        flavor=getattr(args, "flavor", None),
        format=getattr(args, "format", "json"),
        seed=getattr(args, "seed", None),
        params=params,
    )


def _render_csv(rows: Rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _latex_escape(text: str) -> str:
    return text.replace("*", "")


def _render_latex(rows: Rows) -> str:
    cols = list(rows[0]) if rows else []
    lines = [r"\begin{tabular}{" + "l" * len(cols) + "}", " & ".join(cols).replace("_", r"\_") + r" \\", r"\hline"]
    for r in rows:
        lines.append(" & ".join(f"${_latex_escape(r[c])}$" for c in cols) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    config = _config(args)
    cache = ResultCache(args.cache_dir, enabled=not args.no_cache and args.command in CACHED)
    cache_config = {"version": __version__, **config.to_json()}
    start = time.perf_counter()
    try:
        hit = cache.lookup(cache_config)
        if hit is not None:
            payload, checks, rows = hit["payload"], [Check(**c) for c in hit["checks"]], hit["rows"]
        else:
            payload, checks, rows = COMMANDS[args.command](args)
            cache.store(
                cache_config,
                {"payload": payload, "checks": [asdict(c) for c in checks], "rows": rows},
            )
    except (UsageError, PreconditionError) as exc:
        print(f"satake-kit {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - start

    envelope = ResultEnvelope(config, payload, checks, elapsed if args.timing else None)
    fmt = getattr(args, "format", "json")
    if fmt == "csv":
        stdout.write(_render_csv(rows or []))
    elif fmt == "latex":
        stdout.write(_render_latex(rows or []))
    elif args.envelope or args.command == "verify":
        stdout.write(_dump(envelope.to_json(), args.pretty) + "\n")
    else:
        stdout.write(_dump(payload, args.pretty) + "\n")

    if not envelope.passed:
        for c in checks:
            if not c.passed:
                print(f"FAILED {c.name} {c.detail}".rstrip(), file=stderr)
        return EXIT_FAILED
    return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    run()
