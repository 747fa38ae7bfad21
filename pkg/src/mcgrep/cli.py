"""Command-line entry point: verification suites, twist matrices, Phi export and reports."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .checks import Report

DEFAULT_MAX_DIM = 10 ** 6

SUITE_NAMES = (
    "scalars",
    "hopf",
    "ribbon",
    "integral",
    "adjoint",
    "quantum-mcg",
    "heisenberg",
    "homological",
    "deformed",
    "iso",
)

WORD_HELP = (
    "whitespace-separated tokens a<j>, b<j>, g<k>, each with an optional ^e exponent, "
    "and parenthesized groups such as (a1 b1)^6; the leftmost token is applied last"
)


class ConfigError(Exception):
    """Invalid configuration; reported with exit code 2."""


# ---------------------------------------------------------------------------
# suites


def run_suite(name: str, g: int, r: int, seed: int) -> list[Report]:
    """Run one named suite. Imports are local so worker processes stay cheap."""
    if name == "scalars":
        from .scalars import scalars_suite

        return [scalars_suite(rs=(r,), seed=seed)]
    if name == "hopf":
        from .uqsl2 import closed_form_suite, hopf_axiom_suite

        return [hopf_axiom_suite(r), closed_form_suite(r)]
    if name == "ribbon":
        from .uqsl2 import ribbon_suite

        return [ribbon_suite(r)]
    if name == "integral":
        from .uqsl2 import integral_suite

        return [integral_suite(r)]
    if name == "adjoint":
        from .adjoint import adjoint_suite

        return [adjoint_suite(g, r, seed=seed)]
    if name == "quantum-mcg":
        from .quantum_mcg import quantum_mcg_suite

        return [quantum_mcg_suite(g, r)]
    if name == "heisenberg":
        from .heisenberg import heisenberg_suite

        return [heisenberg_suite(g, r, seed=seed)]
    if name == "homological":
        from .homological import homological_suite

        return [homological_suite(g, r)]
    if name == "deformed":
        from .homological import deformed_suite

        return [deformed_suite(g, r)]
    if name == "iso":
        from .isomorphism import iso_suite

        return [iso_suite(g, r)]
    raise ConfigError(f"unknown suite {name!r}")


def _run_one(args: tuple[str, int, int, int]) -> list[Report]:
    return run_suite(*args)


def run_suites(names: Sequence[str], g: int, r: int, seed: int, jobs: int = 1) -> list[Report]:
    """Run suites, possibly in parallel; results keep the order of names."""
    tasks = [(n, g, r, seed) for n in names]
    if jobs <= 1 or len(tasks) <= 1:
        chunks = [_run_one(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_one, tasks))
    return [rep for chunk in chunks for rep in chunk]


# ---------------------------------------------------------------------------
# config and output


def max_dim() -> int:
    raw = os.environ.get("MCGREP_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"MCGREP_MAX_DIM must be an integer, got {raw!r}") from exc


def validate(args: argparse.Namespace) -> None:
    if args.r < 3 or args.r % 2 == 0:
        raise ConfigError("r must be odd ≥ 3")
    if args.g < 1:
        raise ConfigError("g must be ≥ 1")
    if getattr(args, "jobs", 1) < 1:
        raise ConfigError("jobs must be ≥ 1")
    dim = args.r ** (3 * args.g)
    limit = max_dim()
    if dim > limit and not args.force:
        raise ConfigError(f"dimension r^(3g) = {dim} exceeds the limit {limit}; pass --force to run anyway")


def write_output(text: str, path: str | None) -> None:
    """Print to stdout, or write atomically through a temporary file in the target directory."""
    if path is None:
        sys.stdout.write(text)
        return
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(prefix=".mcgrep-", dir=os.path.dirname(target))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dumps(data: object) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def render_text(reports: Sequence[Report]) -> str:
    lines = []
    for rep in reports:
        params = ", ".join(f"{k}={v}" for k, v in sorted(rep.params.items()))
        lines.append(f"[{rep.suite}] {params}")
        for c in rep.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = f" -- {c.detail}" if c.detail and not c.passed else ""
            lines.append(f"  {mark}  {c.name} ({c.cases} cases){extra}")
    total = sum(len(rep.checks) for rep in reports)
    failed = sum(1 for rep in reports for c in rep.checks if not c.passed)
    lines.append(f"{total - failed}/{total} checks passed")
    return "\n".join(lines) + "\n"


def render_markdown(reports: Sequence[Report], g: int, r: int) -> str:
    lines = [f"# Verification report (g = {g}, r = {r})", ""]
    total = sum(len(rep.checks) for rep in reports)
    failed = sum(1 for rep in reports for c in rep.checks if not c.passed)
    lines += [f"{total - failed} of {total} checks passed.", ""]
    for rep in reports:
        lines += [f"## {rep.suite}", "", "| check | status | cases | detail |", "|---|---|---|---|"]
        for c in rep.checks:
            detail = c.detail.replace("|", "\\|")
            lines.append(f"| {c.name} | {'pass' if c.passed else 'FAIL'} | {c.cases} | {detail} |")
        lines.append("")
    return "\n".join(lines)


def render_matrix(op, r: int, g: int, basis: str, fmt: str) -> str:
    if fmt == "json":
        return _dumps({
            "r": r,
            "g": g,
            "basis": basis,
            "entries": [[i, j, v.to_json()] for i, j, v in op.entries()],
        })
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i, j, v in op.entries():
        writer.writerow([i, j, str(v).replace("z", "ζ")])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def _suite_list(name: str) -> list[str]:
    if name == "all":
        return list(SUITE_NAMES)
    if name not in SUITE_NAMES:
        raise ConfigError(f"unknown suite {name!r}")
    return [name]


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suites(_suite_list(args.suite), args.g, args.r, args.seed, args.jobs)
    if args.format == "json":
        text = _dumps({"g": args.g, "r": args.r, "passed": all(rep.passed for rep in reports),
                       "reports": [rep.to_json() for rep in reports]})
    else:
        text = render_text(reports)
    write_output(text, args.out)
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_twist(args: argparse.Namespace) -> int:
    from .homological import hom_twist
    from .isomorphism import phi_map
    from .quantum_mcg import MCGWord, evaluate_word, twist_closed

    try:
        word = MCGWord.parse(args.word, args.g)
    except ValueError as exc:
        raise ConfigError(f"cannot parse word {args.word!r}: {exc}") from exc
    if args.side == "quantum":
        M = evaluate_word(word, args.r, builder=twist_closed)
        basis = "ETF-lex"
        if args.conjugate_phi:
            M, basis = phi_map(args.g, args.r).conjugate_to_homological(M), "Gamma-lex"
    else:
        M = evaluate_word(word, args.r, builder=hom_twist)
        basis = "Gamma-lex"
        if args.conjugate_phi:
            M, basis = phi_map(args.g, args.r).conjugate_to_adjoint(M), "ETF-lex"
    write_output(render_matrix(M, args.r, args.g, basis, args.format), args.out)
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    from .isomorphism import phi_map

    write_output(_dumps(phi_map(args.g, args.r).to_json()), args.out)
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    reports = run_suites(list(SUITE_NAMES), args.g, args.r, args.seed, args.jobs)
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out and args.out.endswith(".json") else "markdown"
    if fmt == "json":
        text = _dumps({"g": args.g, "r": args.r, "passed": all(rep.passed for rep in reports),
                       "reports": [rep.to_json() for rep in reports]})
    else:
        text = render_markdown(reports, args.g, args.r)
    write_output(text, args.out)
    return 0 if all(rep.passed for rep in reports) else 1


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int, default=3, help="odd order of the root of unity (default 3)")
    p.add_argument("--g", type=int, default=1, help="genus (default 1)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    p.add_argument("--force", action="store_true", help="ignore the r^(3g) size guard (env MCGREP_MAX_DIM sets it)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for independent suites (default 1)")
    p.add_argument("--out", default=None, help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcgrep", description="Exact checks of quantum and homological mapping class group representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification suites")
    _common(p)
    p.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("twist", help="write the matrix of a mapping class word", description=f"Word syntax: {WORD_HELP}.")
    _common(p)
    p.add_argument("--side", default="quantum", choices=["quantum", "homological"])
    p.add_argument("--word", default="", help=WORD_HELP)
    p.add_argument("--conjugate-phi", action="store_true", help="express the result in the other side's basis through Phi")
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("iso", help="write Phi as a monomial matrix")
    _common(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("report", help="run every suite and write one markdown or JSON document")
    _common(p)
    p.add_argument("--format", default=None, choices=["markdown", "json"], help="default: json if --out ends in .json, else markdown")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        validate(args)
        return args.func(args)
    except ConfigError as exc:
        print(f"mcgrep: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"mcgrep: I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
