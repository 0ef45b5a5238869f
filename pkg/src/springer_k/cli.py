"""Command-line entry point: ``springer-k <command> --lambda 2,1 ...``.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
3 generic specialization stayed degenerate after the retry budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .fixed_points import fixed_points
from .groebner import MonomialOrder
from .partitions import Partition
from .presentations import FLAVORS, build_presentation
from .suites import SUITES, run_suite
from .verify import DEFAULT_RETRIES, DEFAULT_SEED, DegenerateSpecialization, Report, generic_basis

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    lam: Partition
    flavor: str = "EqK"
    seed: int = DEFAULT_SEED
    order: str = "grevlex"
    format: str = "text"
    retries: int = DEFAULT_RETRIES
    timing: bool = False

    @property
    def monomial_order(self) -> MonomialOrder:
        return MonomialOrder(self.order)


class UsageError(Exception):
    pass


def parse_lambda(text: str) -> Partition:
    try:
        raw = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"malformed partition {text!r}: expected comma-separated positive integers") from None
    if not raw or any(p < 1 for p in raw):
        raise UsageError(f"malformed partition {text!r}: parts must be positive")
    if raw != sorted(raw, reverse=True):
        print(f"warning: reordering {text} as {','.join(map(str, sorted(raw, reverse=True)))}", file=sys.stderr)
    return Partition(tuple(sorted(raw, reverse=True)))


def _default_seed() -> int:
    env = os.environ.get("SPRINGER_K_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"SPRINGER_K_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    common.add_argument("--flavor", default="EqK", choices=FLAVORS)
    common.add_argument("--seed", type=int, default=None, help="generic-point seed (default $SPRINGER_K_SEED or 17)")
    common.add_argument("--order", default="grevlex", choices=("grevlex", "lex"))
    common.add_argument("--format", default="text", choices=("text", "json"))
    common.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in reports")

    parser = argparse.ArgumentParser(prog="springer-k", description="Presentations of Springer fiber K-rings and their checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("present", parents=[common], help="print an ideal presentation")
    sub.add_parser("rank", parents=[common], help="generic rank against n choose lambda")
    sub.add_parser("fixed-points", parents=[common], help="list torus-fixed permutation words")
    sub.add_parser("basis", parents=[common], help="standard-monomial basis at a generic point")
    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("--suite", default="all", choices=SUITES + ("all",))
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        lam=parse_lambda(args.lam),
        flavor=args.flavor,
        seed=args.seed if args.seed is not None else _default_seed(),
        order=args.order,
        format=args.format,
        retries=args.retries,
        timing=args.timing,
    )


def _emit(data, text: str, config: RunConfig) -> None:
    if config.format == "json":
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def _report_dicts(reports: list[Report], config: RunConfig) -> list[dict]:
    out = []
    for r in reports:
        d = r.to_dict()
        if not config.timing:
            d["elapsed_ms"] = None
        out.append(d)
    return out


def _emit_reports(reports: list[Report], config: RunConfig) -> int:
    lines = []
    for r in reports:
        line = r.to_text()
        if config.timing:
            line += f" ({r.elapsed_ms:.1f} ms)"
        lines.append(line)
    failed = [r for r in reports if not r.passed]
    if failed:
        lines.append("first counterexample: " + json.dumps(failed[0].to_dict()["detail"] if failed[0].detail else failed[0].to_dict()))
    summary = f"{len(reports) - len(failed)}/{len(reports)} checks passed"
    lines.append(summary)
    _emit({"reports": _report_dicts(reports, config), "pass": not failed}, "\n".join(lines), config)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_present(config: RunConfig) -> int:
    ideal = build_presentation(config.flavor, config.lam)
    _emit(ideal.to_dict(), ideal.to_text(), config)
    return EXIT_OK


def cmd_rank(config: RunConfig) -> int:
    reports = run_suite("rank", config.lam, seed=config.seed, flavor=config.flavor, retries=config.retries, order=config.monomial_order)
    return _emit_reports(reports, config)


def cmd_fixed_points(config: RunConfig) -> int:
    fps = fixed_points(config.lam)
    text = "\n".join(" ".join(map(str, w)) for w in fps.points) + f"\ncount {len(fps)}"
    _emit(fps.to_dict(), text, config)
    return EXIT_OK


def cmd_basis(config: RunConfig) -> int:
    ideal = build_presentation(config.flavor, config.lam)
    basis, values = generic_basis(ideal, config.seed, config.monomial_order)
    monos = basis.to_text_list(ideal.display)
    data = {
        "lambda": list(config.lam.parts),
        "flavor": config.flavor,
        "seed": config.seed,
        "specialization": values,
        "count": len(monos),
        "monomials": monos,
    }
    text = "\n".join(monos) + f"\ncount {len(monos)}"
    _emit(data, text, config)
    return EXIT_OK


def cmd_verify(config: RunConfig, suite: str) -> int:
    reports = run_suite(suite, config.lam, seed=config.seed, flavor=config.flavor, retries=config.retries, order=config.monomial_order)
    return _emit_reports(reports, config)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = _config(args)
        if args.command == "present":
            return cmd_present(config)
        if args.command == "rank":
            return cmd_rank(config)
        if args.command == "fixed-points":
            return cmd_fixed_points(config)
        if args.command == "basis":
            return cmd_basis(config)
        return cmd_verify(config, args.suite)
    except UsageError as exc:
        print(f"springer-k: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateSpecialization as exc:
        print(f"springer-k: degenerate specialization: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
