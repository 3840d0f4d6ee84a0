"""
Command-line interface for waringbound.

Usage:
    waringbound phi --n 2 --m 3 "(x1+x2)^4"
    waringbound certify --n 2 --m 4 "(x1+x2)^4 + (x3+x4)^4"
    waringbound certify --powersum sums.json
    waringbound verify-lemma --seed 7 --trials 1000 --n 2 3
    waringbound power-coeff --n 2 --i 1 --j 2 "1 + x1 + x2"
    waringbound finite-ring --q 2-500 --k 2 --format csv
    waringbound parse "x2*x1 + 3 - x1*x2"
    waringbound schema bound

Exit codes: 0 success, 1 usage or input error, 2 the polynomial is not a signed sum of
2^n-th powers, 3 two independent computations disagree.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, TextIO

from pydantic import BaseModel, ValidationError

from .algebra.parser import parse_poly
from .certify.certifier import certify_pattern, check_witness, ring_bound
from .core.config import WaringSettings, load_config, load_settings
from .core.exceptions import (
    ConfigurationError,
    CrossCheckError,
    NotInSubringObstruction,
    WaringError,
)
from .core.models import SCHEMAS, ObstructionReport, PatternMatrix, PowerCoefficientReport
from .exporters import CSVExporter, JSONExporter, JSONLinesExporter
from .invariant.lemma import (
    coeff_xixj_closed,
    half_power_monomial,
    pair_monomial,
    phi,
    phi_of_expansion,
    phi_of_powersum,
)
from .invariant.powersum import PowerExponent, PowerSum
from .invariant.verification import verify_lemma
from .rings.finite_rings import reports_to_frame, sweep
from .utils.logging import get_logger, setup_logging

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_OBSTRUCTION = 2
EXIT_CROSS_CHECK = 3

logger = get_logger("cli")


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; here 2 is reserved for obstructions."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class CommandContext:
    """What every command needs besides its arguments."""

    settings: WaringSettings
    out: TextIO
    output_file: Optional[str] = None


def _emit(
    ctx: CommandContext, fmt: str, records: Sequence[BaseModel], text: Callable[[], str]
) -> None:
    if fmt == "json":
        JSONExporter().export(records, filename=ctx.output_file, stream=ctx.out)
    elif fmt == "jsonl":
        JSONLinesExporter().export(records, filename=ctx.output_file, stream=ctx.out)
    elif fmt == "csv":
        CSVExporter().export(records, filename=ctx.output_file, stream=ctx.out)
    elif ctx.output_file:
        with open(ctx.output_file, "w", encoding="utf-8") as f:
            f.write(text() + "\n")
    else:
        ctx.out.write(text() + "\n")


def _load_powersum(path: str) -> PowerSum:
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read power sum file {path}: {e}") from e
    return PowerSum.from_json_document(document)


def _cross_checked_pattern(s: PowerSum, m: Optional[int]) -> PatternMatrix:
    # Closed form and pairwise expansion must agree
    closed = phi_of_powersum(s, m)
    read_off = phi_of_expansion(s, m)
    if closed != read_off:
        raise CrossCheckError(
            "closed form and expansion read-off disagree",
            {"closed_form": closed.set_bits(), "expansion": read_off.set_bits()},
        )
    return closed


def cmd_phi(args: argparse.Namespace, ctx: CommandContext) -> int:
    """Print pi of an expression, or of a power-sum file."""
    if args.powersum:
        s = _load_powersum(args.powersum)
        pattern = _cross_checked_pattern(s, args.m)
        n = s.n
    else:
        if args.expr is None:
            raise ConfigurationError("phi needs an expression or --powersum")
        n = args.n
        g = parse_poly(args.expr, args.m)
        pattern = phi(g, PowerExponent(n=n), args.m or g.num_vars)

    logger.info(f"phi for n={n}, m={pattern.m}: {pattern.weight} bits set")
    _emit(ctx, args.format or "text", [pattern.to_document()], pattern.render_text)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace, ctx: CommandContext) -> int:
    """Certified lower bound for a polynomial, a power-sum file, or the ring R_m."""
    if args.powersum:
        s = _load_powersum(args.powersum)
        if args.n is not None and args.n != s.n:
            raise ConfigurationError(f"--n {args.n} disagrees with n = {s.n} in {args.powersum}")
        target = _cross_checked_pattern(s, args.m)
        bound = certify_pattern(target, ctx.settings)
    elif args.expr is not None:
        g = parse_poly(args.expr, args.m)
        target = phi(g, PowerExponent(n=args.n or 2), args.m or g.num_vars)
        bound = certify_pattern(target, ctx.settings)
    else:
        if args.m is None:
            raise ConfigurationError("certify needs an expression, --powersum, or --m")
        target = None
        bound = ring_bound(args.m)

    if target is not None and not check_witness(bound, target):
        raise CrossCheckError(
            f"{bound.method.value} witness does not certify the target",
            bound.to_json_dict(),
        )

    def text() -> str:
        lines = [f"lower_bound: {bound.lower_bound}", f"method: {bound.method.value}"]
        lines.extend(f"witness: {w}" for w in bound.witness)
        return "\n".join(lines)

    _emit(ctx, args.format or "json", [bound], text)
    return EXIT_OK


def cmd_verify_lemma(args: argparse.Namespace, ctx: CommandContext) -> int:
    """Randomized check of the power-coefficient lemma."""
    config = load_config(
        args.config,
        {
            "seed": args.seed,
            "trials": args.trials,
            "n_list": args.n,
            "max_vars": args.max_vars,
            "max_degree": args.max_degree,
            "coeff_bound": args.coeff_bound,
            "output_format": args.format,
        },
    )
    report = verify_lemma(config, workers=ctx.settings.threads, full_expansion=args.full_expansion)

    def text() -> str:
        lines = [
            f"seed: {report.seed}",
            f"trials: {report.trials}",
            f"n: {' '.join(str(n) for n in report.n_list)}",
            f"checks: {report.checks}",
            f"failures: {report.failures}",
        ]
        for c in report.counterexamples:
            pair = f" pair ({c.pair[0]},{c.pair[1]})" if c.pair else ""
            lines.append(
                f"  trial {c.trial} n={c.n}{pair} {c.check}: expected {c.expected}, "
                f"got {c.actual} for f = {c.polynomial}"
            )
        return "\n".join(lines)

    _emit(ctx, config.output_format, [report], text)
    return EXIT_OK if report.passed else EXIT_CROSS_CHECK


def cmd_power_coeff(args: argparse.Namespace, ctx: CommandContext) -> int:
    """x_i*x_j coefficient of f^(2^n) by closed form and by exact expansion."""
    exponent = PowerExponent(n=args.n)
    f = parse_poly(args.expr, args.j)
    power = f.pow(exponent.k)
    report = PowerCoefficientReport(
        polynomial=f.render(),
        n=exponent.n,
        pair=[args.i, args.j],
        closed_form=coeff_xixj_closed(f, exponent, args.i, args.j),
        expanded=power.coeff(pair_monomial(args.i, args.j)),
        half_power=power.coeff(half_power_monomial(args.i, args.j, exponent)),
    )

    def text() -> str:
        flag = "" if report.matches else "  MISMATCH"
        return "\n".join(
            [
                f"closed_form: {report.closed_form}",
                f"expanded: {report.expanded}{flag}",
                f"half_power: {report.half_power}",
            ]
        )

    _emit(ctx, args.format or "text", [report], text)
    if not report.matches:
        logger.error(f"Closed form {report.closed_form} != expansion {report.expanded}")
        return EXIT_CROSS_CHECK
    return EXIT_OK


def parse_q_range(value: str) -> List[int]:
    """'16' -> [16]; '2-500' -> [2, ..., 500]."""
    try:
        if "-" in value:
            low, high = (int(part) for part in value.split("-", 1))
        else:
            low = high = int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected Q or A-B, got {value!r}") from e
    if low < 2 or high < low:
        raise argparse.ArgumentTypeError(f"need 2 <= A <= B, got {value!r}")
    return list(range(low, high + 1))


def cmd_finite_ring(args: argparse.Namespace, ctx: CommandContext) -> int:
    """v(k, Z/q) for one modulus or a range."""
    reports = sweep(args.q, args.k, workers=ctx.settings.threads)
    _emit(
        ctx,
        args.format or "text",
        reports,
        lambda: reports_to_frame(reports).to_string(index=False),
    )
    return EXIT_OK


def cmd_parse(args: argparse.Namespace, ctx: CommandContext) -> int:
    """Canonical rendering of an expression."""
    ctx.out.write(parse_poly(args.expr).render() + "\n")
    return EXIT_OK


def cmd_schema(args: argparse.Namespace, ctx: CommandContext) -> int:
    """JSON Schema of an output document."""
    schema = SCHEMAS[args.name].model_json_schema(mode="serialization")
    ctx.out.write(json.dumps(schema, indent=2) + "\n")
    return EXIT_OK


def _obstruction_report(n: int, e: NotInSubringObstruction) -> ObstructionReport:
    return ObstructionReport(
        n=n,
        pair=list(e.pair),
        monomial=e.monomial,
        coefficient=e.coefficient,
        divisor=e.divisor,
    )


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with every subcommand."""
    common = _ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML run configuration")
    common.add_argument("--format", choices=["text", "json", "jsonl", "csv"], help="Output format")
    common.add_argument("--output", "-o", help="Write output to a file instead of stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    common.add_argument("--quiet", "-q", action="store_true", help="Errors only")

    parser = _ArgumentParser(
        prog="waringbound",
        description="Certified lower bounds for sums of signed 2^n-th powers",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("phi", parents=[common], help="The mod-2 invariant of a polynomial")
    p.add_argument("expr", nargs="?", help="Polynomial expression")
    p.add_argument("--n", type=int, default=2, help="Exponent 2^n (n >= 2, default: 2)")
    p.add_argument("--m", type=int, help="Number of variables (default: largest used)")
    p.add_argument("--powersum", help="Power-sum JSON file instead of an expression")
    p.set_defaults(handler=cmd_phi)

    p = commands.add_parser("certify", parents=[common], help="Certified lower bound on v")
    p.add_argument("expr", nargs="?", help="Polynomial expression")
    p.add_argument("--n", type=int, help="Exponent 2^n (n >= 2, default: 2)")
    p.add_argument("--m", type=int, help="Number of variables")
    p.add_argument("--powersum", help="Power-sum JSON file instead of an expression")
    p.set_defaults(handler=cmd_certify)

    p = commands.add_parser("verify-lemma", parents=[common], help="Randomized lemma suite")
    p.add_argument("--n", type=int, nargs="+", help="Exponents n (default: 2 3)")
    p.add_argument("--seed", type=int, help="Run seed (default: 0)")
    p.add_argument("--trials", type=int, help="Number of random polynomials (default: 1000)")
    p.add_argument("--max-vars", type=int, help="Largest m (default: 4)")
    p.add_argument("--max-degree", type=int, help="Largest total degree (default: 3)")
    p.add_argument("--coeff-bound", type=int, help="Coefficients in [-B, B] (default: 5)")
    p.add_argument(
        "--full-expansion",
        action="store_true",
        help="Also expand f^(2^n) in full and compare with the per-pair path",
    )
    p.set_defaults(handler=cmd_verify_lemma)

    p = commands.add_parser("power-coeff", parents=[common], help="Closed form vs expansion")
    p.add_argument("expr", help="Base polynomial f")
    p.add_argument("--n", type=int, default=2, help="Exponent 2^n (n >= 2, default: 2)")
    p.add_argument("--i", type=int, default=1, help="First variable of the pair (default: 1)")
    p.add_argument("--j", type=int, default=2, help="Second variable of the pair (default: 2)")
    p.set_defaults(handler=cmd_power_coeff)

    p = commands.add_parser("finite-ring", parents=[common], help="v(k, Z/q) by BFS")
    p.add_argument("--q", type=parse_q_range, required=True, help="Modulus Q or range A-B")
    p.add_argument("--k", type=int, required=True, help="Exponent k >= 1")
    p.set_defaults(handler=cmd_finite_ring)

    p = commands.add_parser("parse", parents=[common], help="Canonical form of an expression")
    p.add_argument("expr", help="Polynomial expression")
    p.set_defaults(handler=cmd_parse)

    p = commands.add_parser("schema", parents=[common], help="JSON Schema of an output")
    p.add_argument("name", choices=sorted(SCHEMAS), help="Document name")
    p.set_defaults(handler=cmd_schema)

    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Main CLI function."""
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out if out is not None else sys.stdout

    # Load settings from WARING_* and .env
    try:
        settings = load_settings()
    except ValidationError as e:
        print(f"Invalid WARING_* settings: {e}", file=sys.stderr)
        return EXIT_USAGE

    # Set up logging; flags win over settings
    if args.quiet:
        log_level = "ERROR"
    elif args.verbose:
        log_level = "DEBUG"
    else:
        log_level = settings.log_level
    setup_logging(level=log_level, log_file=settings.log_file)

    ctx = CommandContext(settings=settings, out=out, output_file=args.output)
    handler: Callable[[argparse.Namespace, CommandContext], int] = args.handler
    try:
        return handler(args, ctx)
    except NotInSubringObstruction as e:
        # An obstruction is itself a certificate, so it goes to stdout
        n = getattr(args, "n", None)
        report = _obstruction_report(n if isinstance(n, int) else 2, e)
        _emit(ctx, args.format or "text", [report], lambda: f"obstruction: {e}")
        return EXIT_OBSTRUCTION
    except CrossCheckError as e:
        print(f"Cross-check failed: {e}", file=sys.stderr)
        if e.details:
            print(json.dumps(e.details, default=str), file=sys.stderr)
        return EXIT_CROSS_CHECK
    except (WaringError, ValidationError, ValueError, FileNotFoundError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
