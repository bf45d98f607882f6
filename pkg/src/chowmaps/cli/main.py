"""
chowmaps command line.

    chowmaps present --r 2 --d 3 [--full] [--format text|json|latex]
    chowmaps alpha --i 3 --k 0 --r 2 --d 3 [--no-check]
    chowmaps verify {cross|identities|reduction|conjecture|rational} [--r a..b] [--d a..b]
    chowmaps gcd-binomials --i 2..200

Exit codes: 0 all checks pass, 1 a check fails, 2 invalid input.
"""

from __future__ import annotations

import sys
from functools import wraps
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import click
from pydantic import ValidationError as PydanticValidationError

from .. import __version__
from ..core.config import THREADS_ENV_VAR, Settings, VerifyCfg, load_settings
from ..core.exceptions import ChowMapsError, IdentityViolatedError, ValidationError
from ..core.logging import get_logger, setup_logging
from ..ideals.binomials import binomial_gcd
from ..models.reports import OutputFormat, RunConfig, VerifyKind
from ..relations.catalog import oracle_alpha, production_alpha
from ..relations.localization import RelationClass, RestrictionSign
from ..services.presentation import class_report, presentation_document
from ..services.verification import VerificationService
from .render import (
    print_verify_table,
    render_binomials,
    render_classes,
    render_presentations,
    render_verify,
)

logger = get_logger("chowmaps.cli")

EXIT_FAILED = 1
EXIT_INVALID = 2


class RangeParam(click.ParamType):
    """A single integer ``n`` or an inclusive range ``a..b``."""

    name = "range"

    def convert(self, value, param, ctx) -> List[int]:
        if isinstance(value, list):
            return value
        text = str(value).strip()
        try:
            if ".." in text:
                low, high = (int(part) for part in text.split("..", 1))
                if low > high:
                    self.fail(f"empty range {text!r}", param, ctx)
                return list(range(low, high + 1))
            return [int(text)]
        except ValueError:
            self.fail(f"{text!r} is neither an integer nor a range a..b", param, ctx)


RANGE = RangeParam()


def odd_degrees(values: Sequence[int], param: str = "--d") -> List[int]:
    """A single even d is an error; a range keeps its odd members."""
    if len(values) == 1:
        if values[0] < 1 or values[0] % 2 == 0:
            raise click.BadParameter(f"d must be an odd positive integer, got {values[0]}", param_hint=param)
        return list(values)
    odd = [d for d in values if d >= 1 and d % 2 == 1]
    if not odd:
        raise click.BadParameter("range contains no odd degree", param_hint=param)
    return odd


def build_run_config(settings: Settings, **fields) -> RunConfig:
    try:
        return RunConfig(verbosity=settings.logging.level, **fields)
    except PydanticValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        raise ValidationError(messages, {"command": fields.get("command")})


def handle_errors(func):
    """Library errors on user input exit 2; a violated identity exits 1."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except IdentityViolatedError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_FAILED)
        except ChowMapsError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_INVALID)
    return wrapper


def emit(document: str, out: Optional[str]) -> None:
    click.echo(document)
    if out:
        Path(out).write_text(document + "\n", encoding="utf-8")
        logger.info(f"📝 wrote {out}")


def resolve_threads(settings: Settings, threads: Optional[int]) -> int:
    return threads if threads else settings.effective_threads()


format_option = click.option(
    "--format", "fmt", type=click.Choice([f.value for f in OutputFormat]), default=None,
    help="Output format (default from config)",
)
threads_option = click.option(
    "--threads", type=click.IntRange(min=1), envvar=THREADS_ENV_VAR, default=None,
    help="Worker threads (default: available parallelism)",
)
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Also write the document to FILE")


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="YAML config file")
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR or CRITICAL")
@click.version_option(__version__, prog_name="chowmaps")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], log_level: Optional[str]) -> None:
    """Relations of the integral Chow ring of degree d maps P^1 -> P^r, d odd."""
    try:
        settings = load_settings(config_path)
    except ChowMapsError as e:
        raise click.UsageError(str(e))
    if log_level:
        settings.logging.level = log_level
    setup_logging(
        log_level=settings.logging.level,
        log_dir=settings.logging.log_dir,
        enable_file_logging=settings.logging.enable_file_logging,
        structured=settings.logging.structured,
    )
    ctx.obj = settings


@cli.command()
@click.option("--r", "r_values", type=RANGE, required=True, help="Target dimension r or a..b")
@click.option("--d", "d_values", type=RANGE, required=True, help="Odd degree d or a..b")
@click.option("--full", is_flag=True, help="Also list every alpha_{i,k}")
@format_option
@threads_option
@out_option
@click.pass_obj
@handle_errors
def present(settings: Settings, r_values, d_values, full, fmt, threads, out) -> None:
    """Generators of the relation ideal."""
    config = build_run_config(
        settings, command="present", r=r_values, d=odd_degrees(d_values), full=full,
        format=fmt or settings.output.format, threads=resolve_threads(settings, threads),
    )
    sign = RestrictionSign(settings.compute.restriction_sign)
    reports = [
        presentation_document(r, d, config.full, config.threads, sign)
        for d in config.d for r in config.r
    ]
    emit(render_presentations(reports, config.format, settings.output.json_indent), out)


@cli.command()
@click.option("--i", "i_values", type=RANGE, required=True, help="Envelope index i")
@click.option("--k", "k_values", type=RANGE, required=True, help="Power k of the left hyperplane class")
@click.option("--r", "r_values", type=RANGE, required=True, help="Target dimension r")
@click.option("--d", "d_values", type=RANGE, required=True, help="Odd degree d")
@click.option("--no-check", is_flag=True, help="Skip the oracle cross-check")
@format_option
@out_option
@click.pass_obj
@handle_errors
def alpha(settings: Settings, i_values, k_values, r_values, d_values, no_check, fmt, out) -> None:
    """A single class alpha_{i,k}^{r,d}."""
    config = build_run_config(
        settings, command="alpha", i=i_values, k=k_values, r=r_values, d=odd_degrees(d_values),
        check=not no_check, format=fmt or settings.output.format,
    )
    sign = RestrictionSign(settings.compute.restriction_sign)
    items, coords = [], []
    for d in config.d:
        for r in config.r:
            for i in config.i:
                for k in config.k:
                    poly, provenance = production_alpha(i, k, r, d, sign)
                    if config.check:
                        oracle = oracle_alpha(i, k, r, d)
                        if oracle is not None and oracle[0] != poly:
                            raise IdentityViolatedError(
                                f"alpha({i},{k}) r={r} d={d}: {provenance.value} and {oracle[1].value} paths differ"
                            )
                    items.append(class_report(RelationClass(i, k, poly, provenance)))
                    coords.append((r, d))
    emit(render_classes(items, coords, config.format, settings.output.json_indent), out)


DEFAULT_RANGES = {
    VerifyKind.CROSS: lambda v: (range(0, v.cross_r_max + 1), range(1, v.cross_d_max + 1)),
    VerifyKind.IDENTITIES: lambda v: (range(0, 3), range(1, v.cross_d_max + 1)),
    VerifyKind.REDUCTION: lambda v: (range(0, v.conjecture_r_max + 1), range(1, v.conjecture_d_max + 1)),
    VerifyKind.CONJECTURE: lambda v: (range(1, v.conjecture_r_max + 1), range(1, v.conjecture_d_max + 1)),
    VerifyKind.RATIONAL: lambda v: (range(1, v.conjecture_r_max + 1), range(1, v.conjecture_d_max + 1)),
}


def verify_ranges(kind: VerifyKind, limits: VerifyCfg, long_mode: bool = False,
                  weak: bool = False) -> Tuple[range, range]:
    """Default r and d ranges. --long selects the long conjecture range, --long --weak the generation-only one."""
    if long_mode and kind is VerifyKind.CONJECTURE:
        if weak:
            return range(1, limits.long_weak_r_max + 1), range(1, limits.long_weak_d_max + 1)
        return range(1, limits.long_r_max + 1), range(1, limits.long_d_max + 1)
    return DEFAULT_RANGES[kind](limits)


@cli.command()
@click.argument("kind", type=click.Choice([k.value for k in VerifyKind]))
@click.option("--r", "r_values", type=RANGE, default=None, help="r or a..b")
@click.option("--d", "d_values", type=RANGE, default=None, help="Odd d or a..b (even members of a range are skipped)")
@click.option("--weak", is_flag=True, help="conjecture: test generation only")
@click.option("--long", "long_mode", is_flag=True, help="conjecture: the long range from config (wider with --weak)")
@format_option
@threads_option
@out_option
@click.pass_obj
@handle_errors
def verify(settings: Settings, kind, r_values, d_values, weak, long_mode, fmt, threads, out) -> None:
    """Run a verification suite."""
    kind = VerifyKind(kind)
    default_r, default_d = verify_ranges(kind, settings.verify, long_mode, weak)
    r_values = list(default_r) if r_values is None else r_values
    d_values = odd_degrees(list(default_d) if d_values is None else d_values)
    config = build_run_config(
        settings, command="verify", kind=kind, r=r_values, d=d_values, weak=weak, long=long_mode,
        format=fmt or settings.output.format, threads=resolve_threads(settings, threads),
    )

    service = VerificationService(settings, config.threads)
    report = service.run(config.kind, config.r, config.d, weak=config.weak)
    emit(render_verify(report, config.format, settings.output.json_indent), out)
    print_verify_table(report)
    if not report.passed:
        sys.exit(EXIT_FAILED)


@cli.command("gcd-binomials")
@click.option("--i", "i_values", type=RANGE, required=True, help="i >= 2 or a..b")
@format_option
@out_option
@click.pass_obj
@handle_errors
def gcd_binomials(settings: Settings, i_values, fmt, out) -> None:
    """gcd of C(i, a), 0 < a < i, with its prime-power classification."""
    config = build_run_config(settings, command="gcd-binomials", i=i_values, format=fmt or settings.output.format)
    results = [binomial_gcd(i) for i in config.i]
    emit(render_binomials(results, config.format, settings.output.json_indent), out)


def main() -> None:
    cli(prog_name="chowmaps")


if __name__ == "__main__":
    main()
