"""Command-line entry point."""
import asyncio
import functools
import os
import sys
from pathlib import Path
from typing import Any, Callable, List, Optional, TypeVar

import click
from prometheus_client import REGISTRY, write_to_textfile
from pydantic import ValidationError

from src import __version__
from src.cli.maps import MapOptions, apply_map
from src.cli.output import echo_csv, echo_json, echo_table, emit
from src.config import get_settings
from src.core.algebra.gf2 import GF2Poly, enumerate_irreducibles
from src.core.counting.formulas import appendix_counts
from src.core.counting.subset_sums import subset_sum_counts
from src.core.gleason.angles import enumerate_dbar
from src.core.models.enums import (
    MapName,
    OutputFormat,
    PolynomialKind,
    SetName,
    Suite,
    TableOrder,
)
from src.core.models.schemas import CorrespondenceRow, CountReport
from src.core.symbolic.bijections import enumerate_cup
from src.core.symbolic.words import enumerate_set
from src.services.table_service import TableService
from src.services.verification_service import VerificationService
from src.utils.exceptions import (
    DomainException,
    FieldArithmeticException,
    GleasonBijectionsException,
    ValidationException,
)
from src.utils.logging import get_logger, setup_logging
from src.utils.metrics import errors_total

logger = get_logger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2

TABLE_COLUMNS = ("c", "M2", "D1", "P1", "N1", "N2", "N3")

F = TypeVar("F", bound=Callable[..., Any])


def handle_errors(f: F) -> F:
    """Turn domain exceptions into a one-line diagnostic and an exit code."""

    @functools.wraps(f)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return f(*args, **kwargs)
        except GleasonBijectionsException as e:
            usage = isinstance(e, (ValidationException, DomainException, FieldArithmeticException))
            errors_total.labels(error_type=type(e).__name__, component="cli").inc()
            logger.info("command_failed", command=f.__name__, error=e.message, details=e.details)
            click.echo(f"Error: {e.message}", err=True)
            sys.exit(EXIT_USAGE if usage else EXIT_FAILURE)

    return wrapper  # type: ignore[return-value]


def _override_setting(name: str, value: Any) -> None:
    """Apply a command-line override to the settings seen by this process and its workers."""
    previous = os.environ.get(name)
    os.environ[name] = str(value)
    get_settings.cache_clear()
    try:
        get_settings()
    except ValidationError as e:
        if previous is None:
            del os.environ[name]
        else:
            os.environ[name] = previous
        get_settings.cache_clear()
        raise click.BadParameter(str(e.errors()[0]["msg"]), param_hint=name.lower()) from e


def _parse_modulus(text: Optional[str]) -> Optional[GF2Poly]:
    return GF2Poly.parse(text) if text else None


format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.PLAIN.value,
    show_default=True,
    help="Output rendering",
)
modulus_option = click.option(
    "--modulus", default=None, help="Irreducible defining GF(2^n), as 0x13 or x^4+x+1"
)
beta_option = click.option(
    "--beta-exp", "beta_exponent", type=int, default=None, help="Use alpha^k as normal element"
)
precision_option = click.option(
    "--precision", type=float, default=None, help="Width of refined root brackets"
)


@click.group()
@click.version_option(__version__, prog_name="gleason-bijections")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Overrides LOG_LEVEL; logs go to stderr",
)
def cli(log_level: Optional[str]) -> None:
    """Real hyperbolic centers, Gleason factors mod 2, necklaces and unimodal cycles."""
    setup_logging(log_level)


@cli.command("enumerate")
@click.argument("set_name", type=click.Choice([s.value for s in SetName]))
@click.option("--n", "n", type=int, required=True, help="Length, period or degree")
@format_option
@handle_errors
def enumerate_command(set_name: str, n: int, output_format: str) -> None:
    """List one of the sets of the correspondence in canonical order."""
    name = SetName(set_name)
    fmt = OutputFormat(output_format)
    headers: List[str]
    rows: List[List[Any]]
    items: List[Any]

    if name == SetName.CUP:
        perms = enumerate_cup(n)
        headers = ["index", "permutation", "m"]
        rows = [[i, str(sigma), sigma.m] for i, sigma in enumerate(perms, start=1)]
        items = [str(sigma) for sigma in perms]
    elif name in (SetName.I_MINUS, SetName.I_TILDE_PLUS):
        polys = enumerate_irreducibles(PolynomialKind(name.value), n)
        headers = ["index", "polynomial", "hex"]
        rows = [[i, f.to_terms(), f.to_hex()] for i, f in enumerate(polys, start=1)]
        items = [f.to_terms() for f in polys]
    elif name == SetName.D_BAR:
        classes = enumerate_dbar(n)
        headers = ["index", "cycles", "class", "tag"]
        rows = [
            [i, str(entry), str(entry.inversion_class), entry.tag.value]
            for i, entry in enumerate(classes, start=1)
        ]
        items = [
            {
                "cycles": [[str(a) for a in cycle] for cycle in entry.cycles],
                "class": str(entry.inversion_class),
                "tag": entry.tag.value,
            }
            for entry in classes
        ]
    else:
        values = enumerate_set(name, n)
        headers = ["index", "value"]
        rows = [[i, str(x)] for i, x in enumerate(values, start=1)]
        items = [str(x) for x in values]

    emit(fmt, headers, rows, {"set": name.value, "n": n, "count": len(items), "items": items})


@cli.command("map")
@click.argument("map_name", type=click.Choice([m.value for m in MapName]))
@click.argument("value")
@click.option("--n", "n", type=int, default=None, help="Period for angles, degree for reutenauer")
@modulus_option
@beta_option
@format_option
@handle_errors
def map_command(
    map_name: str,
    value: str,
    n: Optional[int],
    modulus: Optional[str],
    beta_exponent: Optional[int],
    output_format: str,
) -> None:
    """Apply one map to one value."""
    options = MapOptions(n=n, modulus=_parse_modulus(modulus), beta_exponent=beta_exponent)
    result = apply_map(MapName(map_name), value, options)
    fmt = OutputFormat(output_format)
    if fmt == OutputFormat.PLAIN:
        click.echo(result)
    else:
        emit(
            fmt,
            ["map", "input", "output"],
            [[map_name, value, result]],
            {"map": map_name, "input": value, "output": result},
        )


@cli.command("table")
@click.option("--n", "n", type=int, required=True, help="Period")
@click.option(
    "--order",
    type=click.Choice([o.value for o in TableOrder]),
    default=TableOrder.ASCENDING_C.value,
    show_default=True,
)
@modulus_option
@beta_option
@precision_option
@format_option
@handle_errors
def table_command(
    n: int,
    order: str,
    modulus: Optional[str],
    beta_exponent: Optional[int],
    precision: Optional[float],
    output_format: str,
) -> None:
    """One row per real hyperbolic center of period n."""
    if precision is not None:
        _override_setting("ROOT_PRECISION", precision)
    rows = TableService().build_table(
        n, TableOrder(order), modulus=_parse_modulus(modulus), beta_exponent=beta_exponent
    )
    fmt = OutputFormat(output_format)
    if fmt == OutputFormat.JSON:
        echo_json([row.model_dump() for row in rows])
    elif fmt == OutputFormat.CSV:
        fields = list(CorrespondenceRow.model_fields)
        echo_csv(fields, [[getattr(row, field) for field in fields] for row in rows])
    else:
        echo_table(
            TABLE_COLUMNS,
            [[row.c, row.m2, row.d1, row.p1, row.n1, row.n2, row.n3] for row in rows],
        )


@cli.command("gleason")
@click.option("--n", "n", type=int, required=True, help="Period")
@click.option(
    "--integer/--no-integer",
    "include_integer",
    default=True,
    show_default=True,
    help="Also compute G_n over the integers",
)
@click.option("--roots/--no-roots", "count_roots", default=False, help="Isolate the real roots")
@format_option
@handle_errors
def gleason_command(n: int, include_integer: bool, count_roots: bool, output_format: str) -> None:
    """Degree, coefficients and mod 2 factorization of G_n."""
    summary = TableService().summarize(n, include_integer=include_integer, count_roots=count_roots)
    data = summary.model_dump()
    fmt = OutputFormat(output_format)
    if fmt == OutputFormat.JSON:
        echo_json(data)
        return
    fields = [field for field, value in data.items() if value is not None]
    if fmt == OutputFormat.CSV:
        echo_csv(fields, [[data[field] for field in fields]])
    else:
        echo_table(["field", "value"], [[field, data[field]] for field in fields])


def _count_report(n: int) -> CountReport:
    report = appendix_counts(n)
    if n < 2:
        return report
    sums = subset_sum_counts(n)
    return report.model_copy(
        update={
            "s0": sums.s0,
            "s1": sums.s1,
            "s1_by_k": sums.s1_by_k,
            "cup_by_k": sums.cup_by_k,
            "t_minus": sums.t_minus,
            "verdicts": {**report.verdicts, **sums.verdicts},
        }
    )


@cli.command("count")
@click.option("--n", "n", type=int, default=None, help="Single length")
@click.option("--max-n", "max_n", type=int, default=None, help="All lengths 1..max-n")
@format_option
@handle_errors
def count_command(n: Optional[int], max_n: Optional[int], output_format: str) -> None:
    """gamma_n with the necklace and subset-sum counts that must agree with it."""
    if (n is None) == (max_n is None):
        raise click.UsageError("Give exactly one of --n and --max-n")
    periods = [n] if n is not None else list(range(1, max_n + 1))  # type: ignore[operator]
    reports = [_count_report(k) for k in periods]

    headers = [
        "n", "gamma", "p", "c", "xi", "epsilon", "delta", "s0", "s1", "t_minus", "consistent"
    ]
    rows = [[getattr(r, h) for h in headers] for r in reports]
    emit(OutputFormat(output_format), headers, rows, [r.model_dump() for r in reports])
    if not all(r.consistent for r in reports):
        sys.exit(EXIT_FAILURE)


def _parse_suites(
    ctx: click.Context, param: click.Parameter, value: Optional[str]
) -> List[Suite]:
    if not value:
        return list(Suite)
    try:
        return [Suite(part.strip()) for part in value.split(",") if part.strip()]
    except ValueError as e:
        raise click.BadParameter(
            f"choose from {', '.join(s.value for s in Suite)}", ctx=ctx, param=param
        ) from e


@cli.command("verify")
@click.option("--max-n", "max_n", type=int, default=None, help="Largest period (default: budgets)")
@click.option(
    "--suites",
    callback=_parse_suites,
    default=None,
    help="Comma separated subset of bijections,weiss_rogers,gf2,gleason,counting,dynamics",
)
@click.option("--jobs", type=int, default=None, help="Worker processes")
@click.option(
    "--metrics-file",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write Prometheus metrics here after the run",
)
@precision_option
@format_option
@handle_errors
def verify_command(
    max_n: Optional[int],
    suites: List[Suite],
    jobs: Optional[int],
    metrics_file: Optional[Path],
    precision: Optional[float],
    output_format: str,
) -> None:
    """Run the verification suites; exit 1 if any check does not pass."""
    if precision is not None:
        _override_setting("ROOT_PRECISION", precision)
    settings = get_settings()
    if max_n is None:
        max_n = max(settings.MAX_N_COMBINATORIAL, settings.MAX_N_COUNTING)
    report = asyncio.run(VerificationService(jobs=jobs).run(max_n, suites))

    headers = ["suite", "n", "check", "status", "detail"]
    rows = [[r.suite.value, r.n, r.check, r.status.value, r.detail] for r in report.results]
    fmt = OutputFormat(output_format)
    emit(fmt, headers, rows, report.model_dump(mode="json"))
    if fmt == OutputFormat.PLAIN:
        click.echo(" ".join(f"{status}={count}" for status, count in report.summary.items()))

    if metrics_file is not None:
        if settings.ENABLE_METRICS:
            write_to_textfile(str(metrics_file), REGISTRY)
        else:
            logger.warning("metrics_disabled", file=str(metrics_file))
    if not report.passed:
        sys.exit(EXIT_FAILURE)


if __name__ == "__main__":
    cli()
