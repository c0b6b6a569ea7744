"""
Command-line front end.

    agq construct --curve a --q 2 --m 2 --format json
    agq verify    --curve a --q 4 --m 0..17
    agq distance  --curve a --q 2 --m 2
    agq quantum   --curve b --q 8 --m 13..20 --no-certify
    agq scan      --curve a --q 2 --m 0..7
    agq table

Exit codes: 0 success, 1 a verification failed, 2 usage or parameter error.
Results go to stdout (or --output); logs go to stderr.
"""

import contextlib
import functools
import inspect
import logging
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

import click

from agq import __version__
from agq.codes.ag import build, euclidean_threshold, scan_hermitian, verify_claims
from agq.codes.distance import certify_distance
from agq.config import (
    LOG_LEVELS,
    Command,
    OutputFormat,
    RunConfig,
    Settings,
    load_settings,
    parse_m_range,
    resolve_e,
)
from agq.curves import CurveKind, new_curve
from agq.quantum import NotHermitianSelfOrthogonalError, derive_quantum
from agq.reporting import (
    code_row,
    distance_row,
    quantum_row,
    reproduction_table,
    scan_row,
    verification_row,
)
from agq.runner import configure_logging
from agq.serialize import document, format_matrix, render

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1


@contextlib.contextmanager
def _usage_errors() -> Iterator[None]:
    """Parameter errors become click usage errors (exit 2, message on stderr)."""
    try:
        yield
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _code_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option("--curve", type=click.Choice([k.value for k in CurveKind]), required=True),
        click.option("--q", "q", type=int, default=None, help="Subfield size, a power of two."),
        click.option("--e", "e", type=int, default=None, help="Alternative to --q: q = 2^e."),
        click.option("--m", "m", required=True, help="Divisor degree or inclusive range 'a..b'."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _search_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option("--seed", type=int, default=None, help="Seed for random search (AGQ_SEED wins)."),
        click.option("--budget", type=int, default=None, help="Cap on enumerated words or supports."),
        click.option("--trials", type=int, default=None, help="Random information sets for the upper bound."),
        click.option("--isd-level", type=int, default=None, help="Highest Brouwer-Zimmermann level."),
        click.option("--workers", type=int, default=None, help="Worker processes for exhaustive search."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _output_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    fn = click.option(
        "--output", type=click.Path(dir_okay=False), default=None, help="Write here instead of stdout."
    )(fn)
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice([f.value for f in OutputFormat]),
        default=OutputFormat.JSON.value,
        show_default=True,
    )(fn)
    return fn


def _make_config(command: Command, settings: Settings, **flags: Any) -> RunConfig:
    seed = flags.get("seed")
    if settings.seed_from_env or seed is None:
        if seed is not None and seed != settings.seed:
            log.info("AGQ_SEED=%d overrides --seed %d", settings.seed, seed)
        seed = settings.seed

    def pick(name: str) -> Any:
        value = flags.get(name)
        return getattr(settings, name) if value is None else value

    curve = flags.get("curve")
    e = None
    ms = None
    if command is not Command.TABLE:
        e = resolve_e(flags.get("q"), flags.get("e"))
        ms = parse_m_range(flags["m"])

    config = RunConfig(
        command=command,
        curve=CurveKind(curve) if curve is not None else None,
        e=e,
        ms=ms,
        seed=seed,
        budget=pick("budget"),
        trials=pick("trials"),
        isd_level=pick("isd_level"),
        workers=pick("workers"),
        format=OutputFormat(flags.get("fmt", OutputFormat.JSON.value)),
        output=flags.get("output"),
        stabilizer=bool(flags.get("stabilizer", False)),
        certify=bool(flags.get("certify", True)),
    )
    config.validate()
    return config


def _emit(config: RunConfig, text: str) -> None:
    if config.output is None:
        click.echo(text, nl=False)
        return
    Path(config.output).write_text(text, encoding="utf-8")
    log.info("Wrote %s", config.output)


def _command(command: Command) -> Callable[[Callable[..., int]], Callable[..., None]]:
    """Resolve flags into a RunConfig, run the body and exit with its code."""

    def decorate(body: Callable[..., int]) -> Callable[..., None]:
        accepted = [name for name in inspect.signature(body).parameters if name != "config"]

        @click.pass_obj
        @functools.wraps(body)
        def wrapper(settings: Settings, **flags: Any) -> None:
            extras = {name: flags.pop(name) for name in accepted if name in flags}
            with _usage_errors():
                config = _make_config(command, settings, **flags)
                code = body(config, **extras)
            if code != EXIT_OK:
                raise click.exceptions.Exit(code)

        return wrapper

    return decorate


@click.group()
@click.version_option(__version__, prog_name="agq")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Logging level (default from AGQ_LOG_LEVEL).",
)
@click.pass_context
def main(ctx: click.Context, log_level: str | None) -> None:
    """Hermitian self-orthogonal AG codes and the stabilizer codes built from them."""
    with _usage_errors():
        settings = load_settings()
        configure_logging(log_level or settings.log_level)
    ctx.obj = settings


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------
@main.command("construct")
@_code_options
@_output_options
@_command(Command.CONSTRUCT)
def cmd_construct(config: RunConfig) -> int:
    """Generator matrix, dimension and designed distances of C_m."""
    curve = new_curve(config.curve, config.e)
    codes = [build(curve, m) for m in config.ms]
    doc = document(
        "construct",
        [code_row(ag) for ag in codes],
        field=curve.field,
        parameters={"curve": curve.kind.value, "q": curve.q, "n": curve.n, "genus": curve.genus},
    )
    matrices = [(f"generator of C_{ag.m}", format_matrix(curve.field, ag.code.gen)) for ag in codes]
    _emit(config, render(doc, config.format.value, matrices))
    return EXIT_OK


@main.command("verify")
@_code_options
@_output_options
@_command(Command.VERIFY)
def cmd_verify(config: RunConfig) -> int:
    """Duality and self-orthogonality checks per m; exit 1 if a guaranteed claim fails."""
    curve = new_curve(config.curve, config.e)
    rows = verify_claims(curve, config.ms)
    doc = document(
        "verify",
        [verification_row(curve, row) for row in rows],
        field=curve.field,
        parameters={
            "curve": curve.kind.value,
            "q": curve.q,
            "euclidean_threshold": euclidean_threshold(curve),
            "hermitian_threshold": curve.hermitian_threshold,
        },
    )
    _emit(config, render(doc, config.format.value))
    return EXIT_OK if all(row.passed for row in rows) else EXIT_VERIFICATION_FAILED


@main.command("distance")
@_code_options
@_search_options
@_output_options
@_command(Command.DISTANCE)
def cmd_distance(config: RunConfig) -> int:
    """Certified distance bounds of C_m and of its Euclidean dual."""
    curve = new_curve(config.curve, config.e)
    search = {
        "budget": config.budget,
        "trials": config.trials,
        "w_max": config.isd_level,
        "seed": config.seed,
        "workers": config.workers,
    }
    rows = []
    for m in config.ms:
        ag = build(curve, m)
        dual = ag.code.dual()
        rows.append(distance_row(ag, f"C_{m}", ag.k, certify_distance(ag.code, **search)))
        rows.append(distance_row(ag, f"C_{m}^perp", dual.k, certify_distance(dual, **search)))
    doc = document(
        "distance",
        rows,
        field=curve.field,
        parameters={"curve": curve.kind.value, "q": curve.q, "seed": config.seed, "budget": config.budget},
    )
    _emit(config, render(doc, config.format.value))
    return EXIT_OK


@main.command("quantum")
@_code_options
@_search_options
@_output_options
@click.option("--stabilizer", is_flag=True, default=False, help="Include the symplectic check matrix.")
@click.option("--certify/--no-certify", default=True, show_default=True, help="Compute the dual distance.")
@_command(Command.QUANTUM)
def cmd_quantum(config: RunConfig) -> int:
    """Stabilizer code parameters for each m; non-self-orthogonal sources are reported per row."""
    curve = new_curve(config.curve, config.e)
    rows = []
    matrices = []
    for m in config.ms:
        ag = build(curve, m)
        try:
            record = derive_quantum(
                ag,
                certify=config.certify,
                stabilizer=config.stabilizer,
                budget=config.budget,
                trials=config.trials,
                w_max=config.isd_level,
                seed=config.seed,
                workers=config.workers,
            )
        except NotHermitianSelfOrthogonalError as exc:
            log.warning("%s", exc)
            rows.append(
                {
                    "curve": curve.kind.value,
                    "q": curve.q,
                    "m": m,
                    "n": curve.n,
                    "note": "not Hermitian self-orthogonal",
                }
            )
            continue
        rows.append(quantum_row(record))
        if record.stabilizer is not None:
            matrices.append((f"stabilizer of C_{m}", format_matrix(curve.field, record.stabilizer)))
    doc = document(
        "quantum",
        rows,
        field=curve.field,
        parameters={"curve": curve.kind.value, "q": curve.q, "seed": config.seed, "certify": config.certify},
    )
    _emit(config, render(doc, config.format.value, matrices))
    return EXIT_OK


@main.command("scan")
@_code_options
@_output_options
@_command(Command.SCAN)
def cmd_scan(config: RunConfig) -> int:
    """Direct Hermitian self-orthogonality verdicts; exit 1 if one below the bound fails."""
    curve = new_curve(config.curve, config.e)
    verdicts = [(m, ok) for m, ok in scan_hermitian(curve, config.ms.stop - 1) if m in config.ms]
    rows = [scan_row(curve, m, ok) for m, ok in verdicts]
    doc = document(
        "scan",
        rows,
        field=curve.field,
        parameters={
            "curve": curve.kind.value,
            "q": curve.q,
            "hermitian_threshold": curve.hermitian_threshold,
        },
    )
    _emit(config, render(doc, config.format.value))
    failed = any(row["guaranteed"] and not row["hermitian"] for row in rows)
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


@main.command("table")
@_search_options
@_output_options
@click.option("--certify-max-q", type=int, default=4, show_default=True, help="Certify distances up to this q.")
@_command(Command.TABLE)
def cmd_table(config: RunConfig, certify_max_q: int = 4) -> int:
    """Reproduce the worked examples; exit 1 if a row disagrees with its expected status."""
    rows = reproduction_table(
        certify_max_q=certify_max_q,
        budget=config.budget,
        trials=config.trials,
        w_max=config.isd_level,
        seed=config.seed,
        workers=config.workers,
    )
    doc = document("table", [row.as_dict() for row in rows], parameters={"certify_max_q": certify_max_q})
    _emit(config, render(doc, config.format.value))
    return EXIT_OK if all(row.ok for row in rows) else EXIT_VERIFICATION_FAILED


if __name__ == "__main__":  # pragma: no cover
    main()
