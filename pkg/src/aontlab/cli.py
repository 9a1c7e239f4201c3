"""Command-line surface: verify, analyze, demo, and search.

Exit codes: 0 aont (or success), 1 weak-aont-only, 2 neither, 3 data or
validation error, 4 usage error. Progress goes to stderr, results to stdout.
"""

from __future__ import annotations

import json
import sys

import click

from .arrays import AONT, NEITHER, WEAK_AONT_ONLY, AontArray, classify, load_array_csv
from .constructions import (
    BUILTIN_NAMES,
    DEFAULT_SEARCH_CAP,
    builtin,
    search_linear,
    worker_count,
)
from .demos import DEMO_NUMBERS, format_demo, run_demo
from .errors import AontLabError
from .models import load_model_json
from .report import (
    AUTO,
    build_report,
    report_to_csv,
    report_to_json_dict,
    report_to_table,
)

# keep flag misuse distinguishable from the "neither" verdict (exit code 2)
click.exceptions.UsageError.exit_code = 4

_VERDICT_EXIT = {AONT: 0, WEAK_AONT_ONLY: 1, NEITHER: 2}


def _load_array(ctx: click.Context, array_path: str | None, builtin_name: str | None) -> tuple[AontArray, str]:
    if (array_path is None) == (builtin_name is None):
        raise click.UsageError("supply exactly one of --array FILE or --builtin NAME")
    try:
        if builtin_name is not None:
            return builtin(builtin_name), builtin_name
        return load_array_csv(array_path), array_path
    except (OSError, AontLabError) as exc:
        click.echo(f"error: cannot load array: {exc}", err=True)
        ctx.exit(3)


def _parse_pair_spec(spec: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    try:
        x_part, y_part = spec.split(":", 1)
        x = tuple(int(c) for c in x_part.split(",") if c)
        y = tuple(int(c) for c in y_part.split(",") if c) if y_part else ()
        return x, y
    except ValueError:
        raise click.UsageError(f"bad --pair spec {spec!r}; expected e.g. '1:4' or '1,2:5'") from None


@click.group()
@click.version_option()
def cli() -> None:
    """Verify transform arrays and analyze their conditional entropies."""


@cli.command()
@click.option("--array", "array_path", type=click.Path(), help="CSV array file")
@click.option("--builtin", "builtin_name", type=click.Choice(BUILTIN_NAMES), help="built-in array")
@click.option("--ti", required=True, type=int, help="protected input count t_i")
@click.option("--to", required=True, type=int, help="missing output count t_o")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def verify(ctx, array_path, builtin_name, ti, to, fmt) -> None:
    """Classify an array as aont, weak-aont-only, or neither."""
    array, label = _load_array(ctx, array_path, builtin_name)
    try:
        verdict = classify(array, ti, to)
    except AontLabError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(3)
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "array": label,
                    "t_i": ti,
                    "t_o": to,
                    "verdict": verdict.verdict,
                    "witness": list(verdict.witness) if verdict.witness else None,
                }
            )
        )
    else:
        line = f"{label}: {verdict.verdict} (t_i={ti}, t_o={to})"
        if verdict.witness:
            line += f", first failing columns {verdict.witness}"
        click.echo(line)
    ctx.exit(_VERDICT_EXIT[verdict.verdict])


@cli.command()
@click.option("--array", "array_path", type=click.Path(), help="CSV array file")
@click.option("--builtin", "builtin_name", type=click.Choice(BUILTIN_NAMES), help="built-in array")
@click.option("--model", "model_path", required=True, type=click.Path(), help="JSON model file")
@click.option("--ti", required=True, type=int)
@click.option("--to", required=True, type=int)
@click.option(
    "--bounds",
    default=AUTO,
    show_default=True,
    help="bound family tag or 'auto' (symmetric, nonuniform-exact, block-exact, "
    "asymmetric, asymmetric-hy, weak, weak-hy)",
)
@click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table")
@click.option("--tolerance", type=float, default=1e-6, show_default=True)
@click.option(
    "--pair",
    "pair_specs",
    multiple=True,
    help="restrict to given pairs, e.g. --pair 1:4 --pair 2:4 (X cols : Y cols)",
)
@click.pass_context
def analyze(ctx, array_path, builtin_name, model_path, ti, to, bounds, fmt, tolerance, pair_specs) -> None:
    """Full per-pair entropy and bound report for an array under a model."""
    array, label = _load_array(ctx, array_path, builtin_name)
    try:
        model = load_model_json(model_path)
    except OSError as exc:
        click.echo(f"error: cannot read model: {exc}", err=True)
        ctx.exit(3)
    except (AontLabError, KeyError, ValueError, json.JSONDecodeError) as exc:
        click.echo(f"error: malformed model file: {exc}", err=True)
        ctx.exit(3)
    pairs = None
    if pair_specs:
        from .entropy import SubsetPair

        pairs = [SubsetPair(*_parse_pair_spec(spec)) for spec in pair_specs]
    try:
        report = build_report(
            array,
            model,
            ti,
            to,
            bounds_tag=bounds,
            tolerance=tolerance,
            array_label=label,
            model_label=model_path,
            pairs=pairs,
        )
    except AontLabError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(3)
    if fmt == "json":
        click.echo(json.dumps(report_to_json_dict(report), indent=2))
    elif fmt == "csv":
        click.echo(report_to_csv(report), nl=False)
    else:
        click.echo(report_to_table(report), nl=False)


@cli.command()
@click.argument("number", type=int)
@click.option("--tolerance", type=float, default=1e-6, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def demo(ctx, number, tolerance, fmt) -> None:
    """Reproduce one of the reference scenarios (1-4) and check every value."""
    if number not in DEMO_NUMBERS:
        raise click.UsageError(f"demo must be one of {DEMO_NUMBERS}")
    report, checks, passed = run_demo(number, tolerance)
    if fmt == "json":
        doc = report_to_json_dict(report)
        doc["checks"] = [
            {"label": c.label, "expected": c.expected, "computed": c.computed, "ok": c.ok}
            for c in checks
        ]
        doc["passed"] = passed
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(format_demo(number, checks, passed, tolerance), nl=False)
    ctx.exit(0 if passed else 1)


@cli.command()
@click.option("--s", "s", required=True, type=int, help="input block length")
@click.option("--v", "v", required=True, type=int, help="alphabet size (prime)")
@click.option("--ti", required=True, type=int)
@click.option("--to", required=True, type=int)
@click.option("--cap", type=int, default=DEFAULT_SEARCH_CAP, show_default=True,
              help="max candidate matrices (v^(s*s))")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def search(ctx, s, v, ti, to, cap, fmt) -> None:
    """Exhaustively search invertible matrices for full (t_i, t_o) transforms."""

    def progress(done: int, total: int) -> None:
        click.echo(f"scanned {done}/{total} candidates", err=True)

    try:
        result = search_linear(s, v, ti, to, cap=cap, workers=worker_count(), progress=progress)
    except AontLabError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(3)
    if fmt == "json":
        click.echo(json.dumps(result.to_json_dict()))
    else:
        click.echo(f"{result.examined} examined, {len(result.found)} found")
        for m in result.found:
            click.echo(json.dumps(m.to_json()))


def main(argv: list[str] | None = None) -> None:
    try:
        cli.main(args=argv, prog_name="aontlab")
    except AontLabError as exc:  # pragma: no cover - commands catch their own
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)


if __name__ == "__main__":
    main()
