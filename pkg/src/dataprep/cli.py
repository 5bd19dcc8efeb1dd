"""Batch command-line interface.

Exit codes: 0 success, 2 constraint violation, 3 parse error, 1 any other
engine failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import __version__
from .cleaning import ConstraintSet
from .errors import (
    ConstraintViolationAfterRepair,
    DataPrepError,
    DuplicateHeader,
    EmptyInput,
    MalformedCsv,
    StepExecutionError,
)
from .fixtures import air_quality_like_csv, house_prices_like_csv
from .pipeline import (
    BuildOptions,
    CleaningPlan,
    build_plan,
    execute_plan,
    export_csv,
    export_report,
    fingerprint_bytes,
)
from .profiling import (
    builtin_plot_meta_rows,
    profile_column,
    profile_pair,
    recommend_plot,
    train_plot_svm,
)
from .tabular import ParseOptions, parse_csv

EXIT_CONSTRAINT = 2
EXIT_PARSE = 3

_PARSE_ERRORS = (MalformedCsv, EmptyInput, DuplicateHeader)


def _fail(exc: Exception) -> "int":
    click.echo(f"error: {exc}", err=True)
    if isinstance(exc, StepExecutionError):
        exc = exc.cause
    if isinstance(exc, _PARSE_ERRORS):
        sys.exit(EXIT_PARSE)
    if isinstance(exc, ConstraintViolationAfterRepair):
        for violation in exc.violations[:10]:
            click.echo(f"  violation: {violation.message}", err=True)
        sys.exit(EXIT_CONSTRAINT)
    sys.exit(1)


def _load(path: str, delimiter: str, header: bool):
    options = ParseOptions(delimiter=delimiter, header=header)
    data = Path(path).read_bytes()
    dataset, inference = parse_csv(data, options, name=Path(path).stem)
    return data, options, dataset, inference


@click.group()
@click.version_option(version=__version__, prog_name="dataprep")
def main():
    """Data-preparation engine: profile, plan, run, export."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--delimiter", default=",", show_default=True)
@click.option("--no-header", is_flag=True, help="File has no header row.")
@click.option("--json", "json_out", type=click.Path(dir_okay=False), help="Write profiles as JSON.")
def profile(file, delimiter, no_header, json_out):
    """Profile every column of a CSV file."""
    try:
        _, _, dataset, inference = _load(file, delimiter, not no_header)
        profiles = []
        for col in dataset.columns:
            if col.missing_count == len(col.cells):
                continue
            profiles.append(profile_column(col))
    except Exception as exc:  # noqa: BLE001 - single exit-code funnel
        _fail(exc)

    click.echo(f"{dataset.name}: {dataset.row_count} rows x {dataset.column_count} columns")
    header = f"{'column':<22}{'type':<12}{'shape':<14}{'missing':>8}{'distinct':>9}"
    click.echo(header)
    click.echo("-" * len(header))
    for p in profiles:
        click.echo(
            f"{p.name:<22}{p.vtype.value:<12}{p.shape.value:<14}"
            f"{p.missing_count:>8}{p.distinct_count:>9}"
        )
    if json_out:
        payload = {
            "type_inference": inference.to_dict(),
            "profiles": [p.to_dict() for p in profiles],
        }
        Path(json_out).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        click.echo(f"wrote {json_out}")


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--constraints", "constraints_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--target", default=None, help="Target column for ranking and scaling rules.")
@click.option(
    "--analysis-type",
    type=click.Choice(["any", "classification", "regression"]),
    default="any",
    show_default=True,
)
@click.option("--outlier-axes", default=None, help="Two numeric columns, comma separated.")
@click.option("--use-model-recommender", is_flag=True, help="Recommend steps with the trained model instead of rules.")
@click.option("--delimiter", default=",", show_default=True)
@click.option("--no-header", is_flag=True)
@click.option("-o", "--output", default="plan.json", show_default=True, type=click.Path(dir_okay=False))
def plan(file, constraints_file, seed, target, analysis_type, outlier_axes, use_model_recommender, delimiter, no_header, output):
    """Build the recommended cleaning plan for a CSV file."""
    try:
        data, options, dataset, _ = _load(file, delimiter, not no_header)
        constraints = ConstraintSet()
        if constraints_file:
            doc = json.loads(Path(constraints_file).read_text(encoding="utf-8"))
            constraints = ConstraintSet.from_dict(doc)
        axes = tuple(outlier_axes.split(",")) if outlier_axes else None
        build_options = BuildOptions(
            seed=seed,
            target=target,
            analysis_type=analysis_type,
            outlier_axes=axes,
            use_model_recommender=use_model_recommender,
        )
        built = build_plan(
            dataset,
            constraints,
            build_options,
            fingerprint=fingerprint_bytes(data),
            parse_options=options,
        )
        built.save(output)
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    click.echo(f"wrote {output} ({len(built.steps)} steps, fingerprint {built.fingerprint[:12]}...)")


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--plan", "plan_file", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", default="cleaned.csv", show_default=True, type=click.Path(dir_okay=False))
@click.option("--report", "report_file", default=None, type=click.Path(dir_okay=False))
def run(file, plan_file, output, report_file):
    """Execute a plan against its fingerprinted input file."""
    try:
        cleaning_plan = CleaningPlan.load(plan_file)
        data = Path(file).read_bytes()
        dataset, inference = parse_csv(
            data, cleaning_plan.parse_options, name=Path(file).stem
        )
        cleaned, run_report = execute_plan(
            dataset,
            cleaning_plan,
            input_fingerprint=fingerprint_bytes(data),
            type_inference=inference,
        )
        export_csv(cleaned, output)
        if report_file:
            export_report(run_report, report_file)
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    click.echo(
        f"wrote {output}: {run_report.rows_before} -> {run_report.rows_after} rows, "
        f"{run_report.columns_after} columns"
    )
    if report_file:
        click.echo(f"wrote {report_file}")


@main.command("recommend-plot")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--x", "x_col", required=True)
@click.option("--y", "y_col", default=None)
@click.option("--delimiter", default=",", show_default=True)
@click.option("--no-header", is_flag=True)
def recommend_plot_cmd(file, x_col, y_col, delimiter, no_header):
    """Recommend a plot type for one or two columns."""
    try:
        _, _, dataset, _ = _load(file, delimiter, not no_header)
        p1 = profile_column(dataset.column(x_col))
        if y_col is None:
            rec = recommend_plot(p1)
        else:
            p2 = profile_column(dataset.column(y_col))
            pair = profile_pair(dataset.column(x_col), dataset.column(y_col))
            model = train_plot_svm(builtin_plot_meta_rows())
            rec = recommend_plot(p1, p2, pair, model=model)
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    click.echo(json.dumps({"x": x_col, "y": y_col, **rec.to_dict()}, indent=2))


@main.command()
@click.option("--out", "out_dir", default=".", show_default=True, type=click.Path(file_okay=False))
@click.option("--seed", default=0, show_default=True, type=int)
def fixtures(out_dir, seed):
    """Write the bundled synthetic fixture datasets."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    house = out / "house_prices_like.csv"
    air = out / "air_quality_like.csv"
    house.write_bytes(house_prices_like_csv(seed))
    air.write_bytes(air_quality_like_csv(seed))
    click.echo(f"wrote {house}")
    click.echo(f"wrote {air}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8400, show_default=True, type=int)
def serve(host, port):
    """Start the interactive-studio session service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
