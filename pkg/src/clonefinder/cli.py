"""Command-line entry point: detect, metrics, serve, bench."""
from __future__ import annotations

import glob as globmod
import json
import sys
import time
from pathlib import Path

import click

from . import bench as benchmod
from . import kernels, metrics, report, search, suffixtree
from .config import ConfigError, DetectorConfig, apply_overrides, load_config
from .groups import build_groups
from .units import build_corpus, read_files


def _collect_files(inputs: tuple[str, ...], config: DetectorConfig) -> list[str]:
    paths: list[str] = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            paths.extend(str(f) for f in sorted(p.rglob("*")) if f.is_file())
        elif p.is_file():
            paths.append(str(p))
        else:
            paths.extend(sorted(globmod.glob(item, recursive=True)))
    include = config.pipeline.include_globs
    exclude = config.pipeline.exclude_globs
    out = []
    for path in paths:
        if include and not any(Path(path).match(g) for g in include):
            continue
        if exclude and any(Path(path).match(g) for g in exclude):
            continue
        out.append(path)
    return sorted(dict.fromkeys(out))


def _load_effective_config(config_path: str | None, **overrides) -> DetectorConfig:
    config = load_config(config_path) if config_path else DetectorConfig()
    return apply_overrides(config, **overrides)


@click.group()
def main():
    """Token-based detector for exact and inconsistent code clones."""


_config_option = click.option("--config", "config_path", type=click.Path(exists=True), default=None,
                              help="Plain-text key=value configuration file.")


@main.command()
@_config_option
@click.argument("inputs", nargs=-1, required=False)
@click.option("--output", "-o", type=click.Path(), default="clone-report.json", show_default=True)
@click.option("--language", type=str, default=None)
@click.option("--min-clone-length", type=int, default=None)
@click.option("--max-edit-distance", type=int, default=None)
@click.option("--max-inconsistency-ratio", type=float, default=None)
@click.option("--head-equality", type=int, default=None)
@click.option("--boundary-mode", type=str, default=None)
def detect(config_path, inputs, output, **overrides):
    """Run the detection pipeline over INPUTS (files, dirs or globs)."""
    try:
        config = _load_effective_config(config_path, **overrides)
    except ConfigError as exc:
        raise click.ClickException(str(exc)) from exc

    files = _collect_files(inputs, config)
    timing: dict[str, float] = {}

    t0 = time.perf_counter()
    contents, read_errors = read_files(files)
    seq = build_corpus(contents, config.pipeline)
    seq.errors.extend(read_errors)
    timing["pipeline"] = time.perf_counter() - t0
    loc = sum(text.count("\n") + 1 for _, text in contents)

    t0 = time.perf_counter()
    tree = suffixtree.build(seq.symbols)
    timing["suffix_tree"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    candidates = search.detect(seq, tree, config.search)
    timing["search"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    groups = build_groups(candidates, seq, config.search)
    timing["grouping"] = time.perf_counter() - t0

    doc = report.build_report(seq, groups, config, file_count=len(contents), loc=loc,
                              timing={k: round(v, 3) for k, v in timing.items()})
    report.write_report(doc, output)

    for error in seq.errors:
        click.echo(f"warning: {error}", err=True)
    n_inconsistent = sum(1 for g in groups if g.kind == "inconsistent")
    click.echo(
        f"{len(contents)} files, {doc['corpus']['units']} units, "
        f"{len(groups)} clone groups ({n_inconsistent} inconsistent) -> {output}"
    )


@main.command("metrics")
@click.option("--report", "report_path", type=click.Path(exists=True), required=True)
@click.option("--store", "store_path", type=click.Path(), required=True)
@click.option("--output", "-o", type=click.Path(), default=None,
              help="Write the structured study report to this file.")
@click.option("--exact-sampling", type=float, default=1.0, show_default=True,
              help="Fraction of exact groups that was rated (extrapolated).")
def metrics_cmd(report_path, store_path, output, exact_sampling):
    """Compute study metrics from a detection report and assessment store."""
    doc = report.load_report(report_path)
    infos = metrics.group_infos_from_report(doc)
    store = metrics.AssessmentStore(store_path)
    study = metrics.compute_report(infos, store.latest(), exact_sampling=exact_sampling)
    payload = study.to_dict()
    if output:
        Path(output).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                                encoding="utf-8")

    def fmt(value, digits=2):
        return "---" if value is None else f"{value:.{digits}f}"

    rows = [
        ("Precision exact clone groups", fmt(study.precision_exact)),
        ("Precision inconsistent clone groups", fmt(study.precision_inconsistent)),
        ("Clone groups |C|", str(study.clone_groups)),
        ("Inconsistent clone groups |IC|", str(study.inconsistent_groups)),
        ("Unintentionally inconsistent clone groups |UIC|", str(study.unintentional_groups)),
        ("Faulty clone groups |F|", str(study.faulty_groups)),
        ("RQ 1 |IC|/|C|", fmt(study.ratio_ic)),
        ("RQ 2 |UIC|/|IC|", fmt(study.ratio_uic)),
        ("RQ 3 |F|/|IC|", fmt(study.ratio_f)),
        ("Faulty in UIC |F|/|UIC|", fmt(study.ratio_f_uic)),
        ("Inconsistent logical lines", str(study.inconsistent_logical_lines)),
        ("Fault density in kLOC^-1", fmt(study.fault_density_per_kloc, 1)),
    ]
    width = max(len(label) for label, _ in rows)
    for label, value in rows:
        click.echo(f"{label:<{width}}  {value}")


@main.command()
@click.option("--report", "report_path", type=click.Path(exists=True), required=True)
@click.option("--store", "store_path", type=click.Path(), required=True)
@click.option("--bind", type=str, default="127.0.0.1:8734", show_default=True)
@click.option("--source-root", type=click.Path(), default=".", show_default=True)
def serve(report_path, store_path, bind, source_root):
    """Serve clone groups and metrics to the review console."""
    from . import service

    click.echo(f"serving {report_path} on http://{bind}")
    service.serve(report_path, store_path, bind=bind, source_root=source_root)


@main.command()
@click.option("--sizes", type=str, default="25000,50000,100000", show_default=True,
              help="Comma-separated corpus sizes in units.")
@click.option("--backend", type=click.Choice(["auto", "native", "python", "both"]),
              default="auto", show_default=True)
@click.option("--clone-rate", type=float, default=0.1, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", "-o", type=click.Path(), default=None)
def bench(sizes, backend, clone_rate, seed, output):
    """Time detection on synthetic corpora of increasing size."""
    size_list = [int(s) for s in sizes.split(",") if s]
    backends = ["native", "python"] if backend == "both" else [backend]
    results = []
    for name in backends:
        try:
            result = benchmod.run_series(size_list, backend_name=name,
                                         clone_rate=clone_rate, seed=seed)
        except RuntimeError as exc:
            click.echo(f"skipping backend {name}: {exc}", err=True)
            continue
        results.append(result.to_dict())
        click.echo(f"backend: {result.backend}")
        for point in result.points:
            click.echo(f"  {point.units:>8} units  {point.seconds:8.2f}s  {point.groups} groups")
    if output:
        Path(output).write_text(json.dumps(results, indent=2) + "\n", encoding="utf-8")


@main.command()
def backends():
    """Show available kernel backends."""
    click.echo(f"active: {kernels.BACKEND_NAME}")
    click.echo(f"available: {', '.join(kernels.available_backends())}")


if __name__ == "__main__":
    main()
