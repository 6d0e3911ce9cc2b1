"""Command-line front end.

Subcommands: classify, count, census, prevalence, figures.
Exit codes: 0 success, 1 usage or parse error, 2 census-formula mismatch.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import census as census_mod
from . import figures as figures_mod
from .enumeration import DEFAULT_MAX_N, build_table
from .prevalence import prevalence_series, write_csv as write_prevalence_csv
from .truthtable import decompose, essential_variables, parse_truth_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


@dataclass
class RunConfig:
    """Validated invocation parameters for one subcommand."""

    subcommand: str
    n: Optional[int] = None
    max_n: Optional[int] = None
    table_text: Optional[str] = None
    outdir: Optional[str] = None
    workers: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0
    output_format: str = "csv"
    checkpoint: Optional[str] = None
    chunk_size: int = 1 << 16
    max_chunks: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    r: Optional[int] = None
    figure_format: str = "png"


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, reserving 2 for census mismatches
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser():
    parser = _Parser(
        prog="canalcount",
        description=(
            "Classify Boolean truth tables by canalizing structure and "
            "reproduce the exact counts, prevalences and figure data."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("classify", parents=[], help="classify one truth table")
    p.add_argument("--n", type=int, required=True, help="arity of the function")
    p.add_argument(
        "--table",
        required=True,
        help="output column, binary (canonical) or hex; see README for the "
        "bit order",
    )

    p = sub.add_parser("count", help="emit the count table as CSV")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--m", type=int, help="only rows with this essential count")
    p.add_argument("--k", type=int, help="only rows with this canalizing depth")
    p.add_argument("--r", type=int, help="only rows with this layer count")
    p.add_argument("--n", type=int, dest="n", help="only rows with this arity")

    p = sub.add_parser(
        "census", help="brute-force census, compared against the formulas"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int)
    p.add_argument("--samples", type=int, help="run the sampled census instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--checkpoint", help="resumable chunked scan state file (opt-in n=5)"
    )
    p.add_argument("--chunk-size", type=int, default=1 << 16)
    p.add_argument("--max-chunks", type=int)
    p.add_argument("--outdir", help="also write histogram/comparison CSVs here")

    p = sub.add_parser("prevalence", help="exact prevalences and fold changes")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--format", choices=("csv", "pretty"), default="csv")

    p = sub.add_parser("figures", help="write figure CSVs and rendered charts")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--outdir", required=True)
    p.add_argument("--figure-format", choices=("png", "svg"), default="png")

    return parser


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(subcommand=args.subcommand)
    for name in vars(cfg):
        if name == "subcommand":
            continue
        src = {"table_text": "table", "output_format": "format"}.get(name, name)
        if hasattr(args, src) and getattr(args, src) is not None:
            setattr(cfg, name, getattr(args, src))
    return cfg


def _print_classification(f, out):
    d = decompose(f)
    ess = sorted(essential_variables(f))
    m, k, r = len(ess), d.depth, d.num_layers
    suffix = ""
    if f.is_constant():
        suffix = f" (constant {f.bit(0)})"
    elif k == 0:
        suffix = " (non-canalizing)"
    out.write(f"m={m} k={k} r={r}{suffix}\n")
    out.write("essential: " + (" ".join(f"x{v}" for v in ess) or "-") + "\n")
    for i, (layer, b) in enumerate(zip(d.layers, d.outputs), start=1):
        parts = ", ".join(f"x{v} (a={a} -> b={b})" for v, a in layer)
        flag = " [bidirectional]" if d.bidirectional and i == len(d.layers) else ""
        out.write(f"layer {i}: {parts}{flag}\n")
    if isinstance(d.core, int):
        if not f.is_constant():
            out.write(f"core: constant {d.core}\n")
    else:
        names = " ".join(f"x{v}" for v in d.core_variables)
        out.write(f"core: {d.core.to_binary()} ({names})\n")


def _cmd_classify(cfg, out):
    try:
        f = parse_truth_table(cfg.n, cfg.table_text)
    except ValueError as exc:
        sys.stderr.write(f"canalcount classify: {exc}\n")
        return EXIT_USAGE
    _print_classification(f, out)
    return EXIT_OK


def _cmd_count(cfg, out):
    if cfg.max_n > DEFAULT_MAX_N:
        sys.stderr.write(
            f"canalcount count: --max-n is capped at {DEFAULT_MAX_N}\n"
        )
        return EXIT_USAGE
    table = build_table(cfg.max_n)
    out.write("n,m,k,r,count\n")
    for n, m, k, r, count in table.rows():
        if cfg.n is not None and n != cfg.n:
            continue
        if cfg.m is not None and m != cfg.m:
            continue
        if cfg.k is not None and k != cfg.k:
            continue
        if cfg.r is not None and r != cfg.r:
            continue
        out.write(f"{n},{m},{k},{r},{count}\n")
    return EXIT_OK


def _write_census_outputs(cfg, report, table):
    if not cfg.outdir:
        return
    os.makedirs(cfg.outdir, exist_ok=True)
    with open(
        os.path.join(cfg.outdir, f"census_n{report.n}_histogram.csv"),
        "w",
        encoding="utf-8",
    ) as fh:
        census_mod.write_histogram_csv(report, fh)
    if report.mode == "exhaustive":
        with open(
            os.path.join(cfg.outdir, f"census_n{report.n}_comparison.csv"),
            "w",
            encoding="utf-8",
        ) as fh:
            census_mod.write_comparison_csv(report, table, fh)


def _cmd_census(cfg, out):
    n = cfg.n
    if cfg.samples is not None:
        report = census_mod.census_sampled(n, cfg.samples, cfg.seed)
        table = build_table(n)
        out.write(
            f"sampled census: n={n} samples={cfg.samples} seed={cfg.seed}\n"
        )
        out.write("cell (m,k,r): observed  observed_p  exact_p  z\n")
        for cell, observed, obs_p, exact, z in census_mod.compare_sampled(
            report, table
        ):
            out.write(
                f"{cell}: {observed}  {obs_p:.6g}  {float(exact):.6g}  "
                f"{z:+.2f}\n"
            )
        _write_census_outputs(cfg, report, table)
        return EXIT_OK

    if cfg.checkpoint is not None:
        report = census_mod.census_resumable(
            n,
            cfg.checkpoint,
            chunk_size=cfg.chunk_size,
            max_chunks=cfg.max_chunks,
            workers=cfg.workers,
        )
        if report is None:
            out.write("census incomplete; progress saved to checkpoint\n")
            return EXIT_OK
    else:
        try:
            report = census_mod.census_exhaustive(n, workers=cfg.workers)
        except ValueError as exc:
            sys.stderr.write(f"canalcount census: {exc}\n")
            return EXIT_USAGE

    table = build_table(n)
    mismatches = census_mod.compare(report, table)
    _write_census_outputs(cfg, report, table)
    if mismatches:
        out.write(f"{len(mismatches)} mismatched cells:\n")
        for (m, k, r), expected, observed in mismatches:
            out.write(
                f"(m={m},k={k},r={r}): formula {expected} != census {observed}\n"
            )
        return EXIT_MISMATCH
    out.write(f"all cells match ({report.total} functions, n={n})\n")
    return EXIT_OK


def _cmd_prevalence(cfg, out):
    if cfg.max_n > DEFAULT_MAX_N:
        sys.stderr.write(
            f"canalcount prevalence: --max-n is capped at {DEFAULT_MAX_N}\n"
        )
        return EXIT_USAGE
    table = build_table(cfg.max_n)
    records = prevalence_series(cfg.max_n, table)
    if cfg.output_format == "csv":
        write_prevalence_csv(records, out)
    else:
        for rec in records:
            out.write(
                f"n={rec.n}: P_can={rec.p_can} (naive {rec.p_can_naive}), "
                f"P_ncf={rec.p_ncf} (naive {rec.p_ncf_naive}), "
                f"delta_can={rec.delta_can:.12g}, "
                f"delta_ncf={rec.delta_ncf:.12g}\n"
            )
    return EXIT_OK


def _cmd_figures(cfg, out):
    if cfg.max_n > DEFAULT_MAX_N:
        sys.stderr.write(
            f"canalcount figures: --max-n is capped at {DEFAULT_MAX_N}\n"
        )
        return EXIT_USAGE
    table = build_table(cfg.max_n)
    try:
        paths = figures_mod.write_figure_csvs(cfg.max_n, table, cfg.outdir)
        paths += figures_mod.render_figures(
            cfg.max_n, table, cfg.outdir, fmt=cfg.figure_format
        )
    except OSError as exc:
        sys.stderr.write(f"canalcount figures: {exc}\n")
        return EXIT_USAGE
    for path in paths:
        out.write(path + "\n")
    return EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "count": _cmd_count,
    "census": _cmd_census,
    "prevalence": _cmd_prevalence,
    "figures": _cmd_figures,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    cfg = _config_from_args(args)
    return _COMMANDS[cfg.subcommand](cfg, sys.stdout)


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
