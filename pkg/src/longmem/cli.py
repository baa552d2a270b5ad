"""Command line surface.

Every artifact the model family produces is printable as plot-ready CSV
(default) or JSON.  CSV begins with a ``#``-commented metadata line whose
payload is the full parameter set as JSON; floats are written with 17
significant digits so parsing them back reproduces the in-memory values
bit-for-bit, and a fixed seed makes reruns byte-identical.

Exit codes: 0 success, 2 malformed flags (argparse), 1 runtime error.
Runtime errors print one machine-readable JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import asdict, dataclass

from . import __version__
from .errors import InsufficientDataError, LongmemError
from .estimators import accumulate_histogram, fit_alpha_from_histogram
from .montecarlo import run_study
from .sampler import GENERATOR, RngStream, generate
from .spectral import build_grid, build_model, eigen_report

PROG = "longmem"

DEFAULT_SEED = 5
DEFAULT_REPLICATES = 500
DEFAULT_BINS = 100
WORKERS_ENV = "LONGMEM_WORKERS"

_FLOAT_FMT = ".17g"


@dataclass
class RunConfig:
    """Resolved invocation: one command plus every knob it can see."""

    command: str
    beta: float
    n: int
    seed: int = DEFAULT_SEED
    replicates: int = DEFAULT_REPLICATES
    bins: int = DEFAULT_BINS
    format: str = "csv"
    output: str = "-"
    workers: int = 1
    dense_oracle: bool = False


def _beta_arg(text):
    value = float(text)
    if not 0.0 <= value <= 10.0:
        raise argparse.ArgumentTypeError(f"beta must lie in [0, 10], got {text}")
    return value


def _n_arg(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"n must be at least 2, got {text}")
    return value


def _seed_arg(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be in [0, 2**64), got {text}")
    return value


def _count_arg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"count must be non-negative, got {text}")
    return value


def _bins_arg(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"bins must be at least 2, got {text}")
    return value


def _workers_arg(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"workers must be at least 1, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Long-memory series from a circulant convolution operator.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--beta", type=_beta_arg, required=True,
                        help="spectral exponent in [0, 10]")
    common.add_argument("--n", type=_n_arg, required=True,
                        help="requested sample count (>= 2)")
    common.add_argument("--seed", type=_seed_arg, default=DEFAULT_SEED,
                        help="study seed (default %(default)s)")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default %(default)s)")
    common.add_argument("--output", default="-", metavar="PATH",
                        help="output file, '-' for stdout (default)")
    common.add_argument("--dense-oracle", action="store_true",
                        help="route transforms and convolutions through the dense O(n^2) oracle paths")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    sub.add_parser("generate", parents=[common],
                   help="one realization: noise, series, cosine, standardized")
    sub.add_parser("spectrum", parents=[common],
                   help="frequency grid, density, operator row")
    sub.add_parser("eigen", parents=[common],
                   help="eigenvalues by rank with summary estimates")
    hist = sub.add_parser("hist", parents=[common],
                          help="pooled histogram of standardized replicates")
    hist.add_argument("--replicates", type=_count_arg, default=DEFAULT_REPLICATES,
                      help="replicate count (default %(default)s)")
    hist.add_argument("--bins", type=_bins_arg, default=DEFAULT_BINS,
                      help="histogram bin count (default %(default)s)")
    study = sub.add_parser("study", parents=[common],
                           help="replicated study: eigenvalue estimates vs measured statistics")
    study.add_argument("--replicates", type=_count_arg, default=DEFAULT_REPLICATES,
                       help="replicate count (default %(default)s)")
    study.add_argument("--workers", type=_workers_arg, default=None,
                       help=f"thread count (default ${WORKERS_ENV} or 1); results do not depend on it")
    return parser


def _resolve_workers(flag_value):
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    value = int(raw)
    if value < 1:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
    return value


def config_from_args(args):
    cfg = RunConfig(command=args.command, beta=args.beta, n=args.n)
    cfg.seed = args.seed
    cfg.format = args.format
    cfg.output = args.output
    cfg.dense_oracle = bool(args.dense_oracle)
    if hasattr(args, "replicates"):
        cfg.replicates = args.replicates
    if hasattr(args, "bins"):
        cfg.bins = args.bins
    cfg.workers = _resolve_workers(getattr(args, "workers", None))
    return cfg


def _metadata(cfg):
    return {
        "tool": PROG,
        "version": __version__,
        "command": cfg.command,
        "beta": cfg.beta,
        "n": cfg.n,
        "rn": build_grid(cfg.n).rn,
        "seed": cfg.seed,
        "replicates": cfg.replicates,
        "bins": cfg.bins,
        "workers": cfg.workers,
        "dense_oracle": cfg.dense_oracle,
        "generator": GENERATOR,
        "format": cfg.format,
    }


def _cmd_generate(cfg):
    model = build_model(cfg.beta, cfg.n, dense=cfg.dense_oracle)
    sample = generate(
        model, RngStream(seed=cfg.seed, stream_index=0), dense=cfg.dense_oracle
    )
    columns = ["index", "epsilon", "series", "cosvec", "standardized"]
    rows = [
        [i, sample.epsilon[i], sample.series[i], sample.cosvec[i], sample.standardized[i]]
        for i in range(model.rn)
    ]
    return columns, rows, None


def _cmd_spectrum(cfg):
    model = build_model(cfg.beta, cfg.n, dense=cfg.dense_oracle)
    columns = ["frequency", "density", "first_row"]
    rows = [
        [model.grid.frequencies[i], model.density[i], model.first_row[i]]
        for i in range(model.rn)
    ]
    return columns, rows, None


def _cmd_eigen(cfg):
    model = build_model(cfg.beta, cfg.n, dense=cfg.dense_oracle)
    report = eigen_report(model, dense=cfg.dense_oracle)
    columns = ["rank", "eigenvalue", "log10_rank", "log10_eigenvalue"]
    rows = [
        [k + 1, lam, math.log10(k + 1), math.log10(lam)]
        for k, lam in enumerate(model.eigenvalues)
    ]
    return columns, rows, asdict(report)


def _cmd_hist(cfg):
    if cfg.replicates < 1:
        raise ValueError(f"hist needs at least 1 replicate, got {cfg.replicates}")
    model = build_model(cfg.beta, cfg.n, dense=cfg.dense_oracle)
    vectors = (
        generate(model, RngStream(seed=cfg.seed, stream_index=i), dense=cfg.dense_oracle).standardized
        for i in range(cfg.replicates)
    )
    hist = accumulate_histogram(vectors, bin_count=cfg.bins)
    try:
        fitted = fit_alpha_from_histogram(hist)
    except InsufficientDataError:
        fitted = None
    columns = ["bin_left", "bin_right", "count", "density"]
    rows = [
        [hist.edges[k], hist.edges[k + 1], int(hist.counts[k]), hist.densities[k]]
        for k in range(hist.bin_count)
    ]
    summary = {"sample_count": hist.sample_count, "fit_alpha": fitted}
    return columns, rows, summary


def _cmd_study(cfg):
    report = run_study(
        cfg.beta, cfg.n, cfg.replicates, cfg.seed,
        workers=cfg.workers, dense=cfg.dense_oracle,
    )
    columns = ["beta", "statistic", "eigen_estimate", "measured_mean", "measured_cv"]
    rows = [
        [report.beta, "d", report.eigen.d_est, report.mean_d, report.cv_d],
        [report.beta, "alpha", report.eigen.alpha_est, report.mean_alpha, report.cv_alpha],
        [report.beta, "variance", report.eigen.var_est, report.mean_var, report.cv_var],
    ]
    return columns, rows, asdict(report.eigen)


_HANDLERS = {
    "generate": _cmd_generate,
    "spectrum": _cmd_spectrum,
    "eigen": _cmd_eigen,
    "hist": _cmd_hist,
    "study": _cmd_study,
}


def _cell(value):
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return format(value, _FLOAT_FMT)
    return str(value)


def render(cfg):
    """Run one configured command and return its full output text."""
    columns, rows, summary = _HANDLERS[cfg.command](cfg)
    meta = _metadata(cfg)
    if cfg.format == "json":
        payload = {"meta": meta, "columns": columns, "rows": rows}
        if summary is not None:
            payload["summary"] = summary
        return json.dumps(payload, indent=2) + "\n"
    lines = ["# " + json.dumps(meta)]
    if summary is not None:
        lines.append("# summary " + json.dumps(summary))
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _emit(text, output):
    if output == "-":
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        _emit(render(cfg), cfg.output)
    except (LongmemError, ValueError, OSError) as exc:
        sys.stderr.write(
            json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}) + "\n"
        )
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
