"""Replication harness: measured spread statistics over many seeded
replicates, reported next to the eigenvalue predictions.

Replicate ``i`` of a study draws from stream ``(seed, i)`` and results are
aggregated in replicate order, so a report is a pure function of
``(beta, n, replicates, seed)`` whatever the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSampleError
from .estimators import sample_stats
from .sampler import RngStream, generate
from .spectral import EigenReport, build_model, eigen_report


@dataclass(frozen=True)
class MonteCarloReport:
    """Study outcome: eigenvalue estimates next to measured means and CVs.

    mean_* are replicate means of d_meas, alpha_meas, and the series
    variance; cv_* are the matching coefficients of variation (sample
    standard deviation over mean).
    """

    beta: float
    n: int
    replicates: int
    seed: int
    eigen: EigenReport
    mean_d: float
    mean_alpha: float
    mean_var: float
    cv_d: float
    cv_alpha: float
    cv_var: float


def run_study(beta, n, replicates, seed, workers=1, dense=False):
    """Run a replicated study of the model at one (beta, n).

    Parameters
    ----------
    beta, n : model parameters
    replicates : int
        Number of replicates, at least 2.
    seed : int
        Study seed; replicate ``i`` uses stream ``(seed, i)``.
    workers : int
        Thread count for replicate generation.  Results are identical for
        any value.
    dense : bool
        Route convolutions through the dense oracle.

    Returns
    -------
    MonteCarloReport

    Raises
    ------
    DegenerateSampleError
        If any replicate series is constant; the message names the
        offending stream index and the study aborts.
    """
    replicates = int(replicates)
    if replicates < 2:
        raise ValueError(f"replicates must be at least 2, got {replicates}")
    workers = int(workers)
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")

    model = build_model(beta, n, dense=dense)
    eigen = eigen_report(model)

    def one(i):
        sample = generate(model, RngStream(seed=seed, stream_index=i), dense=dense)
        try:
            stats = sample_stats(sample.series)
        except DegenerateSampleError as exc:
            raise DegenerateSampleError(f"replicate stream_index={i}: {exc}") from exc
        return stats.d_meas, stats.alpha_meas, stats.variance

    measured = np.empty((replicates, 3))
    if workers == 1:
        for i in range(replicates):
            measured[i] = one(i)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for i, row in enumerate(pool.map(one, range(replicates))):
                measured[i] = row

    means = measured.mean(axis=0)
    sds = measured.std(axis=0, ddof=1)
    cvs = sds / means
    return MonteCarloReport(
        beta=float(beta),
        n=int(n),
        replicates=replicates,
        seed=int(seed),
        eigen=eigen,
        mean_d=float(means[0]),
        mean_alpha=float(means[1]),
        mean_var=float(means[2]),
        cv_d=float(cvs[0]),
        cv_alpha=float(cvs[1]),
        cv_var=float(cvs[2]),
    )
