"""
Replicated Metropolis-Hastings runs over a grid of targets and proposal methods.

Each replicate draws its seed from SeedSequence(base_seed, spawn_key=(target, method, rep)), with
target and method positions taken from the fixed registries, so any single chain can be rerun from
the seed in the output table. Tables are assembled by key, never by completion order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pandas as pd

from maxdens.core.defaults import DEFAULT_ACF_MAX_LAG, DEFAULT_MH_BURNIN, DEFAULT_MH_ITERS, DEFAULT_MH_REPS, \
    DEFAULT_SEED
from maxdens.core.exceptions import DegenerateSeries
from maxdens.core.labels import ACF_CURVE_COLUMNS, ACF_SUMMARY_COLUMNS, KS_COLUMNS
from maxdens.schema import Schema
from maxdens.schema.config import SolverConfig
from .diagnostics import acf, ks_distance
from .proposals import METHOD_ORDER, ProposalSpec
from .sampler import run_chain
from .targets import TARGETS, get_target

__all__ = ["StudyResult", "replicate_seed", "replicate_study", "tuning_grid", "summarize_acf"]

logger = logging.getLogger(__name__)

TARGET_ORDER: tuple[str, ...] = tuple(TARGETS)


class StudyResult(Schema):
    ks: pd.DataFrame
    acf_curves: pd.DataFrame
    acf_summary: pd.DataFrame


def replicate_seed(base_seed: int, target: str, method: str, rep: int) -> int:
    """64-bit seed of one replicate."""
    sequence = np.random.SeedSequence(base_seed, spawn_key=(TARGET_ORDER.index(target),
                                                            METHOD_ORDER.index(method), rep))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def tuning_grid(alphas, variances) -> list[ProposalSpec]:
    """Method II over a grid of concentrations and method I over a grid of variances."""
    return [ProposalSpec(method="II", alpha=alpha) for alpha in alphas] + \
        [ProposalSpec(method="I", v=v) for v in variances]


def _run_replicate(task: tuple) -> tuple[dict, list[float]]:
    target_name, spec, rep, seed, iters, burnin, max_lag, cfg = task
    target = get_target(target_name)
    run = run_chain(target, spec, iters=iters, burnin=burnin, seed=seed, cfg=cfg)
    try:
        curve = acf(run.states, max_lag).tolist()
    except DegenerateSeries:
        logger.warning("Chain %s/%s rep %d never moved; its ACF is undefined", target_name, spec.label, rep)
        curve = [float("nan")] * (max_lag + 1)
    row = {"target": target_name, "method": spec.label, "rep": rep, "seed": seed,
           "ks": ks_distance(run.states, target), "acceptance_rate": run.acceptance_rate,
           "solver_failures": run.solver_failures, "infeasible_returns": run.infeasible_returns}
    return row, curve


def summarize_acf(curves: pd.DataFrame) -> pd.DataFrame:
    """Mean and standard deviation of the ACF across replicates, per target, method and lag."""
    grouped = curves.groupby(["target", "method", "lag"], sort=False)["acf"]
    summary = grouped.agg(acf_mean="mean", acf_sd="std").reset_index()
    return summary[ACF_SUMMARY_COLUMNS]


def replicate_study(targets, methods: list[ProposalSpec], reps: int = DEFAULT_MH_REPS,
                    iters: int = DEFAULT_MH_ITERS, burnin: int = DEFAULT_MH_BURNIN,
                    base_seed: int = DEFAULT_SEED, max_lag: int = DEFAULT_ACF_MAX_LAG,
                    cfg: SolverConfig | None = None, workers: int = 1) -> StudyResult:
    """
    Run reps chains for every (target, method) pair and collect KS distances and ACF curves.
    """
    cfg = cfg or SolverConfig()
    tasks = [(target, spec, rep, replicate_seed(base_seed, target, spec.method, rep), iters, burnin, max_lag, cfg)
             for target in targets for spec in methods for rep in range(reps)]
    logger.info("Running %d chains (%d targets x %d methods x %d reps) on %d workers", len(tasks), len(targets),
                len(methods), reps, workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_run_replicate, tasks, chunksize=1))
    else:
        results = [_run_replicate(task) for task in tasks]

    ks = pd.DataFrame([row for row, _ in results], columns=KS_COLUMNS)
    curve_rows = [
        {"target": row["target"], "method": row["method"], "rep": row["rep"], "lag": lag, "acf": value}
        for row, curve in results for lag, value in enumerate(curve)
    ]
    curves = pd.DataFrame(curve_rows, columns=ACF_CURVE_COLUMNS)
    return StudyResult(ks=ks, acf_curves=curves, acf_summary=summarize_acf(curves))
