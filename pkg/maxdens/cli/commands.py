import argparse
import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from maxdens import __version__
from maxdens.constraints import build_constraint
from maxdens.core.defaults import DEFAULT_MAX_TOTAL_ITERATIONS
from maxdens.core.distributions import beta_mean, beta_variance, taylor_mean_cosine_error
from maxdens.core.exceptions import DomainError
from maxdens.core.solver import solve_max_density, solve_max_density_beta
from maxdens.experiments.coverage import PRIOR_METHODS, TARGET_MODES, CoverageSpec, coverage_curve
from maxdens.experiments.curves import LOCATION_METHODS, cdf_table, logit_comparison, logit_comparison_dirichlet, \
    percentile_table
from maxdens.experiments.signatures import iqr_at_matched_average, load_cosmic, signature_scale_sweep, \
    sweep_summary, synthetic_catalog
from maxdens.mcmc.proposals import ProposalSpec
from maxdens.mcmc.study import replicate_study, tuning_grid
from maxdens.mcmc.targets import get_target
from maxdens.schema.config import SolverConfig
from maxdens.schema.params import SimplexPoint
from .dec import COMMANDS, command
from .manifest import RunManifest

__all__ = ["cmd_solve", "cmd_mh", "cmd_coverage", "cmd_logit", "cmd_percentiles", "cmd_signatures", "cmd_rerun"]

logger = logging.getLogger(__name__)


def _solver_config(args) -> SolverConfig:
    return SolverConfig(rho=args.rho, maxiter=args.maxiter, tol=args.tol, max_restarts=args.max_restarts,
                        max_total_iterations=getattr(args, "max_total_iterations", DEFAULT_MAX_TOTAL_ITERATIONS))


def _check_choices(name: str, values, allowed) -> None:
    unknown = [value for value in values if value not in allowed]
    if unknown:
        raise DomainError(f"unknown {name} {unknown}; expected values among {list(allowed)}")


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_tables(name: str, args, tables: dict[str, pd.DataFrame]) -> None:
    out = _out_dir(args)
    for file_name, frame in tables.items():
        frame.to_csv(out / file_name, index=False)
    manifest_path = RunManifest.from_args(name, args, list(tables)).write(out)
    logger.info("Wrote %s and %s", ", ".join(sorted(tables)), manifest_path)


@command("solve")
def cmd_solve(args) -> int:
    cfg = _solver_config(args)
    constraint = build_constraint(args.constraint, args.value)
    if args.family == "beta":
        if len(args.target) != 1:
            raise DomainError(f"a beta target is a single number, got {len(args.target)} values")
        report = solve_max_density_beta(args.target[0], constraint, cfg)
        params = report.params
        summary = {"mean": beta_mean(params), "variance": beta_variance(params),
                   "concentration": params.concentration}
    else:
        report = solve_max_density(SimplexPoint(c=args.target), constraint, cfg)
        params = report.params
        summary = {"concentration": params.concentration, "taylor_mean_cosine_error": taylor_mean_cosine_error(params)}
        if params.dimension == 2:
            summary["variance"] = beta_variance(params.as_beta())
    print(json.dumps({"constraint": {"kind": constraint.kind, "value": constraint.target},
                      "report": report.model_dump(), "summary": summary}, indent=2))
    return 0


@command("mh")
def cmd_mh(args) -> int:
    for target in args.targets:
        get_target(target)
    specs = [ProposalSpec(method=method, v=args.v, alpha=args.alpha) for method in args.methods]
    specs += tuning_grid(args.tune_alphas, args.tune_variances)
    result = replicate_study(args.targets, specs, reps=args.reps, iters=args.iters, burnin=args.burnin,
                             base_seed=args.seed, max_lag=args.max_lag, cfg=_solver_config(args),
                             workers=args.workers)
    _write_tables("mh", args, {"mh_ks.csv": result.ks, "mh_acf.csv": result.acf_summary,
                               "mh_acf_curves.csv": result.acf_curves})
    return 0


@command("coverage")
def cmd_coverage(args) -> int:
    _check_choices("prior methods", args.methods, PRIOR_METHODS)
    grid = tuple(np.geomspace(args.theta_min, args.theta_max, args.theta_points).tolist())
    spec = CoverageSpec(n=args.n, alpha=args.alpha, c=args.c, level=args.level, theta_grid=grid)
    modes = TARGET_MODES if args.mode == "both" else (args.mode,)
    table = coverage_curve(spec, modes=modes, methods=tuple(args.methods), workers=args.workers)
    _write_tables("coverage", args, {"coverage.csv": table})
    return 0


@command("logit")
def cmd_logit(args) -> int:
    cfg = _solver_config(args)
    if args.family == "beta":
        if len(args.c) != 1:
            raise DomainError(f"a beta target is a single number, got {len(args.c)} values")
        methods = args.methods or list(LOCATION_METHODS)
        _check_choices("location methods", methods, LOCATION_METHODS)
        y_grid = np.geomspace(args.y_min, args.y_max, args.y_points)
        table = logit_comparison(args.c[0], args.alphas, methods, y_grid, cfg)
        _write_tables("logit", args, {"logit.csv": table})
    else:
        methods = args.methods or ["mean", "max-density"]
        _check_choices("location methods", methods, ("mean", "max-density"))
        table = logit_comparison_dirichlet(SimplexPoint(c=args.c), args.alphas, methods, args.samples, args.seed, cfg)
        _write_tables("logit", args, {"logit_samples.csv": table})
    return 0


@command("percentiles")
def cmd_percentiles(args) -> int:
    _check_choices("location methods", args.methods, LOCATION_METHODS)
    cfg = _solver_config(args)
    x_grid = np.geomspace(1e-6, 0.999, args.cdf_points)
    percentile_frames, cdf_frames = [], []
    for c in args.c:
        for method in args.methods:
            percentile_frames.append(percentile_table(method, c, args.alphas, cfg=cfg))
            cdf_frames.append(cdf_table(method, c, args.alphas, x_grid, cfg))
    _write_tables("percentiles", args, {"percentiles.csv": pd.concat(percentile_frames, ignore_index=True),
                                        "cdf.csv": pd.concat(cdf_frames, ignore_index=True)})
    return 0


@command("signatures")
def cmd_signatures(args) -> int:
    cfg = _solver_config(args)
    catalog = load_cosmic(args.catalog) if args.catalog else synthetic_catalog(args.synthetic, args.seed)
    table = pd.concat([
        signature_scale_sweep(catalog, "mean", args.alphas, args.mc_samples, args.seed, cfg, args.workers),
        signature_scale_sweep(catalog, "max-density", args.kappas, args.mc_samples, args.seed, cfg, args.workers),
    ], ignore_index=True)
    failures = int((~table["converged"]).sum())
    if failures:
        logger.warning("%d of %d signature cells did not converge", failures, len(table))
    summary = sweep_summary(table)
    _write_tables("signatures", args, {"signatures.csv": table, "signatures_summary.csv": summary,
                                       "signatures_matched.csv": iqr_at_matched_average(summary)})
    return 0


@command("rerun")
def cmd_rerun(args) -> int:
    manifest = RunManifest.load(args.manifest)
    if manifest.version != __version__:
        logger.warning("Manifest was written by maxdens %s, replaying with %s", manifest.version, __version__)
    if manifest.subcommand not in COMMANDS or manifest.subcommand == "rerun":
        raise DomainError(f"manifest names an unknown subcommand {manifest.subcommand!r}")
    out = args.out or str(Path(args.manifest).parent)
    replay = argparse.Namespace(**manifest.parameters, command=manifest.subcommand, out=out,
                                log_level=args.log_level)
    return COMMANDS[manifest.subcommand](replay)
