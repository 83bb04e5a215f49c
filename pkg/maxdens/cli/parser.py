import argparse

from maxdens.core import defaults
from maxdens.mcmc.proposals import METHOD_ORDER
from maxdens.mcmc.targets import TARGETS

__all__ = ["build_parser", "float_list", "str_list"]


def float_list(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of numbers, got {text!r}") from None


def str_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _join(values) -> str:
    return ",".join(f"{v:g}" if isinstance(v, float) else str(v) for v in values)


def _add_common(parser: argparse.ArgumentParser, seed: bool = True) -> None:
    parser.add_argument("--out", default="results", help="Output directory (default: results).")
    parser.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1).")
    if seed:
        parser.add_argument("--seed", type=int, default=defaults.DEFAULT_SEED,
                            help=f"Base random seed (default: {defaults.DEFAULT_SEED}).")


def _add_solver(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rho", type=float, default=defaults.DEFAULT_RHO,
                        help=f"Newton step size in (0, 1] (default: {defaults.DEFAULT_RHO}).")
    parser.add_argument("--maxiter", type=int, default=defaults.DEFAULT_MAXITER,
                        help=f"Iterations per attempt (default: {defaults.DEFAULT_MAXITER}).")
    parser.add_argument("--tol", type=float, default=defaults.DEFAULT_TOL,
                        help=f"Convergence tolerance (default: {defaults.DEFAULT_TOL:g}).")
    parser.add_argument("--max-restarts", type=int, default=defaults.DEFAULT_MAX_RESTARTS,
                        help=f"Restarts with rho/5 and 5x maxiter (default: {defaults.DEFAULT_MAX_RESTARTS}).")
    parser.add_argument("--max-total-iterations", type=int, default=defaults.DEFAULT_MAX_TOTAL_ITERATIONS,
                        help=f"Iterations across all attempts of one solve "
                             f"(default: {defaults.DEFAULT_MAX_TOTAL_ITERATIONS}).")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maxdens",
        description="Maximum density Beta/Dirichlet parameters, their baselines, and the studies comparing them.")
    ap.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                    help="Logging level (default: WARNING).")
    sub = ap.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Solve for maximum density parameters and print the report.")
    solve.add_argument("--family", choices=["beta", "dirichlet"], default="beta", help="Distribution family.")
    solve.add_argument("--target", type=float_list, required=True,
                       help="Target location: a number in (0, 1) for beta, a comma list for dirichlet.")
    solve.add_argument("--constraint", choices=["concentration", "variance", "cosine"], required=True,
                       help="Scale constraint: concentration alpha, variance v (beta only) or mean cosine error.")
    solve.add_argument("--value", type=float, required=True, help="Value of the scale constraint.")
    _add_solver(solve)

    mh = sub.add_parser("mh", help="Replicated Metropolis-Hastings study: KS distances and ACFs.")
    mh.add_argument("--targets", type=str_list, default=list(TARGETS),
                    help=f"Target distributions (default: {_join(TARGETS)}).")
    mh.add_argument("--methods", type=str_list, default=["I", "II", "III", "IV"],
                    help=f"Proposal methods among {_join(METHOD_ORDER)} (default: I,II,III,IV).")
    mh.add_argument("--reps", type=int, default=defaults.DEFAULT_MH_REPS,
                    help=f"Replicates per combination (default: {defaults.DEFAULT_MH_REPS}).")
    mh.add_argument("--iters", type=int, default=defaults.DEFAULT_MH_ITERS,
                    help=f"Kept iterations per chain (default: {defaults.DEFAULT_MH_ITERS}).")
    mh.add_argument("--burnin", type=int, default=defaults.DEFAULT_MH_BURNIN,
                    help=f"Discarded burn-in iterations (default: {defaults.DEFAULT_MH_BURNIN}).")
    mh.add_argument("--v", type=float, default=defaults.DEFAULT_MH_VARIANCE,
                    help=f"Proposal variance, or variance cap for adaptive methods (default: {defaults.DEFAULT_MH_VARIANCE}).")
    mh.add_argument("--alpha", type=float, default=defaults.DEFAULT_MH_ALPHA,
                    help=f"Proposal concentration (default: {defaults.DEFAULT_MH_ALPHA}).")
    mh.add_argument("--max-lag", type=int, default=defaults.DEFAULT_ACF_MAX_LAG,
                    help=f"Largest ACF lag (default: {defaults.DEFAULT_ACF_MAX_LAG}).")
    mh.add_argument("--tune-alphas", type=float_list, default=[],
                    help="Also run method II at each of these concentrations.")
    mh.add_argument("--tune-variances", type=float_list, default=[],
                    help="Also run method I at each of these variances.")
    _add_solver(mh)
    _add_common(mh)

    coverage = sub.add_parser("coverage", help="Exact coverage of HPD intervals for a rare-event probability.")
    coverage.add_argument("--n", type=int, default=defaults.DEFAULT_COVERAGE_N,
                          help=f"Number of Bernoulli observations (default: {defaults.DEFAULT_COVERAGE_N}).")
    coverage.add_argument("--alpha", type=float, default=defaults.DEFAULT_COVERAGE_ALPHA,
                          help=f"Prior concentration (default: {defaults.DEFAULT_COVERAGE_ALPHA:g}).")
    coverage.add_argument("--c", type=float, default=defaults.DEFAULT_COVERAGE_C,
                          help=f"Prior target location in fixed mode (default: {defaults.DEFAULT_COVERAGE_C:g}).")
    coverage.add_argument("--level", type=float, default=defaults.DEFAULT_COVERAGE_LEVEL,
                          help=f"Credible level (default: {defaults.DEFAULT_COVERAGE_LEVEL}).")
    coverage.add_argument("--mode", choices=["fixed", "oracle", "both"], default="both",
                          help="Prior location: fixed at c, at the true theta (oracle), or both (default: both).")
    coverage.add_argument("--methods", type=str_list, default=["mean", "max-density"],
                          help="Prior methods (default: mean,max-density).")
    coverage.add_argument("--theta-min", type=float, default=1e-6, help="Smallest true theta (default: 1e-6).")
    coverage.add_argument("--theta-max", type=float, default=0.9, help="Largest true theta (default: 0.9).")
    coverage.add_argument("--theta-points", type=int, default=400, help="Log-spaced grid size (default: 400).")
    _add_common(coverage, seed=False)

    logit = sub.add_parser("logit", help="Density (beta) or Monte Carlo samples (dirichlet) of the logit distance.")
    logit.add_argument("--family", choices=["beta", "dirichlet"], default="beta", help="Distribution family.")
    logit.add_argument("--c", type=float_list, required=True,
                       help="Target location: a number for beta, a comma list for dirichlet.")
    logit.add_argument("--alphas", type=float_list, default=list(defaults.DEFAULT_LOGIT_ALPHAS),
                       help=f"Concentrations (default: {_join(defaults.DEFAULT_LOGIT_ALPHAS)}).")
    logit.add_argument("--methods", type=str_list, default=None,
                       help="Location methods (default: mean,max-density,median for beta; mean,max-density for dirichlet).")
    logit.add_argument("--y-min", type=float, default=1e-3, help="Smallest y (default: 1e-3).")
    logit.add_argument("--y-max", type=float, default=50.0, help="Largest y (default: 50).")
    logit.add_argument("--y-points", type=int, default=400, help="Log-spaced grid size (default: 400).")
    logit.add_argument("--samples", type=int, default=defaults.DEFAULT_MC_SAMPLES,
                       help=f"Monte Carlo samples per curve for dirichlet (default: {defaults.DEFAULT_MC_SAMPLES}).")
    _add_solver(logit)
    _add_common(logit)

    percentiles = sub.add_parser("percentiles", help="Percentiles and CDFs of Beta distributions placed at c.")
    percentiles.add_argument("--c", type=float_list, default=[0.001, 0.2],
                             help="Target locations (default: 0.001,0.2).")
    percentiles.add_argument("--alphas", type=float_list, default=list(defaults.DEFAULT_FIGURE_ALPHAS),
                             help=f"Concentrations (default: {_join(defaults.DEFAULT_FIGURE_ALPHAS)}).")
    percentiles.add_argument("--methods", type=str_list, default=["mean", "max-density", "median"],
                             help="Location methods (default: mean,max-density,median).")
    percentiles.add_argument("--cdf-points", type=int, default=200,
                             help="Log-spaced CDF grid size on [1e-6, 0.999] (default: 200).")
    _add_solver(percentiles)
    _add_common(percentiles, seed=False)

    signatures = sub.add_parser("signatures", help="Mean cosine error sweep over a signature catalog.")
    source = signatures.add_mutually_exclusive_group(required=True)
    source.add_argument("--catalog", help="Tab-separated catalog: mutation types by signatures.")
    source.add_argument("--synthetic", type=int, help="Use a synthetic sparse catalog with this many signatures.")
    signatures.add_argument("--alphas", type=float_list, default=list(defaults.DEFAULT_ALPHA_GRID),
                            help="Mean-method concentrations (default: 8 log-spaced values in [10, 1e4]).")
    signatures.add_argument("--kappas", type=float_list, default=list(defaults.DEFAULT_KAPPA_GRID),
                            help="Maximum density target errors (default: 8 log-spaced values in [3e-3, 0.3]).")
    signatures.add_argument("--mc-samples", type=int, default=defaults.DEFAULT_MC_SAMPLES,
                            help=f"Monte Carlo draws per cell (default: {defaults.DEFAULT_MC_SAMPLES}).")
    _add_solver(signatures)
    _add_common(signatures)

    rerun = sub.add_parser("rerun", help="Replay the run recorded in a manifest.")
    rerun.add_argument("manifest", help="Path to a manifest.json written by an earlier run.")
    rerun.add_argument("--out", default=None, help="Output directory (default: the manifest's directory).")

    return ap
