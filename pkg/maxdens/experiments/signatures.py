"""
Mutational-signature scale control: how evenly a scale parameter spreads Dirichlet draws around each
signature of a catalog, measured by the mean cosine error between draws and the signature.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pandas as pd
from pydantic import Field, model_validator

from maxdens.constraints import MeanCosineError
from maxdens.core.baselines import mean_method
from maxdens.core.defaults import COSMIC_FLOOR, DEFAULT_MC_SAMPLES, DEFAULT_SEED, SBS96_ROWS
from maxdens.core.distributions import cosine_errors, dirichlet_mean, dirichlet_sample_matrix, \
    taylor_mean_cosine_error
from maxdens.core.exceptions import CatalogError, ConvergenceFailure, DomainError
from maxdens.core.labels import SWEEP_COLUMNS, SWEEP_SUMMARY_COLUMNS
from maxdens.core.solver import solve_max_density
from maxdens.schema import FrozenSchema
from maxdens.schema.config import SolverConfig
from maxdens.schema.params import SimplexPoint

__all__ = ["SignatureCatalog", "sbs96_labels", "load_cosmic", "write_catalog", "synthetic_catalog",
           "signature_scale_sweep", "sweep_summary", "iqr_at_matched_average"]

logger = logging.getLogger(__name__)

SWEEP_METHODS = ("mean", "max-density")


def sbs96_labels() -> tuple[str, ...]:
    """Single-base-substitution types in the usual catalog order, e.g. 'A[C>A]A'."""
    substitutions = ("C>A", "C>G", "C>T", "T>A", "T>C", "T>G")
    return tuple(f"{five}[{sub}]{three}" for sub in substitutions for five in "ACGT" for three in "ACGT")


class SignatureCatalog(FrozenSchema):
    """
    Named probability vectors over mutation types; column j of `matrix` is signature names[j].
    """

    names: tuple[str, ...] = Field(min_length=1)
    mutation_types: tuple[str, ...]
    matrix: np.ndarray = Field(repr=False)

    @model_validator(mode='after')
    def validate_shape(self):
        if self.matrix.shape != (len(self.mutation_types), len(self.names)):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match "
                             f"{len(self.mutation_types)} mutation types x {len(self.names)} signatures")
        return self

    def __len__(self):
        return len(self.names)

    def signature(self, name: str) -> SimplexPoint:
        return SimplexPoint(c=self.matrix[:, self.names.index(name)])

    def items(self):
        for j, name in enumerate(self.names):
            yield name, SimplexPoint(c=self.matrix[:, j])


def _floor_and_normalize(matrix: np.ndarray) -> np.ndarray:
    floored = np.maximum(matrix, COSMIC_FLOOR)
    return floored / floored.sum(axis=0, keepdims=True)


def load_cosmic(path, rows: int = SBS96_ROWS) -> SignatureCatalog:
    """
    Read a tab-separated catalog: a header of signature names, then one row per mutation type with
    its label in the first column. Entries below the floor are raised to it and every column is
    renormalized.
    """
    try:
        frame = pd.read_csv(path, sep="\t", index_col=0)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise CatalogError(f"could not read signature catalog {path}: {e}", path=str(path)) from e
    if frame.shape[1] == 0:
        raise CatalogError(f"signature catalog {path} has no signature columns", path=str(path))
    if frame.shape[0] != rows:
        raise CatalogError(f"signature catalog {path} has {frame.shape[0]} rows, expected {rows}",
                           path=str(path), rows=int(frame.shape[0]))
    numeric = frame.apply(pd.to_numeric, errors="coerce")
    bad = numeric.isna() | ~np.isfinite(numeric) | (numeric < 0)
    if bad.to_numpy().any():
        row, column = next((r, c) for r, c in itertools.product(frame.index, frame.columns) if bad.at[r, c])
        raise CatalogError(f"signature catalog {path} has an invalid entry {frame.at[row, column]!r} "
                           f"at ({row}, {column})", path=str(path), row=str(row), column=str(column))
    matrix = _floor_and_normalize(numeric.to_numpy(dtype=float))
    logger.info("Loaded %d signatures over %d mutation types from %s", frame.shape[1], rows, path)
    return SignatureCatalog(names=tuple(str(name) for name in frame.columns),
                            mutation_types=tuple(str(label) for label in frame.index), matrix=matrix)


def write_catalog(catalog: SignatureCatalog, path) -> None:
    frame = pd.DataFrame(catalog.matrix, index=pd.Index(catalog.mutation_types, name="Type"),
                         columns=list(catalog.names))
    frame.to_csv(path, sep="\t")


def synthetic_catalog(count: int = 10, seed: int = DEFAULT_SEED) -> SignatureCatalog:
    """
    Sparse catalog resembling real SBS96 signatures: each column is a Gamma draw with a shape
    between 0.1 and 1, so most of the mass sits on a few mutation types.
    """
    if count < 1:
        raise DomainError(f"need at least one signature, got {count}")
    rng = np.random.default_rng(seed)
    shapes = rng.uniform(0.1, 1.0, size=count)
    matrix = rng.gamma(shapes, size=(SBS96_ROWS, count))
    return SignatureCatalog(names=tuple(f"SYN{j + 1}" for j in range(count)), mutation_types=sbs96_labels(),
                            matrix=_floor_and_normalize(matrix))


def _sweep_cell(task: tuple) -> dict:
    name, c, method, grid_value, mc_samples, seed_sequence, cfg = task
    row = {"signature": name, "method": method, "grid_value": grid_value, "mc_mean_cosine_error": np.nan,
           "mc_se": np.nan, "taylor": np.nan, "converged": True}
    if method == "mean":
        params = mean_method(c, grid_value)
    else:
        try:
            params = solve_max_density(c, MeanCosineError(kappa=grid_value), cfg).params
        except ConvergenceFailure as e:
            logger.warning("Signature %s at kappa=%g: %s", name, grid_value, e.message)
            row["converged"] = False
            return row
    errors = cosine_errors(dirichlet_sample_matrix(params, np.random.default_rng(seed_sequence), mc_samples),
                           dirichlet_mean(params))
    row["mc_mean_cosine_error"] = float(errors.mean())
    row["mc_se"] = float(errors.std(ddof=1) / np.sqrt(mc_samples)) if mc_samples > 1 else np.nan
    row["taylor"] = taylor_mean_cosine_error(params)
    return row


def signature_scale_sweep(catalog: SignatureCatalog, method: str, grid, mc_samples: int = DEFAULT_MC_SAMPLES,
                          seed: int = DEFAULT_SEED, cfg: SolverConfig | None = None,
                          workers: int = 1) -> pd.DataFrame:
    """
    Monte Carlo mean cosine error for every signature and grid value: concentrations alpha for the
    mean method, target errors kappa for the maximum density method. Solver failures become rows
    with converged=False.
    """
    if method not in SWEEP_METHODS:
        raise DomainError(f"sweep method must be one of {SWEEP_METHODS}, got {method!r}")
    if len(catalog) == 0:
        raise CatalogError("cannot sweep an empty catalog")
    method_index = SWEEP_METHODS.index(method)
    tasks = [(name, c, method, float(value), mc_samples,
              np.random.SeedSequence(seed, spawn_key=(j, method_index, k)), cfg)
             for j, (name, c) in enumerate(catalog.items()) for k, value in enumerate(grid)]
    logger.info("Sweeping %d signatures x %d %s grid values", len(catalog), len(grid), method)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(_sweep_cell, tasks))
    else:
        rows = [_sweep_cell(task) for task in tasks]
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def sweep_summary(table: pd.DataFrame) -> pd.DataFrame:
    """Cross-signature average, quartiles and IQR of the Monte Carlo errors, per method and grid value."""
    grouped = table.dropna(subset=["mc_mean_cosine_error"]).groupby(["method", "grid_value"], sort=False)
    errors = grouped["mc_mean_cosine_error"]
    summary = pd.DataFrame({"average": errors.mean(), "q25": errors.quantile(0.25),
                            "q75": errors.quantile(0.75)}).reset_index()
    summary["iqr"] = summary["q75"] - summary["q25"]
    return summary.sort_values(["method", "average"], kind="mergesort", ignore_index=True)[SWEEP_SUMMARY_COLUMNS]


def iqr_at_matched_average(summary: pd.DataFrame) -> pd.DataFrame:
    """
    At each maximum density average, its IQR next to the mean method IQR interpolated to the same
    average. Averages outside the mean method's range are dropped.
    """
    mean_rows = summary[summary["method"] == "mean"].sort_values("average")
    max_rows = summary[summary["method"] == "max-density"].sort_values("average")
    low, high = mean_rows["average"].min(), mean_rows["average"].max()
    matched = max_rows[(max_rows["average"] >= low) & (max_rows["average"] <= high)]
    return pd.DataFrame({
        "average": matched["average"].to_numpy(),
        "iqr_max_density": matched["iqr"].to_numpy(),
        "iqr_mean": np.interp(matched["average"], mean_rows["average"], mean_rows["iqr"]),
    })
