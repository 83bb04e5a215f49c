from typing import Literal

import numpy as np

# solver
DEFAULT_RHO = 0.5
DEFAULT_MAXITER = 100
DEFAULT_TOL = 1e-8
DEFAULT_MAX_RESTARTS = 5
RESTART_RHO_FACTOR = 5
RESTART_MAXITER_FACTOR = 5
DEFAULT_MAX_TOTAL_ITERATIONS = 20_000
DIRICHLET_INIT_SCALE = 10.0
CURVE_SCAN_BOUND = 40.0
CURVE_SCAN_POINTS = 161
CURVE_MAX_STARTS = 2
KKT_TOLERANCE = 1e-6

# special functions
ASYMPTOTIC_THRESHOLD = 6.0
INC_BETA_EPS = 1e-14
INC_BETA_MAXITER = 300
INV_INC_BETA_TOL = 1e-12
INV_INC_BETA_MAXITER = 400
FPMIN = 1e-300

# metropolis-hastings
DEFAULT_MH_ITERS = 10_000
DEFAULT_MH_BURNIN = 100
DEFAULT_MH_REPS = 100
DEFAULT_MH_INITIAL_STATE = 0.25
DEFAULT_MH_VARIANCE = 0.1
DEFAULT_MH_ALPHA = 5.0
DEFAULT_ACF_MAX_LAG = 50
MH_METHODS_LITERAL = Literal["I", "II", "III", "IV", "M-alpha", "M-v", "M-adaptive"]

# rare-event coverage
DEFAULT_COVERAGE_N = 100
DEFAULT_COVERAGE_ALPHA = 10.0
DEFAULT_COVERAGE_C = 1e-3
DEFAULT_COVERAGE_LEVEL = 0.95
DEFAULT_THETA_GRID = tuple(np.geomspace(1e-6, 0.9, 400).tolist())
NEGLIGIBLE_LOG_MASS = -40.0
PRIOR_METHODS_LITERAL = Literal["mean", "max-density"]
TARGET_MODES_LITERAL = Literal["fixed", "oracle"]

# percentile / logit figures
PERCENTILES = (0.05, 0.25, 0.5, 0.75, 0.95)
DEFAULT_FIGURE_ALPHAS = (0.1, 0.5, 1.0, 5.0, 10.0, 50.0)
DEFAULT_LOGIT_ALPHAS = (0.1, 1.0, 10.0)
DEFAULT_Y_GRID = tuple(np.geomspace(1e-3, 50.0, 400).tolist())

# mutational signatures
SBS96_ROWS = 96
COSMIC_FLOOR = 1e-10
DEFAULT_MC_SAMPLES = 10_000
DEFAULT_ALPHA_GRID = tuple(np.geomspace(10.0, 1e4, 8).tolist())
DEFAULT_KAPPA_GRID = tuple(np.geomspace(3e-3, 0.3, 8).tolist())

DEFAULT_SEED = 0
DEFAULT_MESSAGE_ERROR = {"message": "Something went wrong", "alias": "unexpected_error"}
