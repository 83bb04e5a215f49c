KS_COLUMNS = ["target", "method", "rep", "seed", "ks", "acceptance_rate", "solver_failures", "infeasible_returns"]
ACF_SUMMARY_COLUMNS = ["target", "method", "lag", "acf_mean", "acf_sd"]
ACF_CURVE_COLUMNS = ["target", "method", "rep", "lag", "acf"]
COVERAGE_COLUMNS = ["mode", "method", "theta0", "coverage"]
PERCENTILE_COLUMNS = ["method", "c", "alpha", "percentile", "value"]
CDF_COLUMNS = ["method", "c", "alpha", "x", "cdf"]
LOGIT_COLUMNS = ["method", "c", "alpha", "y", "density"]
LOGIT_SAMPLE_COLUMNS = ["method", "alpha", "sample", "y"]
SWEEP_COLUMNS = ["signature", "method", "grid_value", "mc_mean_cosine_error", "mc_se", "taylor", "converged"]
SWEEP_SUMMARY_COLUMNS = ["method", "grid_value", "average", "q25", "q75", "iqr"]

MANIFEST_FILE_NAME = "manifest.json"
