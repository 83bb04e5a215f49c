from .hpd import hpd_interval, hpd_contains
from .coverage import CoverageSpec, prior_params, exact_coverage, coverage_curve
from .curves import location_params, location_params_dirichlet, percentile_table, cdf_table, logit_comparison, \
    logit_comparison_dirichlet
from .signatures import SignatureCatalog, sbs96_labels, load_cosmic, write_catalog, synthetic_catalog, \
    signature_scale_sweep, sweep_summary, iqr_at_matched_average

__all__ = ["hpd_interval", "hpd_contains", "CoverageSpec", "prior_params", "exact_coverage", "coverage_curve",
           "location_params", "location_params_dirichlet", "percentile_table", "cdf_table", "logit_comparison",
           "logit_comparison_dirichlet", "SignatureCatalog", "sbs96_labels", "load_cosmic", "write_catalog",
           "synthetic_catalog", "signature_scale_sweep", "sweep_summary", "iqr_at_matched_average"]
