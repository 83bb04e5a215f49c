from .targets import TargetDistribution, TARGETS, get_target
from .proposals import ProposalSpec, BaseProposal, PROPOSALS, METHOD_ORDER, build_proposal, propose
from .sampler import MhCounters, MhRun, log_acceptance_ratio, mh_step, run_chain
from .diagnostics import acf, ks_distance
from .study import StudyResult, replicate_seed, replicate_study, tuning_grid, summarize_acf

__all__ = ["TargetDistribution", "TARGETS", "get_target", "ProposalSpec", "BaseProposal", "PROPOSALS",
           "METHOD_ORDER", "build_proposal", "propose", "MhCounters", "MhRun", "log_acceptance_ratio", "mh_step",
           "run_chain", "acf", "ks_distance", "StudyResult", "replicate_seed", "replicate_study", "tuning_grid",
           "summarize_acf"]
