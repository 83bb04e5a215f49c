__all__ = ['MaxDensError', 'DomainError', 'InfeasibleConstraint', 'ConvergenceFailure', 'SingularSystem',
           'DegenerateSeries', 'CatalogError']


class MaxDensError(Exception):
    alias = "maxdens_error"
    exit_code = 1

    def __init__(self, message: str, **extra):
        super().__init__(message)
        self.message = message
        self.extra = extra

    def as_dict(self) -> dict:
        return {"message": self.message, "alias": self.alias, **self.extra}


class DomainError(MaxDensError, ValueError):
    """An argument lies outside the domain of a function."""
    alias = "domain_error"


class InfeasibleConstraint(MaxDensError):
    """No Beta/Dirichlet distribution satisfies the requested scale constraint."""
    alias = "infeasible_constraint"
    exit_code = 2


class ConvergenceFailure(MaxDensError):
    alias = "convergence_failure"
    exit_code = 3

    def __init__(self, message: str, report=None, **extra):
        super().__init__(message, **extra)
        self.report = report


class SingularSystem(ConvergenceFailure):
    """The Newton KKT system could not be solved; the solver restarts with a smaller step."""
    alias = "singular_system"


class DegenerateSeries(DomainError):
    alias = "degenerate_series"


class CatalogError(MaxDensError):
    alias = "catalog_error"
