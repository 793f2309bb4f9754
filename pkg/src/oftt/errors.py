class AdmissibilityError(ValueError):
    """A state left the admissible set (rho, p_e, p_i > 0)."""

    def __init__(self, message, index=None, stage=None):
        super().__init__(message)
        self.index = index
        self.stage = stage


class LogMeanDomainError(ValueError):
    """Logarithmic mean requested for a non-positive argument."""


class ConfigurationError(ValueError):
    """Inconsistent grid, boundary or run configuration."""


class UnsupportedCaseError(KeyError):
    """Case name is not in the catalog, or has no exact solution."""
