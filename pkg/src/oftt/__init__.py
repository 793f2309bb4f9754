"""Entropy-conservative and entropy-stable finite-difference schemes for the
one-fluid two-temperature Euler equations in one and two dimensions."""

from oftt.eos import GasParams
from oftt.errors import AdmissibilityError, ConfigurationError, LogMeanDomainError, UnsupportedCaseError
from oftt.kernels import available_backends, get_backend, set_backend

__version__ = "0.1.0"

__all__ = [
    "GasParams",
    "AdmissibilityError",
    "ConfigurationError",
    "LogMeanDomainError",
    "UnsupportedCaseError",
    "available_backends",
    "get_backend",
    "set_backend",
]
