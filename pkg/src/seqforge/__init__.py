"""seqforge: optimal even-length quaternary sequences from interleaved binary columns."""

__version__ = "0.1.0"

from .errors import ConventionError, DomainError, InvariantError
from .seqcore import (
    BinarySequence,
    CorrelationSpectrum,
    GaussianInt,
    QuaternarySequence,
    auto_spectrum,
    cross_correlation,
    is_optimal_even_length,
    r_max_squared,
)
from .construction import ConstructionInput, catalog, construct, verify_pattern

__all__ = [
    "ConventionError",
    "DomainError",
    "InvariantError",
    "BinarySequence",
    "CorrelationSpectrum",
    "GaussianInt",
    "QuaternarySequence",
    "auto_spectrum",
    "cross_correlation",
    "is_optimal_even_length",
    "r_max_squared",
    "ConstructionInput",
    "catalog",
    "construct",
    "verify_pattern",
]
