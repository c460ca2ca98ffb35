"""Exact computations for the A_{r-1} / r-spin cohomological field theory in genus zero."""
from fractions import Fraction

from .errors import (
    BroadSectorError,
    DomainError,
    InsufficientWindowError,
    IntegrabilityError,
    NotConcaveError,
    ScaleLimitError,
)
from .polynomial import Poly

__version__ = "0.1.0"

__all__ = [
    "BroadSectorError",
    "DomainError",
    "Fraction",
    "InsufficientWindowError",
    "IntegrabilityError",
    "NotConcaveError",
    "Poly",
    "ScaleLimitError",
]
