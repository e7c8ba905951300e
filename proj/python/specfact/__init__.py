"""Outer spectral factors on the circle and continuity checks for f -> f+."""

from ._core import *  # noqa: F401,F403
from ._core import (
    ConditioningError,
    DomainError,
    ParameterError,
    ParseError,
    PrecisionBudgetError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
