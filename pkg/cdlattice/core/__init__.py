"""Core shared components."""

from cdlattice.core.config import DEFAULT_LIMITS, Limits, resolve_limits
from cdlattice.core.exceptions import (
    CapacityError,
    CDLatticeError,
    ConfigurationError,
    InternalInconsistencyError,
    InvalidActionError,
    InvalidParameterError,
    InvalidSpecError,
    NotASublatticeError,
    NotNormalError,
    SpecSyntaxError,
    UnsupportedError,
)
from cdlattice.core.types import FamilyTag, HypothesisVerdict, RecognitionKind, Verdict, verdict

__all__ = [
    "CDLatticeError",
    "CapacityError",
    "ConfigurationError",
    "DEFAULT_LIMITS",
    "FamilyTag",
    "HypothesisVerdict",
    "InternalInconsistencyError",
    "InvalidActionError",
    "InvalidParameterError",
    "InvalidSpecError",
    "Limits",
    "NotASublatticeError",
    "NotNormalError",
    "RecognitionKind",
    "SpecSyntaxError",
    "UnsupportedError",
    "Verdict",
    "resolve_limits",
    "verdict",
]
