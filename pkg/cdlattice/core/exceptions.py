"""Custom exception hierarchy for cd-lattice."""
from typing import Iterable, Optional


class CDLatticeError(Exception):
    """Base exception for all cd-lattice errors."""

    code = "error"


class ConfigurationError(CDLatticeError):
    """Raised when limits or configuration validation fails."""

    code = "configuration-error"

    def __init__(self, message: str, *, details: Optional[Iterable[str]] = None) -> None:
        super().__init__(message)
        self.details = list(details or [])


class InvalidParameterError(CDLatticeError):
    """Raised when a constructor or query receives an out-of-range parameter."""

    code = "invalid-parameter"


class InvalidActionError(CDLatticeError):
    """Raised when a semidirect-product action is not a homomorphism into Aut(N)."""

    code = "invalid-action"


class NotNormalError(CDLatticeError):
    """Raised when a quotient is requested by a non-normal subgroup."""

    code = "not-normal"


class CapacityError(CDLatticeError):
    """Raised when a configured order, subgroup or Hasse cap is exceeded."""

    code = "capacity-error"

    def __init__(
        self,
        message: str,
        *,
        limit: Optional[int] = None,
        partial_count: Optional[int] = None,
    ) -> None:
        super().__init__(message)
        self.limit = limit
        self.partial_count = partial_count


class NotASublatticeError(CDLatticeError):
    """Raised when a member set is not closed under meet and join."""

    code = "not-a-sublattice"


class InternalInconsistencyError(CDLatticeError):
    """Raised when a lattice invariant that must hold is broken."""

    code = "internal-inconsistency"


class SpecSyntaxError(CDLatticeError):
    """Raised when a group specification cannot be tokenized or parsed."""

    code = "syntax-error"

    def __init__(self, message: str, *, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidSpecError(CDLatticeError):
    """Raised when a group specification is well-formed but names an invalid group."""

    code = "invalid-spec"


class UnsupportedError(CDLatticeError):
    """Raised when an operation is unavailable for the given lattice."""

    code = "unsupported"
