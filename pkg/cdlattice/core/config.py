"""Capacity limits shared by every construction and enumeration entry point."""
from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from cdlattice.core.exceptions import ConfigurationError

DEFAULT_MAX_ORDER = 128
DEFAULT_MAX_SUBGROUPS = 100_000
DEFAULT_MAX_HASSE_SUBGROUPS = 20_000
DEFAULT_MAX_ASSOCIATIVITY_ORDER = 512


class Limits(BaseModel):
    """Order and lattice-size caps.

    ``max_order`` bounds every constructed group; ``max_associativity_order`` is the
    hard ceiling above which constructors refuse because the full O(n^3) axiom
    check would no longer run.
    """

    max_order: int = Field(default=DEFAULT_MAX_ORDER, ge=1)
    max_subgroups: int = Field(default=DEFAULT_MAX_SUBGROUPS, ge=1)
    max_hasse_subgroups: int = Field(default=DEFAULT_MAX_HASSE_SUBGROUPS, ge=1)
    max_associativity_order: int = Field(default=DEFAULT_MAX_ASSOCIATIVITY_ORDER, ge=1)

    model_config = ConfigDict(frozen=True, extra="forbid")

    @model_validator(mode="after")
    def _validate_order_ceiling(self) -> "Limits":
        if self.max_order > self.max_associativity_order:
            msg = (
                f"max_order ({self.max_order}) cannot exceed max_associativity_order "
                f"({self.max_associativity_order})."
            )
            raise ValueError(msg)
        return self

    def with_overrides(
        self,
        *,
        max_order: Optional[int] = None,
        max_subgroups: Optional[int] = None,
    ) -> "Limits":
        """Return a copy with CLI-style overrides applied and re-validated."""

        payload: Dict[str, Any] = self.model_dump()
        if max_order is not None:
            payload["max_order"] = max_order
        if max_subgroups is not None:
            payload["max_subgroups"] = max_subgroups
        try:
            return Limits.model_validate(payload)
        except ValidationError as exc:
            raise ConfigurationError(
                "Limit overrides are invalid.", details=_format_validation_errors(exc)
            ) from exc

    @classmethod
    def from_yaml(cls, path: Path | str) -> "Limits":
        """Load limits from a YAML mapping such as ``{max_order: 64}``."""

        file_path = Path(path)
        text = file_path.read_text(encoding="utf-8")

        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            details = [_format_yaml_error(exc)] if str(exc).strip() else []
            message = f"Failed to parse limits YAML at {file_path}."
            raise ConfigurationError(message, details=details) from exc

        if data is None:
            data = {}
        if not isinstance(data, dict):
            message = f"Limits configuration in {file_path} must be a mapping of keys to values."
            raise ConfigurationError(message)

        # Accept either a bare mapping or one nested under ``limits``.
        if set(data) == {"limits"} and isinstance(data["limits"], dict):
            data = data["limits"]

        try:
            return cls.model_validate(data)
        except ValidationError as exc:
            message = f"Limits configuration in {file_path} is invalid."
            raise ConfigurationError(message, details=_format_validation_errors(exc)) from exc

    def to_yaml(self, path: Path | str) -> Path:
        """Persist the limits to a YAML file."""

        file_path = Path(path)
        with file_path.open("w", encoding="utf-8") as handle:
            yaml.safe_dump({"limits": self.model_dump(mode="json")}, handle, sort_keys=False)
        return file_path


DEFAULT_LIMITS = Limits()


def resolve_limits(limits: Optional[Limits]) -> Limits:
    """Return ``limits`` or the package defaults."""

    return limits if limits is not None else DEFAULT_LIMITS


def _format_validation_errors(exc: ValidationError) -> List[str]:
    """Return human-friendly strings describing validation failures."""

    details: List[str] = []
    for error in exc.errors():
        location = " → ".join(str(segment) for segment in error.get("loc", ()))
        message = error.get("msg") or "Invalid value."
        if location:
            details.append(f"{location}: {message}")
        else:
            details.append(message)
    if not details:
        details.append(str(exc))
    return details


def _format_yaml_error(error: yaml.YAMLError) -> str:
    """Provide a concise YAML parsing error message for users."""

    problem_mark = getattr(error, "problem_mark", None)
    if problem_mark is not None:
        return (
            f"{getattr(error, 'problem', error)} (line {problem_mark.line + 1}, column {problem_mark.column + 1})"
        )
    return str(error)


__all__ = [
    "DEFAULT_LIMITS",
    "DEFAULT_MAX_ASSOCIATIVITY_ORDER",
    "DEFAULT_MAX_HASSE_SUBGROUPS",
    "DEFAULT_MAX_ORDER",
    "DEFAULT_MAX_SUBGROUPS",
    "Limits",
    "resolve_limits",
]
