"""Exception types shared across the package."""

from __future__ import annotations


class ValueTrustError(Exception):
    """Base class for every error raised by this package."""


class UniverseError(ValueTrustError):
    """Unknown value name, or a malformed opposition relation."""


class ConsistencyError(ValueTrustError):
    """A value set that must be consistent contains an opposing pair."""


class ScenarioError(ValueTrustError):
    """A scenario document failed parsing, schema, or semantic validation."""

    def __init__(self, message: str, *, location: str | None = None, kind: str = "semantic"):
        self.location = location
        self.kind = kind
        super().__init__(f"{location}: {message}" if location else message)


class NoCandidateError(ValueTrustError):
    """No capable agent other than the trustor was available for a step.

    ``trace`` holds the step details completed before the failure, so
    callers can surface a partial report.
    """

    def __init__(self, message: str, *, step: int, action: str, trace: list | None = None):
        self.step = step
        self.action = action
        self.trace = trace if trace is not None else []
        super().__init__(message)


class SizeGuardError(ValueTrustError):
    """An exhaustive search was refused because the input exceeds its bound."""


class GeneratorError(ValueTrustError):
    """A population draw could not satisfy the scenario well-formedness rules."""
