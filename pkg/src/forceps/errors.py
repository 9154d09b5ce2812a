"""Shared exception types."""

from __future__ import annotations


class ForcepsError(Exception):
    """Base class for operational errors raised by this package."""


class GuardError(ForcepsError):
    """An enumeration guard was exceeded without an explicit override."""


class AuditFailure(ForcepsError):
    """A computation contradicted a claimed identity or bound.

    This is a reportable result, not a crash: ``finding`` holds a small
    JSON-ready dict describing what failed and on which instance.
    """

    def __init__(self, message: str, finding: dict):
        super().__init__(message)
        self.finding = finding
