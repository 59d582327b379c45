"""Shared exception types with structured payloads for the CLI exit codes."""

from __future__ import annotations


class StabkitError(Exception):
    """Base class for all package errors."""


class SchemaError(StabkitError):
    """Invalid input data; `invariant` names the violated requirement."""

    def __init__(self, invariant: str, detail: str):
        self.invariant = invariant
        self.detail = detail
        super().__init__(f"{invariant}: {detail}")


class UnknownReferenceError(StabkitError):
    """A knot, disc or scenario reference that the catalog cannot resolve."""


class HypothesisError(StabkitError):
    """A theorem was invoked on inputs that fail its preconditions."""

    def __init__(self, hypothesis: str, detail: str):
        self.hypothesis = hypothesis
        self.detail = detail
        super().__init__(f"{hypothesis}: {detail}")
