"""Shared exception types."""


class TreeplanError(Exception):
    """Base class for all package errors."""


class DuplicateName(TreeplanError):
    """A tool with this name is already registered."""


class InvalidCard(TreeplanError):
    """A tool card failed validation; carries the violation report."""

    def __init__(self, violations):
        self.violations = list(violations)
        msg = "; ".join(f"{v.field}: {v.message}" for v in self.violations)
        super().__init__(f"invalid tool card: {msg}")


class NotAdmissible(TreeplanError):
    """The tool's required inputs cannot be bound from the current context."""


class MalformedVerdict(TreeplanError):
    """No JSON object with a numeric 'score' field could be extracted."""


class EvaluatorUnavailable(TreeplanError):
    """External judge unreachable after retries."""


class TreeExhausted(TreeplanError):
    """The search tree has no expandable nodes left."""


class EmptyTree(TreeplanError):
    """No rollouts have completed; there is no trajectory to extract."""


class InvalidParams(TreeplanError):
    """Generator parameters out of range."""


class SuiteParseError(TreeplanError):
    """A task suite file could not be parsed."""


class InsufficientPoints(TreeplanError):
    """An efficiency series needs at least two points."""


class IoFailure(TreeplanError):
    """A report file could not be written."""
