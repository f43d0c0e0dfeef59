"""Shared exception types."""

from __future__ import annotations


class PreconditionViolation(ValueError):
    """A structural precondition does not hold (e.g. strong connectivity)."""


class OracleUnavailable(Exception):
    """A mu oracle cannot answer for the queried vertex set."""

    def __init__(self, subset, oracle_name: str):
        self.subset = frozenset(subset)
        self.oracle_name = oracle_name
        super().__init__(f"oracle {oracle_name!r} has no value for {sorted(self.subset)}")


class MuBoundExceeded(Exception):
    """Exact solving was abandoned: the value is provably above the caller's limit.

    Carries the best bounds known at the time of abandonment.
    """

    def __init__(self, lower_bound: int, upper_bound: int):
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        super().__init__(f"mu is at least {lower_bound} (upper bound {upper_bound})")


class ConstructionFailed(Exception):
    """A constructive stage could not complete on the given input.

    ``stage`` names the failing step; ``step`` and ``depth`` locate it inside
    iterated or recursive pipelines when applicable.
    """

    def __init__(self, stage: str, message: str = "", step: int | None = None,
                 depth: int | None = None):
        self.stage = stage
        self.step = step
        self.depth = depth
        where = stage
        if step is not None:
            where += f" (step {step})"
        if depth is not None:
            where += f" (depth {depth})"
        super().__init__(f"{where}: {message}" if message else where)


class ParseError(ValueError):
    """Malformed instance, pattern, or witness text."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")
