"""Exception hierarchy shared by the library and the CLI."""

from typing import Any, Dict, Optional


class RegMatchError(Exception):
    """Base class for all regmatch errors.

    Not a ValueError subclass: pydantic validators must not wrap these.
    """

    exit_code = 1

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness or {}


class InputError(RegMatchError):
    """Malformed or unusable input."""


class GraphParseError(InputError):
    """A graph or matching text could not be decoded."""

    def __init__(
        self,
        message: str,
        offset: Optional[int] = None,
        line: Optional[int] = None,
    ):
        location = ""
        if offset is not None:
            location = f" (byte offset {offset})"
        elif line is not None:
            location = f" (line {line})"
        super().__init__(f"{message}{location}", {"offset": offset, "line": line})
        self.offset = offset
        self.line = line


class InfeasibleError(InputError):
    """Requested parameters admit no graph (e.g. odd degree sum)."""


class NotRegularError(InputError):
    """A regular graph was required."""


class ContractViolationError(InputError):
    """A caller broke an operation's precondition."""


class StructureError(ContractViolationError):
    """Declared structure (e.g. bipartition) does not match the graph."""


class RetryExhaustedError(RegMatchError):
    """A rejection sampler ran out of attempts."""


class BudgetExceededError(RegMatchError):
    """An exhaustive computation would exceed its configured budget."""


class TheoryViolationError(RegMatchError):
    """A fact guaranteed by the underlying theorems failed to hold.

    The witness describes the offending object so the failure can be replayed.
    """

    exit_code = 2


class FactorCriticalityError(TheoryViolationError):
    """A component expected to be factor-critical is not."""


class UnsupportedRegimeError(RegMatchError):
    """No certified construction exists for the graph's regime."""

    exit_code = 2
