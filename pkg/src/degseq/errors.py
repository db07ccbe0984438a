"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: input problems (syntax or violated
invariants) exit 2, precondition/limit problems exit 3.
"""


class DegseqError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DegseqError):
    """Malformed instance or forest document (syntax level)."""


class InvalidInstanceError(DegseqError):
    """Structurally well-formed input violating a data invariant."""


class PreconditionError(DegseqError):
    """Operation called outside its contract (bad m, cap exceeded, ...)."""


class CapExceededError(PreconditionError):
    """An exact/brute-force routine was asked to exceed its size cap."""


class InfeasibleAssignmentError(DegseqError):
    """A binary assignment violates an IP constraint row."""

    def __init__(self, row_name, message):
        super().__init__(message)
        self.row_name = row_name
