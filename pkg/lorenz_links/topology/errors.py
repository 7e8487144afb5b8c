"""
Error Types
===========
Input errors are ``ValueError`` subclasses (mapped to exit code 2 / HTTP 400);
internal inconsistencies are ``RuntimeError`` subclasses and must surface.
"""


class LinkInputError(ValueError):
    """Malformed or invalid user input, or a violated operation precondition"""


class InvariantError(RuntimeError):
    """An identity that must hold did not (inexact division, parity, ...)"""


class CrossingLimitExceeded(InvariantError):
    """The bracket state sum was requested above the configured crossing cap"""

    def __init__(self, crossings: int, limit: int):
        self.crossings = crossings
        self.limit = limit
        super().__init__(f"{crossings} crossings exceeds the bracket limit of {limit}")
