"""Exception types shared across the library."""


class NhlabError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(NhlabError, ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitExceeded(NhlabError):
    """A computation would exceed a configured size bound."""


class ChainRejected(InvalidParameter):
    """A root sequence fails the simplicity test at some position.

    ``position`` is the 1-based index of the offending entry.  When the
    entry is a member of the current positive system but decomposable,
    ``witness`` holds a pair of roots from that system summing to it.
    """

    def __init__(self, message, position, witness=None):
        super().__init__(message)
        self.position = position
        self.witness = witness
