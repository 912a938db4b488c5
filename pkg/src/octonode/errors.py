"""Exception hierarchy shared by every subpackage."""


class OctonodeError(Exception):
    """Base class for all errors raised by octonode."""


class ParseError(OctonodeError, ValueError):
    """Malformed polynomial text or input file.

    ``position`` is a 0-based character offset into the offending line and
    ``line`` a 1-based line number when the error came from a file.
    """

    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.message = message
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"col {position + 1}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class RingMismatchError(OctonodeError, ValueError):
    """Operands live in different ring contexts."""


class ResourceLimitExceeded(OctonodeError, RuntimeError):
    """A Groebner computation hit its S-pair or degree budget."""


class PreconditionError(OctonodeError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class NotZeroDimensionalError(PreconditionError):
    """An operation needing a zero-dimensional scheme got a larger one."""
