"""Exception hierarchy shared by every module and mapped onto CLI exit codes."""


class FriezeError(Exception):
    """Base class for all package errors."""

    exit_code = 2


class DomainError(FriezeError, ValueError):
    """An argument lies outside the domain of an operation (bad index, bad arc)."""


class PreconditionError(FriezeError, ValueError):
    """An operation was called on an object that does not meet its precondition."""


class InvalidFriezeError(FriezeError, ValueError):
    """A quiddity row would produce a non-positive entry."""


class InvalidTriangulationError(FriezeError, ValueError):
    """An arc family is not a triangulation (crossing, not maximal, malformed)."""

    exit_code = 3


class ResourceLimitError(FriezeError, RuntimeError):
    """A configured size limit was exceeded, such as a window or enumeration bound."""

    exit_code = 4
