"""Exception hierarchy.

Everything raised on purpose derives from ``WorkbenchError`` so the CLI can
map it to exit status 1; plain ``AssertionError`` is reserved for internal
consistency failures.
"""


class WorkbenchError(ValueError):
    pass


class DomainError(WorkbenchError):
    """Argument outside the documented domain of an operation."""


class ParseError(WorkbenchError):
    pass


class UnsupportedPredicateError(DomainError):
    pass


class MembershipError(DomainError):
    """Input partition is not a member of the class the map is defined on."""


class NoSolutionError(WorkbenchError):
    pass


class PreconditionError(WorkbenchError):
    pass


class BoundNotMetError(WorkbenchError):
    """A map needs a structure that a large enough weight would guarantee, but it is absent."""


class NotInRangeError(WorkbenchError):
    pass


class OutOfScopeError(WorkbenchError):
    pass


class ResourceError(WorkbenchError):
    pass
