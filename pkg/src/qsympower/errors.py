"""Exception hierarchy shared by every module."""


class QSymError(Exception):
    """Base class for all errors raised by qsympower."""


class InvalidSubsetError(QSymError, ValueError):
    pass


class SizeError(QSymError, ValueError):
    pass


class RefinementError(QSymError, ValueError):
    pass


class DomainError(QSymError, ValueError):
    pass


class ConsistencyError(DomainError):
    pass


class PartitionError(QSymError, ValueError):
    pass


class SideError(QSymError, TypeError):
    """Raised when a quasisymmetric object meets a noncommutative one (or vice versa)."""


class ResourceError(QSymError):
    """An enumeration would exceed the configured size cap."""


class UsageError(QSymError, ValueError):
    pass


class ParseError(QSymError, ValueError):
    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        pointer = " " * position + "^"
        super().__init__(f"{reason} at position {position}\n  {text}\n  {pointer}")
