"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """A parameter combination outside an operation's domain.

    Carries a short machine-readable ``code`` so the CLI can surface
    failures without parsing message text.
    """

    def __init__(self, message, code="domain"):
        super().__init__(message)
        self.code = code


class FormatError(DomainError):
    """Malformed serialized input (graph6, grid files, pattern strings)."""

    def __init__(self, message, offset=None):
        super().__init__(message, code="format")
        self.offset = offset


class NoneExistError(DomainError):
    """An exhaustive search verified that no qualifying graph exists."""

    def __init__(self, message):
        super().__init__(message, code="none-exist")


class SplitPathFreeError(DomainError):
    """The split graph contains no path of the requested length."""

    def __init__(self, message):
        super().__init__(message, code="path-free")
