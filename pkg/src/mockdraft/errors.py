"""Exception types raised across the package."""


class MockDraftError(Exception):
    """Base class for every error raised by :mod:`mockdraft`."""


class DuplicateItem(MockDraftError, ValueError):
    pass


class EmptyId(MockDraftError, ValueError):
    pass


class ParseError(MockDraftError, ValueError):
    """A malformed input row. ``line`` is the 1-based line number in the file."""

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())


class DuplicateRank(ParseError):
    pass


class MissingActual(MockDraftError, LookupError):
    pass


class UnknownSeason(MissingActual):
    pass


class TiedInput(MockDraftError, ValueError):
    pass


class EmptyList(MockDraftError, ValueError):
    pass


class DomainError(MockDraftError, ValueError):
    pass


class EmptyUniverse(MockDraftError, ValueError):
    pass


class NoMocks(MockDraftError, ValueError):
    pass


class NoMocksInWindow(NoMocks):
    pass


class DegenerateSeason(MockDraftError, ValueError):
    pass
