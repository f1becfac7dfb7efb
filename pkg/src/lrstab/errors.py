"""Exception hierarchy shared by the library and the CLI."""


class LrstabError(Exception):
    """Base class for every error raised by this package."""


class EmptyText(LrstabError):
    pass


class IoError(LrstabError, OSError):
    pass


class FormatError(LrstabError, ValueError):
    pass


class InvalidRange(LrstabError, ValueError):
    pass


class InvalidInterval(InvalidRange):
    pass


class TextTooLarge(LrstabError, ValueError):
    pass


class CorruptIndex(LrstabError, ValueError):
    pass
