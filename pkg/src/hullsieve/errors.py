"""Exception types raised by hullsieve."""


class HullError(Exception):
    """Base class for every error raised by this package."""


class EmptyInputError(HullError, ValueError):
    pass


class CoincidentWithAnchorError(HullError, ValueError):
    pass


class LengthMismatchError(HullError, ValueError):
    pass


class TooFewPointsError(HullError, ValueError):
    pass


class TooLargeError(HullError, ValueError):
    pass


class ZeroChunksError(HullError, ValueError):
    pass


class IndexOutOfRangeError(HullError, IndexError):
    pass


class ParseError(HullError, ValueError):
    """Malformed line in a point file. ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None, path=None):
        self.lineno = lineno
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if lineno is not None:
            where += f"{lineno}: "
        elif where:
            where += " "
        super().__init__(where + message)
