class ParseError(ValueError):
    pass


class RangeError(ValueError):
    pass


class SpecMismatch(ValueError):
    pass


class LimitExceeded(RuntimeError):
    """Raised by verification drivers when an enumeration hit its element limit."""

    def __init__(self, message, size=None):
        super().__init__(message)
        self.size = size
