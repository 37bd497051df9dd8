class CapExceeded(RuntimeError):
    """An enumeration or factorial computation would exceed a configured bound."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class InputError(ValueError):
    """Malformed or inconsistent input data."""


class RootFindingError(RuntimeError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
