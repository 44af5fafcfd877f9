"""Exception types shared across the package."""


class FswapError(Exception):
    """Base class for all errors raised by fswapnet."""


class InvalidArgument(FswapError, ValueError):
    pass


class SizeExceeded(FswapError):
    """An exhaustive routine was asked to run beyond its size cap."""

    def __init__(self, size, limit, what="vertex count"):
        super().__init__(f"{what} {size} exceeds the limit of {limit}")
        self.size = size
        self.limit = limit


class MalformedNetwork(FswapError):
    pass


class UnsupportedMode(FswapError, ValueError):
    pass
