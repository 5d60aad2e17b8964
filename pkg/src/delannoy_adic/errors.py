"""Exception hierarchy shared by all modules and mapped to CLI exit codes."""


class DelannoyError(Exception):
    """Base class; the CLI reports these with exit status 1."""


class DomainError(DelannoyError, ValueError):
    """An argument lies outside the domain of the operation."""


class MaximalPath(DomainError):
    """The successor of a maximal path is undefined."""


class MinimalPath(DomainError):
    """The predecessor of a minimal path is undefined."""


class NotDivisible(DomainError):
    """``s - (1 + x) r`` is not divisible by ``x``."""


class ResourceLimit(DelannoyError):
    """A verification range exceeds the configured limit."""


class IterationCapExceeded(DelannoyError, RuntimeError):
    """A reduction loop ran past its safety cap."""


class TruncationExhausted(DelannoyError):
    """A finite truncation ran out before the requested number of steps.

    ``symbols`` holds what was produced before the truncation became maximal.
    """

    def __init__(self, symbols, requested):
        self.symbols = tuple(symbols)
        self.produced = len(self.symbols)
        self.requested = requested
        super().__init__(
            f"truncated path became maximal after {self.produced} of "
            f"{requested} symbols"
        )
