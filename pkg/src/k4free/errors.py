"""Exception types shared across the package."""


class DomainError(ValueError):
    """A precondition on an operation's arguments was violated."""


class SizeCapError(DomainError):
    """An operation refused to run because the input exceeds its size cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: input has {size} vertices, cap is {cap}")
