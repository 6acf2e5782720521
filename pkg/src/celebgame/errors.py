"""Exception types shared across the package."""


class CelebGameError(Exception):
    pass


class ValidationError(CelebGameError, ValueError):
    """An instance, profile or spec violates one of its invariants."""


class ParseError(CelebGameError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InstanceTooLarge(CelebGameError):
    pass


class WrongBeta(CelebGameError):
    pass


class NotExhaustive(CelebGameError):
    pass
