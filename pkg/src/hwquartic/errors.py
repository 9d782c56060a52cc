"""Exception types shared across the package."""


class ModulusError(ValueError):
    """Bad modulus: not prime, too small, or incompatible between operands."""


class CapacityError(RuntimeError):
    """An exhaustive computation was requested beyond its configured bound."""


class PoleError(ArithmeticError):
    """A hypergeometric denominator factor vanished mod p within range."""


class IntegrityError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class ParseError(ValueError):
    """Syntax or degree error in a curve specification string."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
