"""Exception hierarchy shared by every jacring module."""


class JacRingError(Exception):
    """Base class for all jacring errors."""


class ParseError(JacRingError, ValueError):
    """Malformed polynomial text. ``position`` is the 0-based offset of the offending token."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class RingMismatch(JacRingError, ValueError):
    pass


class NotHomogeneous(JacRingError, ValueError):
    pass


class CharacteristicError(JacRingError, ValueError):
    """The requested operation divides by an integer the field characteristic divides."""


class SingularInput(JacRingError):
    """The Jacobian quotient is not Artinian, so the hypersurface is singular."""

    def __init__(self, message, dims=None):
        self.dims = dims or {}
        super().__init__(message)


class NotArtinian(JacRingError):
    """No top degree could be found below the scan cap."""

    def __init__(self, message, dims=None):
        self.dims = dims or {}
        super().__init__(message)


class NoStabilization(JacRingError):
    """Graded dimensions were still changing at the cap (non-isolated singularities)."""

    def __init__(self, message, dims=None):
        self.dims = dims or {}
        super().__init__(message)
