"""Exception types shared across the package."""


class HChromaticError(ValueError):
    """Base class for all library errors."""


class ParseError(HChromaticError):
    """Malformed graph text. ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class PreconditionError(HChromaticError):
    """An operation was called outside the hypotheses it is valid for."""


class UnsupportedInputError(PreconditionError):
    """Input carries structure (e.g. loops) the operation does not handle."""


class RefusalError(HChromaticError):
    """The requested brute-force computation exceeds the configured size limit."""
