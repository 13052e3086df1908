"""Exception hierarchy for chaosbox.

Everything raised on purpose derives from ``ChaosboxError``. The CLI maps
these to exit code 2; ``OSError`` maps to exit code 3.
"""


class ChaosboxError(Exception):
    """Base class for all chaosbox errors."""


class ParameterError(ChaosboxError, ValueError):
    """A parameter, key component or image violates its stated range."""


class KeyFileError(ChaosboxError, ValueError):
    """A key file is missing a mandatory field or holds an invalid value."""

    def __init__(self, message: str, fields: list[str] | None = None):
        super().__init__(message)
        self.fields = fields or []


class ImageFormatError(ChaosboxError, ValueError):
    """A PGM stream could not be parsed."""


class BadMagicError(ImageFormatError):
    """The stream does not start with the binary PGM magic ``P5``."""


class UnsupportedDepthError(ImageFormatError):
    """The PGM maxval is not 255."""


class TruncatedPayloadError(ImageFormatError):
    """The pixel payload length does not match width x height."""


class BankFormatError(ChaosboxError, ValueError):
    """An S-box bank file is malformed or holds a non-bijective box."""
