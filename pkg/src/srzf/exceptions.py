"""Exception types raised across the package."""


class SRZFError(Exception):
    """Base class for all package errors."""


class InputError(SRZFError, ValueError):
    """Malformed input: shape mismatch, empty vectors, non-integral loads."""


class ParameterError(SRZFError, ValueError):
    """A numerical parameter lies outside its admissible range."""


class DegeneratePrecoderError(SRZFError, ArithmeticError):
    """The shaping matrix is identically zero and cannot be normalized."""
