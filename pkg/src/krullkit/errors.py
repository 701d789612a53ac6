"""Exception types shared across the toolkit.

Every domain error carries a stable ``identifier`` string, which the command
line interface uses when printing errors, so scripted callers can match on it
without depending on Python class names.
"""

from __future__ import annotations


class KrullkitError(Exception):
    """Base class for all domain errors raised by this package."""

    identifier = "Error"


class FieldMismatchError(KrullkitError):
    """Two scalars from different fields were combined."""

    identifier = "FieldMismatch"


class RingMismatchError(KrullkitError):
    """Two polynomials from different rings were combined."""

    identifier = "RingMismatch"


class ExhaustedFieldError(KrullkitError):
    """A nonzero-element enumeration ran past the end of a finite field."""

    identifier = "Exhausted"


class FieldTooSmallError(KrullkitError):
    """A point search needed more distinct nonzero scalars than the field has."""

    identifier = "FieldTooSmall"


class ZeroPolynomialError(KrullkitError):
    """The zero polynomial was passed where a nonzero one is required."""

    identifier = "ZeroPolynomial"


class NotHomogeneousError(KrullkitError):
    """An inhomogeneous polynomial was passed where a form is required."""

    identifier = "NotHomogeneous"


class PreconditionViolatedError(KrullkitError):
    """An input broke a documented precondition of the operation."""

    identifier = "PreconditionViolated"


class NotMonicError(KrullkitError):
    """A generator was not monic in the last variable."""

    identifier = "NotMonic"


class ZeroCosetError(KrullkitError):
    """The element reduces to zero modulo the generator."""

    identifier = "ZeroCoset"


class DegenerateCharPolyError(KrullkitError):
    """The characteristic polynomial yields no usable constant witness."""

    identifier = "DegenerateCharPoly"
