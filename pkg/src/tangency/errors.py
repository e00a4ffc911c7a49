"""Exception types raised across the package.

The CLI maps these onto exit codes, so every domain failure derives from
:class:`TangencyError`.
"""


class TangencyError(ValueError):
    """Base class for domain errors (bad input values, not bad usage)."""


class CompositionError(TangencyError):
    """A composition entry is not a positive integer."""


class ParityError(TangencyError):
    """A norm or degree has the wrong parity for the requested operation."""


class DegreeError(TangencyError):
    """A composition does not fit inside the requested degree."""


class DomainError(TangencyError):
    """An argument lies outside the set an operation is defined on."""


class OrderError(TangencyError):
    """Two compositions were expected to be comparable but are not."""


class ApexError(TangencyError):
    """The cone apex has no cell on the link sphere."""


class InvalidMarkerError(TangencyError):
    """A marker position is not in the marker set of its composition."""


class AmbiguousTransportError(TangencyError):
    """Different degeneration paths carry a marker to different places."""

    def __init__(self, message, markers=()):
        super().__init__(message)
        self.markers = tuple(sorted(markers))


class ZeroPolynomialError(TangencyError):
    """The zero polynomial has no divisor."""


class NotSquarefreeError(TangencyError):
    pass


class UnboundedNegativeError(TangencyError):
    """The set where the polynomial is non-positive is unbounded."""
