"""Exception hierarchy shared by all ringmod modules."""


class RingmodError(Exception):
    """Base class for all toolkit errors."""


class DomainError(RingmodError):
    """A point, sphere, ring or curve leaves the chart grid."""


class MetricIntegrityError(RingmodError):
    """A metric evaluation violated symmetry or positive definiteness."""


class DegenerateCondenserError(RingmodError):
    """The compact plate is not strictly contained in the open region."""


class RadialWeightError(RingmodError):
    """The radial weight integral I(eps, eps0) is zero or infinite.

    The capacity bound cap f(E) <= F / I^n is vacuous in this case, so the
    whole bound pipeline refuses to proceed.
    """


class AdmissibilityError(RingmodError):
    """A candidate density failed the dense admissibility check."""

    def __init__(self, message, worst_curve=None, min_integral=None):
        super().__init__(message)
        self.worst_curve = worst_curve
        self.min_integral = min_integral


class IntegrationError(RingmodError):
    """A quadrature hit a singular point not marked as integrable."""


class InsufficientDataError(RingmodError):
    """Too few samples to run a fit (e.g. fewer than 3 probe radii)."""


class ConfigError(RingmodError):
    """A run configuration failed to parse or validate."""
