"""Exception types shared across the package."""


class RayClassError(Exception):
    """Base class for all errors raised by this package."""


class NotImaginary(RayClassError):
    """Discriminant is nonnegative."""


class NotFundamental(RayClassError):
    """Discriminant is not a fundamental discriminant."""


class ExcludedField(RayClassError):
    """Discriminant belongs to Q(i) or Q(sqrt(-3)), which are excluded."""


class NonInvertible(RayClassError):
    """A matrix that must be invertible mod N is not; internal consistency failure."""


class ZeroIndex(RayClassError):
    """An index action produced (0, 0) mod N; internal consistency failure."""


class PrecisionUnachievable(RayClassError):
    """Requested precision exceeds the configured hard cap."""


class PrecisionExhausted(RayClassError):
    """Precision cap reached without stable integer coefficients."""


class IntegralityFailure(RayClassError):
    """A coefficient is too far from the nearest integer (or too complex)."""


class SeparationFailure(RayClassError):
    """Two conjugate values are numerically indistinguishable."""


class RegionUnknownWarning(UserWarning):
    """(N, d_K) lies outside every region where the generator theorem is established."""
