"""Exception types raised across baxterq."""

from typing import List, Optional


class BaxterQError(ValueError):
    """Base class for all baxterq errors."""


class DegenerateError(BaxterQError):
    """Zero denominator, zero pivot or division by the zero polynomial."""


class PoleError(BaxterQError):
    """Rational function evaluated at a zero of its denominator."""

    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


class GenericityError(BaxterQError):
    """Twist data violates the genericity invariants."""

    def __init__(self, message: str, diagnostics: Optional[List[str]] = None):
        super().__init__(message)
        self.diagnostics = list(diagnostics or [])


class ResonanceError(GenericityError):
    """A boson-fermion denominator q^k z_b - q^-k z_f vanishes."""

    def __init__(self, message: str, k, diagnostics: Optional[List[str]] = None):
        super().__init__(message, diagnostics)
        self.k = k


class HookError(BaxterQError):
    """Young diagram lies outside the (M,N)-hook."""


class VanishingDiagram(BaxterQError):
    """Maya data requested for a diagram whose (m,n)-index exceeds m+1."""


class RegimeError(BaxterQError):
    """Parameters outside the range where a formula is stated."""


class ConventionError(BaxterQError):
    """Formula requested on a hierarchy stored in the other normalization."""


class HierarchyFormatError(BaxterQError):
    """Malformed hierarchy file."""


class SampleCountError(BaxterQError):
    """Fast mode asked for fewer sample points than a suite's degree bound."""
