"""Exceptions shared across the library.

The CLI maps these onto exit codes: resource/limit guards (stabilization,
oracle size, product termination) exit 3, everything else here exits 2.
"""


class CrystalMeltError(Exception):
    """Base class for all library errors."""


class DimensionError(CrystalMeltError):
    """Mixed series with different variable counts or cutoffs."""


class NotInvertibleError(CrystalMeltError):
    """Series inversion requires constant term +1 or -1."""


class NonTerminatingProductError(CrystalMeltError):
    """Infinite product whose factors stop raising the minimum degree."""


class UnsupportedChamberError(CrystalMeltError):
    """Chamber outside the family this library can enumerate."""


class StabilizationFailureError(CrystalMeltError):
    """Toeplitz determinant kept changing up to the size cap."""


class OracleTooLargeError(CrystalMeltError):
    """Brute-force path enumeration would exceed the safety guard."""


class InvalidGraphError(CrystalMeltError):
    """Path-sum graph contains an oriented cycle."""


class SingularParametersError(CrystalMeltError):
    """Curve parameters make a mirror-map denominator vanish."""
