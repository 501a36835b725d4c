"""Exception types shared across the package.

Everything raised on purpose derives from UltrachainError so the CLI can map
library errors to exit code 2 uniformly.
"""


class UltrachainError(Exception):
    """Base class for all ultrachain errors."""


class NonPrimeModulus(UltrachainError):
    """A modulus that must be prime is not."""


class DomainMismatch(UltrachainError):
    """A scalar does not belong to the field backend it was used with."""


class SpecMismatch(UltrachainError):
    """Norm spec, backend and vector dimensions/kinds are incompatible."""


class CharacteristicTwo(UltrachainError):
    """|2| = 0 in this field; the 2/|2| inequality chains are undefined."""


class NotUnitTwo(UltrachainError):
    """The collapse check requires |2| = 1 exactly."""


class GridTooLarge(UltrachainError):
    """An exhaustive grid exceeds the configured pair ceiling."""
