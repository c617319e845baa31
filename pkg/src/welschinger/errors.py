"""Exception hierarchy.

Every computation in this package is exact; there is no notion of a partial
or approximate answer.  Whenever an input is outside the computable range the
functions raise one of the exceptions below instead of returning a default.
"""


class WelschingerError(Exception):
    """Base class for all package errors."""


class NegativeDimension(WelschingerError):
    """No non-negative real-point count solves the dimension equation."""


class TorusPrescribedOrbit(WelschingerError):
    """Torus fibres admit free asymptotics only (prescribed profile must be 0)."""


class InvalidDegreeRealPair(WelschingerError):
    """(degree, real points) admits no non-negative conjugate-pair count."""


class InadmissiblePair(WelschingerError):
    """(degree, real points) is outside the domain of the invariant."""


class UnknownInvariant(WelschingerError):
    """A relative invariant key is outside the curated tables.

    This is a hard error by design: an unknown count must never be reported
    as zero.
    """


class DimensionMismatch(WelschingerError):
    """A relative invariant key has a negative point count."""


class UnresolvableFKey(WelschingerError):
    """A cotangent invariant key cannot be reached from the curated bases."""


class EmptyBeta(WelschingerError):
    """The pair-to-real reduction needs at least one free asymptotic."""


class InsufficientRealPoints(WelschingerError):
    """The real-pair-to-cross reduction needs at least two real points."""
