"""Exception types shared across the package."""


class OrbikltError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(OrbikltError):
    """An input file or argument does not match the documented format."""


class NotNegativeDefiniteError(OrbikltError):
    """The intersection form is not negative definite.

    The configuration is not contractible, so the adjunction system has
    no guaranteed unique solution and no discrepancies are reported.
    """


class WrongClassError(OrbikltError):
    """An operation was invoked on a graph outside its recognized class."""


class UnsupportedError(OrbikltError):
    """No closed formula is available for the requested invariant."""


class NotSpecialError(OrbikltError):
    """The abelianity verdict requires a special pair; none is claimed."""


class NonCoprimeError(OrbikltError):
    """Cusp exponents must be coprime."""


class EnumerationOverflowError(OrbikltError):
    """Coset enumeration exceeded its workspace bound without closing."""
