"""Exception hierarchy shared by every layer of the package."""


class CharvarError(Exception):
    """Base class for all errors raised by charvar."""


class SpecializationError(CharvarError):
    """A substituted denominator vanished identically."""


class NotPolynomialError(CharvarError):
    """A value expected to be a polynomial kept a nontrivial denominator."""


class ValidationError(CharvarError):
    """Malformed or inconsistent user input."""


class GenericityError(ValidationError):
    """Eigenvalue data does not satisfy the genericity conditions."""


class SizingError(CharvarError):
    """A computation needs more degree than the configured bound allows."""


class SizeGuardError(CharvarError):
    """A brute-force enumeration would exceed its hard size limit."""


class CacheVersionError(CharvarError):
    """A cache file carries an unknown or outdated format version."""
