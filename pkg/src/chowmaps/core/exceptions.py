"""
Custom exceptions for chowmaps
"""


class ChowMapsError(Exception):
    """Base exception for chowmaps"""

    def __init__(self, message: str, code: str = None, details: dict = None):
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}

    def __str__(self):
        if self.code:
            return f"[{self.code}] {self.message}"
        return self.message


class NotDivisibleError(ChowMapsError):
    """Exact division left a remainder"""

    def __init__(self, message: str = "Division is not exact", details: dict = None):
        super().__init__(message, "NOT_DIVISIBLE", details)


class NotInvertibleError(ChowMapsError):
    """Series constant term is not a unit"""

    def __init__(self, message: str = "Constant term is not a unit", details: dict = None):
        super().__init__(message, "NOT_INVERTIBLE", details)


class EvenDegreeError(ChowMapsError):
    """Degree d must be odd"""

    def __init__(self, message: str = "Degree must be odd", degree: int = None, details: dict = None):
        super().__init__(message, "EVEN_DEGREE", details)
        self.degree = degree

    def __str__(self):
        if self.degree is not None:
            return f"[{self.code}] {self.message} (got d={self.degree})"
        return super().__str__()


class NotSymmetricError(ChowMapsError):
    """Polynomial is not invariant under l1 <-> l2"""

    def __init__(self, message: str = "Polynomial is not symmetric in l1, l2", details: dict = None):
        super().__init__(message, "NOT_SYMMETRIC", details)


class IdentityViolatedError(ChowMapsError):
    """A closed-form identity did not reproduce"""

    def __init__(self, message: str = "Identity violated", details: dict = None):
        super().__init__(message, "IDENTITY_VIOLATED", details)


class NotHomogeneousError(ChowMapsError):
    """Polynomial is not homogeneous"""

    def __init__(self, message: str = "Polynomial is not homogeneous", details: dict = None):
        super().__init__(message, "NOT_HOMOGENEOUS", details)


class DemotionError(ChowMapsError):
    """Rational coefficients do not demote to integers"""

    def __init__(self, message: str = "Coefficient has a nontrivial denominator", details: dict = None):
        super().__init__(message, "DEMOTION", details)


class DomainError(ChowMapsError):
    """Argument outside the operation's domain"""

    def __init__(self, message: str = "Argument out of domain", details: dict = None):
        super().__init__(message, "DOMAIN_ERROR", details)


class EnvelopeIndexError(ChowMapsError, IndexError):
    """Envelope index i outside 1..d"""

    def __init__(self, message: str = "Envelope index out of range", details: dict = None):
        super().__init__(message, "ENVELOPE_INDEX", details)


class ConfigurationError(ChowMapsError):
    """Configuration error"""

    def __init__(self, message: str = "Configuration error", details: dict = None):
        super().__init__(message, "CONFIG_ERROR", details)


class ValidationError(ChowMapsError):
    """Invalid command-line or run parameters"""

    def __init__(self, message: str = "Validation error", details: dict = None):
        super().__init__(message, "VALIDATION_ERROR", details)
