"""Exception types shared across the library."""


class SusyFpeError(Exception):
    """Base class for all library errors."""


class DomainError(SusyFpeError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class SpectrumExhaustedError(SusyFpeError, ValueError):
    """Mode index beyond the (finite) discrete spectrum."""


class ParameterExhaustedError(SusyFpeError, ValueError):
    """Parameter shift would leave the model's admissible parameter region."""


class UnsupportedRuleError(SusyFpeError, ValueError):
    """Interpolation rule not defined for the given model."""


class ProjectionDivergenceError(SusyFpeError, ArithmeticError):
    """Initial-profile projection integral is not finite."""


class VanishingDenominatorError(SusyFpeError, ZeroDivisionError):
    """Interpolated profile has zero total mass and cannot be normalized."""


class IntegrationError(SusyFpeError, ArithmeticError):
    """Quadrature encountered a non-finite sample."""
