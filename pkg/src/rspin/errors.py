"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class BroadSectorError(DomainError):
    """The broad sector J^0 carries no state and cannot be paired or graded."""


class ScaleLimitError(ValueError):
    """Parameters exceed the desk-scale bounds of an enumeration."""


class InsufficientWindowError(ArithmeticError):
    """A truncated series was asked for a coefficient outside its window."""


class NotConcaveError(DomainError):
    """Input is not in the concave genus-0 regime."""


class IntegrabilityError(ArithmeticError):
    """Derivative data could not be integrated to a potential."""
