"""Exception hierarchy; class names double as the error-case names the CLI reports."""


class HydraError(ValueError):
    """Base class for all domain errors."""

    @property
    def case(self) -> str:
        return type(self).__name__


class DuplicatePrime(HydraError):
    pass


class NotPrime(HydraError):
    pass


class BudgetExceeded(HydraError):
    pass


class InvalidDistance(HydraError):
    pass


class EmptySelection(HydraError):
    pass


class MissingBase(HydraError):
    pass


class NonpositiveFactor(HydraError):
    pass


class NotMaterialized(HydraError):
    pass


class OracleLimitExceeded(HydraError):
    pass


class InternalLemmaViolation(RuntimeError):
    """A construction that must succeed did not; indicates a bug."""
