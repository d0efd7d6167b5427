"""Exception and warning types."""


class FisherDiscordError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FisherDiscordError, ValueError):
    """An argument lies outside the domain of an operation."""


class NonHermitianInput(DomainError):
    pass


class NotPSD(DomainError):
    pass


class NotSkewHermitian(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class WeightNotNormalized(DomainError):
    pass


class TraceNotOne(DomainError):
    pass


class PowerExceedsTruncation(DomainError):
    pass


class BlochOutOfBall(DomainError):
    pass


class TailTooHeavy(DomainError):
    """Probability mass beyond the Fock cut-off is too large to drop."""


class LevelOutOfRange(DomainError):
    pass


class EqualLevels(DomainError):
    pass


class ParamOutOfDomain(DomainError):
    pass


class NumericalError(FisherDiscordError, ArithmeticError):
    """A numerical procedure failed or produced inconsistent output."""


class ConvergenceFailure(NumericalError):
    pass


class SeriesNotConverged(NumericalError):
    pass


class InvariantViolation(NumericalError):
    pass


class TruncationWarning(UserWarning):
    """The Fock cut-off is probably too small for the requested parameters."""
