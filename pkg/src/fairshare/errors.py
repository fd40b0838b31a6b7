"""Exception hierarchy.

Two families: ``ParseError`` for input that cannot be read at all
(command-line exit status 2) and ``ValidationError`` for input that reads
fine but violates a domain rule (exit status 1).
"""


class FairshareError(Exception):
    """Base class for every error raised by this package."""


class ParseError(FairshareError):
    pass


class ValidationError(FairshareError, ValueError):
    pass


class EmptyInput(ParseError):
    pass


class MalformedRow(ParseError):
    def __init__(self, row, reason):
        self.row = row
        super().__init__(f"line {row}: {reason}")


class NegativeSalary(ValidationError):
    def __init__(self, row, value):
        self.row = row
        self.value = value
        super().__init__(f"line {row}: negative salary {value!r}")


class TooFewObservations(ValidationError):
    pass


class ZeroTotal(ValidationError):
    pass


class GiniOutOfRange(ValidationError):
    pass


class ShareSumError(ValidationError):
    pass


class NonMonotoneShares(ValidationError):
    pass


class DomainError(ValidationError):
    """An argument lies outside the domain of a function."""


class RankDeficient(ValidationError):
    pass


class UnattainableTarget(ValidationError):
    pass
