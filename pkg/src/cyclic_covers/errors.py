"""Exception hierarchy.

Every error raised by the library derives from :class:`CyclicCoverError`,
which is itself a :class:`ValueError`.  Invalid branch data carry the name
of the violated constraint in ``constraint`` so callers (the CLI in
particular) can report it without parsing messages.
"""

from __future__ import annotations


class CyclicCoverError(ValueError):
    pass


class DomainError(CyclicCoverError):
    """An argument lies outside the domain of an operation."""


class PoleAtEvaluationPoint(CyclicCoverError):
    pass


class InvalidBranchDatum(CyclicCoverError):
    constraint = "InvalidBranchDatum"


class MOutOfRange(InvalidBranchDatum):
    constraint = "MOutOfRange"


class NOutOfRange(InvalidBranchDatum):
    constraint = "NOutOfRange"


class LengthMismatch(InvalidBranchDatum):
    constraint = "LengthMismatch"


class MonodromyOutOfRange(InvalidBranchDatum):
    constraint = "MonodromyOutOfRange"


class SumNotZeroModM(InvalidBranchDatum):
    constraint = "SumNotZeroModM"


class GcdNotOne(InvalidBranchDatum):
    constraint = "GcdNotOne"


class GenusTooSmall(DomainError):
    pass


class ParityViolation(CyclicCoverError):
    pass


class InvariantViolation(CyclicCoverError):
    """An internal consistency check failed.  Always a bug or bad input."""


class NegativeDimension(CyclicCoverError):
    def __init__(self, message: str, value: int):
        super().__init__(message)
        self.value = value


class NoExclusionIndex(CyclicCoverError):
    pass


class DuplicateBranchPoints(CyclicCoverError):
    pass


class DegeneratePencil(CyclicCoverError):
    pass


class BudgetExhausted(CyclicCoverError):
    pass
