"""Exception hierarchy for the pattern-race library."""

from __future__ import annotations


class PatternRaceError(Exception):
    """Base class for all library errors."""


class ValidationError(PatternRaceError):
    """A problem instance is malformed (bad alphabet, distribution or pattern set)."""


class InvalidAlphabet(ValidationError):
    pass


class BadDistribution(ValidationError):
    pass


class UnknownLetter(ValidationError):
    pass


class DuplicatePattern(ValidationError):
    def __init__(self, i: int, j: int, label: str) -> None:
        self.i, self.j = i, j
        super().__init__(f"patterns {i + 1} and {j + 1} are both {label!r}")


class NotReduced(ValidationError):
    """Pattern ``i`` contains pattern ``j`` as a contiguous substring (0-based indices)."""

    def __init__(self, i: int, j: int, outer: str, inner: str) -> None:
        self.i, self.j = i, j
        super().__init__(f"{inner!r} is a substring of {outer!r}")


class ZeroProbabilityLetter(ValidationError):
    def __init__(self, letter: str, pattern: str) -> None:
        self.letter, self.pattern = letter, pattern
        super().__init__(f"letter {letter!r} used by {pattern!r} has probability 0")


class DegenerateDenominator(PatternRaceError):
    """The sum of the replaced-column determinants vanishes at s = 1."""


class ZeroWinProbability(PatternRaceError):
    def __init__(self, i: int) -> None:
        self.i = i
        super().__init__(f"pattern {i + 1} never wins the race")


class ZeroConstantDenominator(PatternRaceError, ZeroDivisionError):
    """Power-series expansion requested for a denominator vanishing at 0."""


class AllTrialsTruncated(PatternRaceError):
    pass
