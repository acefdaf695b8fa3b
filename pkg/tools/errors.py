"""
Exception hierarchy for Hamilton Tools.
"""

from typing import Optional


class HamiltonError(Exception):
    """Base class for every error raised by the engines."""


class ParseError(HamiltonError):
    """Text input (group spec, generator list, fixture) could not be parsed."""


class SpecMismatch(HamiltonError):
    """A raw tuple does not fit the group's coordinate layout."""


class InvalidGenerators(HamiltonError):
    """The generator list violates a GeneratorSet invariant."""


class TorsionGenerator(InvalidGenerators):
    """A generator has finite order."""


class NotOneEnded(HamiltonError):
    """The Cayley graph has fewer than one end's worth of free rank (n < 2)."""


class NotStandardSquare(HamiltonError):
    """A square was switched while one of its edges carried a non-standard colour."""


class NotOnRay(HamiltonError):
    """A vertex that should lie on a double-ray does not."""


class BudgetExceeded(HamiltonError):
    """A component walk neither closed nor certified its tails within the budget."""


class NotTwoRegular(HamiltonError):
    """A vertex has a number of incident edges of one colour other than two."""


class NotAlmostStandard(HamiltonError):
    """The colouring handed to the engine is not almost-standard."""


class AlphaNotInjective(HamiltonError):
    """Two distinct cycles received the same first crossing square."""


class NoFreshRay(HamiltonError):
    """Every reserved ray of a coset edge was already spoiled."""


class WindowNotStable(HamiltonError):
    """The requested window is not yet fixed by the construction."""


class EdgeNotInDecomposition(HamiltonError):
    """A product edge projects to no member of the factor decompositions."""


class EnumerationExhausted(HamiltonError):
    """A finite vertex enumeration ran out before the step that needed it."""


class InvariantViolation(HamiltonError):
    """A proof invariant failed at runtime; signals an engine bug."""

    def __init__(self, message: str, condition: Optional[int] = None):
        self.condition = condition
        prefix = f"condition ({condition}): " if condition is not None else ""
        super().__init__(prefix + message)
