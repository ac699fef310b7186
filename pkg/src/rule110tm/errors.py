"""Exception types shared across the package."""


class EmulationError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidSymbol(EmulationError, ValueError):
    """A word contains a character outside its declared alphabet."""

    def __init__(self, char: str, position: int, alphabet: str):
        self.char = char
        self.position = position
        self.alphabet = alphabet
        super().__init__(
            f"invalid symbol {char!r} at position {position} (allowed: {alphabet})"
        )


class PeriodNotFound(EmulationError):
    """No repeated row appeared within the step cap of a wrapped run."""


class AllZeroRow(EmulationError):
    """A wrapped-run matrix has a row of 0s, so the wrap construction does not apply."""


class StepBudgetExceeded(EmulationError):
    """The Turing machine ran out of steps before producing enough left switches."""


class PreconditionViolated(EmulationError, ValueError):
    """Inputs do not meet the requirements for emulation."""
