"""Exceptions used by whittaker."""
from __future__ import annotations

from typing import Any


class WhittakerError(Exception):
    """General whittaker exception occurred."""


class NonUnit(WhittakerError):
    """Raised when inverting a ring element that is not a unit."""

    def __init__(self, value: Any) -> None:
        """Initialize error."""
        super().__init__(self)
        self.value = value

    def __str__(self) -> str:
        """Return string representation."""
        return f"{self.value} is not a unit"


class BadIndex(WhittakerError):
    """Raised when a projection or lift level is out of range."""

    def __init__(self, index: int, ell: int) -> None:
        """Initialize error."""
        super().__init__(self)
        self.index = index
        self.ell = ell

    def __str__(self) -> str:
        """Return string representation."""
        return f"Level {self.index} is out of range for a ring of length {self.ell}"


class BadParam(WhittakerError):
    """Raised when a parameter fails its precondition."""

    def __init__(self, name: str, value: Any, reason: str) -> None:
        """Initialize error."""
        super().__init__(self)
        self.name = name
        self.value = value
        self.reason = reason

    def __str__(self) -> str:
        """Return string representation."""
        return f"Invalid {self.name}={self.value!r}: {self.reason}"


class BudgetExceeded(WhittakerError):
    """Raised when a computation does not fit in the configured budget."""

    def __init__(self, what: str, size: int, budget: int) -> None:
        """Initialize error."""
        super().__init__(self)
        self.what = what
        self.size = size
        self.budget = budget

    def __str__(self) -> str:
        """Return string representation."""
        return (
            f"{self.what} has size {self.size} which exceeds the budget {self.budget}"
        )


class NotASubgroup(WhittakerError):
    """Raised when a constructed subset fails the closure check."""

    def __init__(self, kind: str, reason: str) -> None:
        """Initialize error."""
        super().__init__(self)
        self.kind = kind
        self.reason = reason

    def __str__(self) -> str:
        """Return string representation."""
        return f"Subgroup {self.kind} is not closed: {self.reason}"


class OutOfDomain(WhittakerError):
    """Raised when a character is evaluated outside its domain."""

    def __init__(self, character: str, count: int) -> None:
        """Initialize error."""
        super().__init__(self)
        self.character = character
        self.count = count

    def __str__(self) -> str:
        """Return string representation."""
        return f"{self.count} element(s) lie outside the domain of {self.character}"


class NoSolution(WhittakerError):
    """Raised when an equation that must be solvable has no solution."""

    def __init__(self, what: str) -> None:
        """Initialize error."""
        super().__init__(self)
        self.what = what

    def __str__(self) -> str:
        """Return string representation."""
        return f"No solution found for {self.what}"


class NotInjectivePair(WhittakerError):
    """Raised when a Borel pair has a non-injective quotient."""

    def __init__(self, chi1: int, chi2: int) -> None:
        """Initialize error."""
        super().__init__(self)
        self.chi1 = chi1
        self.chi2 = chi2

    def __str__(self) -> str:
        """Return string representation."""
        return (
            f"Pair ({self.chi1}, {self.chi2}) does not have an injective quotient "
            "character"
        )


class BadShape(WhittakerError):
    """Raised when a matrix does not have the required shape."""

    def __init__(self, matrix: Any, expected: str) -> None:
        """Initialize error."""
        super().__init__(self)
        self.matrix = matrix
        self.expected = expected

    def __str__(self) -> str:
        """Return string representation."""
        return f"Matrix {self.matrix} does not have the shape {self.expected}"


class NotRegular(WhittakerError):
    """Raised when a regular matrix is required."""

    def __init__(self, matrix: Any) -> None:
        """Initialize error."""
        super().__init__(self)
        self.matrix = matrix

    def __str__(self) -> str:
        """Return string representation."""
        return f"Matrix {self.matrix} is not regular"


class DegenerateSpectrum(WhittakerError):
    """Raised when eigenvalue clusters cannot be separated."""

    def __init__(self, seed: int, reason: str) -> None:
        """Initialize error."""
        super().__init__(self)
        self.seed = seed
        self.reason = reason

    def __str__(self) -> str:
        """Return string representation."""
        return f"Degenerate spectrum for seed {self.seed}: {self.reason}"


class InexactResult(WhittakerError):
    """Raised when a value that must be a rational integer is not."""

    def __init__(self, what: str, value: Any) -> None:
        """Initialize error."""
        super().__init__(self)
        self.what = what
        self.value = value

    def __str__(self) -> str:
        """Return string representation."""
        return f"{self.what} is not exact: {self.value}"


class ConfigurationError(WhittakerError):
    """Raised when the run configuration is invalid."""

    def __init__(self, message: str) -> None:
        """Initialize error."""
        super().__init__(self)
        self.message = message

    def __str__(self) -> str:
        """Return string representation."""
        return self.message
