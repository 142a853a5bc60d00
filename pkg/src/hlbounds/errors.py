"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes: DomainError -> 2, InputError -> 3.
"""


class HLBoundsError(ValueError):
    """Base class for all package errors."""


class DomainError(HLBoundsError):
    """An argument lies outside the mathematical domain of an operation."""


class DegenerateDomainError(DomainError):
    """The formula degenerates (vanishing denominator) at this argument."""


class InputError(HLBoundsError):
    """Malformed user input: files, serialized polynomials, option strings."""
