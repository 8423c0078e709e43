"""Exception types shared across the package.

Every error raised by leglab's own logic derives from LeglabError so
callers (and the CLI) can distinguish domain failures from bugs.
"""

from __future__ import annotations

__all__ = [
    "LeglabError",
    "ZeroPolynomial",
    "NegativeCoefficient",
    "InvalidDiagram",
    "NoSuchComponent",
    "InconsistentIndices",
    "InconsistentPotential",
    "SpecSyntaxError",
    "OddHorizontalEntry",
    "ZeroParameter",
    "DSquaredNonzero",
    "InvalidAugmentation",
    "DiskSearchLimit",
    "AugmentationSearchLimit",
    "DegenerateCritical",
    "TangencyAtCusp",
    "TwoComponentsRequired",
]


class LeglabError(Exception):
    """Base class for all package-specific errors."""


class ZeroPolynomial(LeglabError):
    """A degree-dependent operation was applied to the zero polynomial."""


class NegativeCoefficient(LeglabError):
    """A vector encoding was requested for a polynomial with a negative coefficient."""


class InvalidDiagram(LeglabError):
    """An event word violates the front-diagram invariants."""


class NoSuchComponent(LeglabError):
    """A component id outside 0..num_components-1 was requested."""


class InconsistentIndices(LeglabError):
    """Branch-index rules admit no consistent integer labeling (bug guard)."""


class InconsistentPotential(LeglabError):
    """No Maslov potential satisfies the cusp constraints, or a supplied one fails them."""


class SpecSyntaxError(LeglabError):
    """A link-family spec string does not match the grammar."""


class OddHorizontalEntry(SpecSyntaxError):
    """A horizontal entry of a rational spec must be even (it counts half-twists in pairs)."""


class ZeroParameter(SpecSyntaxError):
    """A family parameter that must be positive was zero or negative."""


class DSquaredNonzero(LeglabError):
    """The differential failed the d^2 = 0 self-check; signals a bug, never expected."""


class InvalidAugmentation(LeglabError):
    """A map does not satisfy the augmentation equations for the given algebra."""


class DiskSearchLimit(LeglabError):
    """The disk boundary-walk search exceeded its configured corner budget."""


class AugmentationSearchLimit(LeglabError):
    """The augmentation enumeration would exceed its candidate-count cap."""


class DegenerateCritical(LeglabError):
    """A critical point of the slope difference has |second derivative| below tolerance."""


class TangencyAtCusp(LeglabError):
    """A slope-difference root landed on a branch endpoint; the realization must be perturbed."""


class TwoComponentsRequired(LeglabError):
    """An operation defined only for 2-component links was called on another diagram."""
