"""Exception hierarchy for the zetacasimir package."""


class ZetaCasimirError(Exception):
    """Base class for all package-specific errors."""


class PoleError(ZetaCasimirError):
    """Evaluation requested exactly at a pole of the function."""


class SingularPointError(ZetaCasimirError):
    """Expression is undefined at the requested point (not a plain pole)."""


class DomainError(ZetaCasimirError):
    """Argument outside the mathematical domain of the operation."""


class AccuracyError(ZetaCasimirError):
    """Requested tolerance cannot be met within the configured term budget."""


class AsymptoticRegimeError(ZetaCasimirError):
    """Argument below the validity threshold of an asymptotic expansion."""


class DegenerateSplitError(ZetaCasimirError):
    """Split parameters leave an approximate-functional-equation sum empty."""


class UnsupportedFormError(ZetaCasimirError):
    """Quadratic form outside the supported family (e.g. cross term != 0)."""


class GuardError(ZetaCasimirError):
    """A physical-regime guard (such as L/lambda_p >= threshold) failed."""


class EvenDimensionError(DomainError):
    """Finite-conductivity slab energies are defined for odd d only.

    At even d the Gamma(-d/2) prefactor is singular and the truncated
    mode sum carries no compensating zero, so the energy is undefined.
    """


class InsufficientCutoffError(ZetaCasimirError):
    """Mode list is truncated too early for the requested evaluation."""
