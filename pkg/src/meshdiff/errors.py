"""Exception types shared across the package.

Leaf class names double as the diagnostic tokens printed by the CLI, so
they stay short and specific.
"""


class MeshdiffError(Exception):
    """Base class for every error raised by this package."""


class InputError(MeshdiffError):
    """Bad user-supplied data: malformed files, unusable sizes or intervals."""


class NumericalError(MeshdiffError):
    """Domain or numerical failure while building or applying operators."""


class TooFew(InputError):
    """Fewer than two mesh points."""


class NotIncreasing(InputError):
    """Mesh coordinates are not strictly increasing."""


class NonFinite(InputError):
    """A coordinate or interval bound is NaN or infinite."""


class EmptyInterval(InputError):
    """Interval bounds with a >= b."""


class FileFormatError(InputError):
    """A mesh, vector, or matrix file could not be parsed."""


class InvalidStencil(NumericalError):
    """Stencil points unusable: too few, not increasing, or effectively duplicated."""


class OrderTooHigh(NumericalError):
    """Requested derivative order needs more stencil points than available."""


class StencilTooWide(NumericalError):
    """Stencil width exceeds the mesh size."""


class EvenStencil(NumericalError):
    """Sliding stencils narrower than the mesh must have odd width."""


class DimensionMismatch(NumericalError):
    """Operator and sample vector sizes disagree."""


class NonSquare(NumericalError):
    """Kronecker factors must be square."""


class TooLarge(NumericalError):
    """Stencil exceeds the exact-rational reference size guard."""


class NoConvergence(NumericalError):
    """An iteration failed to reach its tolerance within the step limit."""
