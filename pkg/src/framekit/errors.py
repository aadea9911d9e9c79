"""Exception hierarchy for framekit.

Argument-shape problems derive from ValueError so that callers who do not
care about the fine-grained class can still catch them generically.
"""


class FrameKitError(Exception):
    """Base class for all framekit errors."""


class NotSquareError(FrameKitError, ValueError):
    """Matrix operation received a non-square matrix."""


class NotHermitianError(FrameKitError, ValueError):
    """Matrix fails the Hermitian symmetry check at the given tolerance."""


class DimMismatchError(FrameKitError, ValueError):
    """Operands have incompatible dimensions."""


class NotAFrameError(FrameKitError, ValueError):
    """Vector system does not span the ambient space."""


class NotTightError(FrameKitError, ValueError):
    """Frame bounds differ; the operation needs a tight frame."""


class NotParsevalError(FrameKitError, ValueError):
    """Frame operator is not the identity at the given tolerance."""


class ZeroVectorError(FrameKitError, ValueError):
    """Frame contains a (numerically) zero vector where none is allowed."""


class NotOrthonormalError(FrameKitError, ValueError):
    """Vector system fails the orthonormality check."""


class NoComplementError(FrameKitError, ValueError):
    """Frame has M = N vectors; the orthocomplement is trivial."""


class NotUnitError(FrameKitError, ValueError):
    """Vector is not normalized to unit length."""


class BadOrderError(FrameKitError, ValueError):
    """Group order outside the supported range."""


class ZeroSeedError(FrameKitError, ValueError):
    """Orbit seed vector is numerically zero."""


class OrbitOverflowError(FrameKitError):
    """Orbit closure exceeded the traversal cap (group not finite?)."""


class BadNameError(FrameKitError, ValueError):
    """Unknown named frame."""


class OutOfRangeError(FrameKitError, ValueError):
    """Scalar parameter outside its admissible interval."""


class IndexRangeError(FrameKitError, IndexError):
    """Index outside the valid range."""


class BadGeneratorError(FrameKitError, ValueError):
    """Unknown lattice symmetry generator id."""


class BadDimsError(FrameKitError, ValueError):
    """Dimension parameters outside the supported range."""


class DimUnsupportedError(FrameKitError, ValueError):
    """Dimension is valid mathematically but not supported by this build."""


class BoxTooLargeError(FrameKitError):
    """Integer-box enumeration would exceed the point cap."""


class EmptyInputError(FrameKitError, ValueError):
    """Operation requires a nonempty input."""


class ParseError(FrameKitError, ValueError):
    """Malformed input file or string."""
