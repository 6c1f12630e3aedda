"""Exception hierarchy shared by all nilporb modules.

Every domain error derives from NilporbError so the CLI can map any of them
to exit code 1 with a structured message.  Names follow the operation
contracts (SizeMismatch, BlockMismatch, ...).
"""


class NilporbError(ValueError):
    """Base class for all domain errors raised by this package."""


class ConstraintViolation(NilporbError):
    """A block's capacity is exceeded by its arrow incidences.

    Carries the 1-based index of the first violating block.
    """

    def __init__(self, block: int, message: str | None = None):
        self.block = block
        super().__init__(message or f"capacity of block {block} exceeded")


class SizeMismatch(NilporbError):
    pass


class AmbientMismatch(NilporbError):
    pass


class ShapeMismatch(NilporbError):
    pass


class NotClosedUnderMultiplication(NilporbError):
    pass


class IndexOutOfRange(NilporbError):
    pass


class BlockMismatch(NilporbError):
    pass


class NotNormalForm(NilporbError):
    pass


class NotTwoNilpotent(NilporbError):
    pass


class ReconstructionMismatch(NilporbError):
    """Internal invariant failure: a reconstructed pattern does not reproduce
    the invariant table it was read off from.  Never expected on valid input."""


class NotACover(NilporbError):
    pass


class ZeroLabel(NilporbError):
    pass


class ZeroLambda(NilporbError):
    pass


class ZeroParameter(NilporbError):
    pass


class RangeError(NilporbError):
    pass


class UnknownId(NilporbError):
    pass


class DimMismatch(NilporbError):
    pass
