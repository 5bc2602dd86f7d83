"""Exception types raised across the package."""


class LatticeError(ValueError):
    """Base class for invalid lattice construction."""


class DimensionError(LatticeError):
    """Cost matrix shapes do not match the declared grid dimensions."""


class CostValidationError(LatticeError):
    """An edge cost is negative, NaN or infinite."""


class LatticeTooLargeError(ValueError):
    """Exhaustive enumeration was requested on a lattice that is too big."""


class PGMParseError(ValueError):
    """Malformed PGM input. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class RasterFormatError(ValueError):
    """Malformed distance or predecessor raster file."""


class UnreachableError(LookupError):
    """The target has no finite distance in the given result."""


class PathCorruptionError(RuntimeError):
    """A predecessor trace cycles or never reaches the source."""
