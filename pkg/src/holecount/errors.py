"""Exception hierarchy for holecount."""


class HolecountError(Exception):
    """Base class for all holecount errors."""


class ParseError(HolecountError):
    """Malformed image input. Carries a human-readable position."""

    def __init__(self, message, line=None, offset=None):
        pos = []
        if line is not None:
            pos.append(f"line {line}")
        if offset is not None:
            pos.append(f"byte {offset}")
        if pos:
            message = f"{message} ({', '.join(pos)})"
        super().__init__(message)
        self.line = line
        self.offset = offset


class OutOfBoundsError(HolecountError):
    """Point outside the grid."""


class EmptyComponentError(HolecountError):
    """Operation requires a nonempty component."""


class UnknownComponentError(HolecountError):
    """Component id not present in the label map."""


class BorderContactError(HolecountError):
    """Component touches the image border where the caller must pad first."""


class FormulaInapplicableError(HolecountError):
    """Corner census violates the divisibility the formula requires."""


class InvalidComponentError(HolecountError):
    """Component fails the simple-closed-curve hypothesis."""


class ThinComponentError(InvalidComponentError):
    """A boundary point has fewer than 2 direct neighbors; tracing cannot proceed."""

    def __init__(self, point):
        super().__init__(f"thin or isolated point at {point}")
        self.point = point


class ContourOverlapError(InvalidComponentError):
    """A boundary point is claimed by more than one contour (or revisited)."""

    def __init__(self, point):
        super().__init__(f"contour overlap at {point}")
        self.point = point


class CurveError(HolecountError):
    """Standalone curve input is not a simple closed curve."""


class InvalidSurfaceError(HolecountError):
    """Surface complex violates closed digital surface constraints."""


class ThinSolidError(InvalidSurfaceError):
    """Voxel solid contains no unit cube; no surface to extract."""


class MultipleSurfaceComponentsError(InvalidSurfaceError):
    """Surface has several connected components; carries per-component Euler data."""

    def __init__(self, euler_characteristics):
        super().__init__(
            f"surface has {len(euler_characteristics)} components, "
            f"chi = {euler_characteristics}"
        )
        self.euler_characteristics = tuple(euler_characteristics)


class GenError(HolecountError):
    """Shape generator constraint violation or repair failure."""
