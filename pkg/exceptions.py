"""
Exception types shared by the geometry, index and CLI layers.
"""

from typing import Any, Optional


class GeometryError(ValueError):
    """Invalid point, rectangle or region parameters"""


class GeneralPositionError(ValueError):
    """Two input points share an x- or a y-coordinate"""

    def __init__(self, first: Any, second: Any, axis: str):
        self.first = first
        self.second = second
        self.axis = axis
        super().__init__(
            f"points {first} and {second} share the same {axis}-coordinate; "
            f"input must be in general position (use --jitter to perturb raw data)"
        )


class RmqRangeError(IndexError):
    """Range-minimum query outside the indexed sequence"""


class MissingWeightsError(ValueError):
    """Min-weight query on a range tree built without weights"""


class CornerOverflowError(RuntimeError):
    """A corner square held more points than the anchored-square bound allows"""

    def __init__(self, corner: int, found: int, bound: int):
        self.corner = corner
        self.found = found
        self.bound = bound
        super().__init__(
            f"corner square C{corner} holds {found} points, expected at most {bound}"
        )


class PointsFileError(ValueError):
    """Parse or validation failure in a points or queries file"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class AnalysisParameterError(ValueError):
    """Experiment parameters out of their supported range"""
