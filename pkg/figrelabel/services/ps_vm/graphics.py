"""
Graphics state tracked by the interpreter.

Only what label anchoring needs: the CTM, the current point, the font and
the gsave depth.
"""

from dataclasses import dataclass, replace
from typing import Any, Optional

from figrelabel.core.exceptions import NoCurrentPoint
from figrelabel.domain.entities.geometry import IDENTITY, Matrix, Point, itransform_point


@dataclass
class GraphicsState:
    """
    One graphics state.

    The current point is held in device space, as PostScript does, so a CTM
    change after moveto leaves the pen where it was on the page;
    current_point re-expresses it in the user space of the current CTM.
    """

    ctm: Matrix = IDENTITY
    device_point: Optional[Point] = None
    path_start: Optional[Point] = None
    font: Any = None
    clip_depth: int = 0

    def copy(self) -> "GraphicsState":
        return replace(self)

    @property
    def has_current_point(self) -> bool:
        return self.device_point is not None

    @property
    def current_point(self) -> Point:
        if self.device_point is None:
            raise NoCurrentPoint("no current point")
        return itransform_point(self.ctm, self.device_point)

    def clear_path(self) -> None:
        self.device_point = None
        self.path_start = None
