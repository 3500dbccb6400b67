"""
Label domain entity.

One recorded show event: the raw string operand and where the pen stood.
"""

from dataclasses import dataclass

from figrelabel.domain.entities.geometry import Point


@dataclass(frozen=True, slots=True)
class LabelRecord:
    """
    A label painted by a show-family operator.

    raw holds the PostScript string bytes exactly as the figure supplied
    them; anchor is the device-space start-of-baseline point in bp.
    """

    raw: bytes
    anchor: Point
    seq: int
