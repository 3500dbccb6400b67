"""
Directive resolution

Turns a relabel spec plus the figure's label table into a placement plan.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple, Union

from figrelabel.core.exceptions import EmptyOldLabel, MalformedBoundingBox, MalformedNumber, MissingBoundingBox
from figrelabel.core.logging import get_logger
from figrelabel.domain.entities.geometry import Point
from figrelabel.domain.entities.relabel import Directive, ExtraLabel, Relabel, RelabelSpec
from figrelabel.services.label_table import LabelTable, find_label
from figrelabel.services.ps_syntax.dsc import BoundingBox, DocumentMeta

logger = get_logger(__name__)


class Suppression(str, Enum):
    ALL_SHOWS = "all_shows"


Suppress = Union[Suppression, FrozenSet[bytes]]


@dataclass(frozen=True)
class Placement:
    """Replacement text at an anchor, offsets in bp, figure coordinates."""

    text: str
    anchor: Point
    dx: float = 0.0
    dy: float = 0.0
    directive: Optional[Directive] = None

    @property
    def position(self) -> Point:
        return Point(self.anchor.x + self.dx, self.anchor.y + self.dy)


@dataclass(frozen=True)
class EmitPlan:
    placements: Tuple[Placement, ...]
    suppress: Suppress
    unmatched: Tuple[bytes, ...]
    scale: float = 1.0
    bounding_box: Optional[BoundingBox] = None

    @property
    def suppresses_all(self) -> bool:
        return self.suppress is Suppression.ALL_SHOWS


def _scale_for(spec: RelabelSpec, bbox: Optional[BoundingBox]) -> float:
    if spec.width is None:
        return 1.0
    if bbox is None:
        raise MissingBoundingBox("'width' needs a %%BoundingBox to scale against")
    if bbox.width <= 0:
        raise MalformedBoundingBox(f"bounding box {tuple(bbox)} has no width")
    width = spec.width.bp_value
    if width <= 0:
        raise MalformedNumber(f"width must be positive, got {spec.width.value}{spec.width.unit}")
    return width / bbox.width


def resolve(
    spec: RelabelSpec,
    table: LabelTable,
    meta: DocumentMeta,
    keep_unmatched_drawing: bool = False,
) -> EmitPlan:
    """
    Resolve every directive against the label table

    Relabels whose old label was never shown go to `unmatched` and get no
    placement. Extra labels hang off the lower-right bounding box corner.

    Args:
        spec: parsed relabel spec
        table: frozen label table of the figure
        meta: DSC metadata
        keep_unmatched_drawing: suppress only matched labels instead of all shows

    Returns:
        EmitPlan

    Raises:
        MissingBoundingBox: an extra label or width without a %%BoundingBox
        EmptyOldLabel: a relabel with an empty old label
    """
    bbox = meta.bounding_box
    if spec.extra_labels and bbox is None:
        raise MissingBoundingBox("extralabel needs a %%BoundingBox to anchor against")
    scale = _scale_for(spec, bbox)

    placements: List[Placement] = []
    unmatched: List[bytes] = []
    matched: set = set()

    for directive in spec.directives:
        if isinstance(directive, Relabel):
            if not directive.old:
                raise EmptyOldLabel("relabel with an empty old label", line=directive.line)
            anchor, found = find_label(table, directive.old, None)
            if not found:
                logger.warning(f"label {directive.old!r} not found in figure")
                unmatched.append(directive.old)
                continue
            matched.add(directive.old)
            placements.append(Placement(
                directive.new, anchor, directive.dx.bp_value, directive.dy.bp_value, directive
            ))
        elif isinstance(directive, ExtraLabel):
            anchor = Point(bbox.urx + directive.x.bp_value, bbox.lly + directive.y.bp_value)
            placements.append(Placement(directive.text, anchor, directive=directive))

    suppress: Suppress = frozenset(matched) if keep_unmatched_drawing else Suppression.ALL_SHOWS
    logger.info(
        f"resolved {len(placements)} placement(s), {len(unmatched)} unmatched, scale {scale:g}"
    )
    return EmitPlan(
        placements=tuple(placements),
        suppress=suppress,
        unmatched=tuple(unmatched),
        scale=scale,
        bounding_box=bbox,
    )
