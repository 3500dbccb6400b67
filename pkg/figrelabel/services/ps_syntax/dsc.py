"""
Document Structuring Convention header parsing

Reads %%BoundingBox (including the (atend) form), %%HiResBoundingBox,
%%Title and the EPSF marker. DOS EPS files with a binary preview wrapper
are unwrapped first.
"""

from dataclasses import dataclass
import re
import struct
from typing import List, NamedTuple, Optional, Tuple

from figrelabel.core.exceptions import MalformedBoundingBox, MalformedToken

DOS_EPS_MAGIC = b"\xc5\xd0\xd3\xc6"

_BBOX = re.compile(rb"%%BoundingBox:(.*)")
_HIRES_BBOX = re.compile(rb"%%HiResBoundingBox:(.*)")
_TITLE = re.compile(rb"%%Title:(.*)")
_ATEND = b"(atend)"


class BoundingBox(NamedTuple):
    llx: float
    lly: float
    urx: float
    ury: float

    @property
    def width(self) -> float:
        return self.urx - self.llx

    def scaled(self, factor: float) -> "BoundingBox":
        return BoundingBox(self.llx * factor, self.lly * factor, self.urx * factor, self.ury * factor)


@dataclass(frozen=True)
class DocumentMeta:
    bounding_box: Optional[BoundingBox] = None
    is_eps: bool = False
    title: Optional[str] = None
    other_comments: Tuple[str, ...] = ()
    hires_bounding_box: Optional[BoundingBox] = None


def strip_preview(source: bytes) -> bytes:
    """
    Return the PostScript section of a DOS EPS file, or the input unchanged

    The binary header is magic, PostScript offset, PostScript length
    (little-endian 32-bit words) followed by preview pointers.
    """
    if not source.startswith(DOS_EPS_MAGIC):
        return source
    if len(source) < 12:
        raise MalformedToken("truncated DOS EPS header", offset=0, line=1)
    _, ps_offset, ps_length = struct.unpack("<III", source[:12])
    if ps_offset + ps_length > len(source) or ps_offset < 12:
        raise MalformedToken("DOS EPS header points outside the file", offset=0, line=1)
    return source[ps_offset:ps_offset + ps_length]


def parse_bbox_value(value: bytes, line: int) -> BoundingBox:
    """Parse the four numbers after a bounding box comment."""
    parts = value.split()
    if len(parts) != 4:
        raise MalformedBoundingBox(f"expected four numbers, got {value.strip()!r}", line=line)
    try:
        llx, lly, urx, ury = (float(p) for p in parts)
    except ValueError:
        raise MalformedBoundingBox(f"non-numeric bounding box {value.strip()!r}", line=line) from None
    if urx < llx or ury < lly:
        raise MalformedBoundingBox(f"inverted bounding box {value.strip()!r}", line=line)
    return BoundingBox(llx, lly, urx, ury)


def _resolve_bbox(entries: List[Tuple[int, bytes]]) -> Optional[BoundingBox]:
    if not entries:
        return None
    line, value = entries[0]
    if value.strip() != _ATEND:
        return parse_bbox_value(value, line)
    # (atend): the trailer repeats the comment with real numbers
    for line, value in reversed(entries[1:]):
        if value.strip() != _ATEND:
            return parse_bbox_value(value, line)
    return None


def parse_dsc(source: bytes) -> DocumentMeta:
    """
    Extract DSC metadata

    Args:
        source: raw EPS/PS bytes

    Returns:
        DocumentMeta; bounding_box is None when no usable comment exists

    Raises:
        MalformedBoundingBox: a %%BoundingBox comment without four numbers
    """
    source = strip_preview(source)
    lines = source.splitlines()
    is_eps = bool(lines) and lines[0].startswith(b"%!PS-Adobe-") and b"EPSF" in lines[0]

    comments: List[str] = []
    bbox_entries: List[Tuple[int, bytes]] = []
    hires_entries: List[Tuple[int, bytes]] = []
    title: Optional[str] = None

    for number, line in enumerate(lines, start=1):
        if not (line.startswith(b"%%") or line.startswith(b"%!")):
            continue
        comments.append(line.decode("latin-1"))
        match = _BBOX.match(line)
        if match:
            bbox_entries.append((number, match.group(1)))
            continue
        match = _HIRES_BBOX.match(line)
        if match:
            hires_entries.append((number, match.group(1)))
            continue
        match = _TITLE.match(line)
        if match and title is None:
            title = match.group(1).strip().decode("latin-1")

    return DocumentMeta(
        bounding_box=_resolve_bbox(bbox_entries),
        is_eps=is_eps,
        title=title,
        other_comments=tuple(comments),
        hires_bounding_box=_resolve_bbox(hires_entries),
    )
