"""
Relabeled EPS writer

Output layout: the original DSC header, a suppression prologue defining a
private dictionary, the original body wrapped in save/restore with that
dictionary on the dictionary stack, then a trailer painting the
replacement labels.
"""

from typing import List, Tuple
import math
import re

from figrelabel.core.constants import COORDINATE_DECIMALS, PRIVATE_DICT_NAME
from figrelabel.core.logging import get_logger
from figrelabel.domain.entities.relabel import RelabelSpec
from figrelabel.services.emit.resolver import EmitPlan
from figrelabel.services.ps_syntax.dsc import parse_bbox_value, strip_preview
from figrelabel.services.ps_syntax.tokenizer import escape_ps_string
from figrelabel.services.ps_vm.operators.text_ops import SHOW_FAMILY
from figrelabel.services.relabel_spec import label_bytes

logger = get_logger(__name__)

_BBOX_LINE = re.compile(rb"^(%%BoundingBox:)(.*?)(\r?\n|\r)?$", re.DOTALL)
_HIRES_LINE = re.compile(rb"^(%%HiResBoundingBox:)(.*?)(\r?\n|\r)?$", re.DOTALL)
_EOF_LINE = re.compile(rb"^%%EOF\s*$")
_ROUNDING_SLACK = 1e-9
# private dictionary room: our definitions plus whatever the figure body defines
_PRIVATE_DICT_SIZE = 300


def format_number(value: float) -> str:
    """Fixed-point with trailing zeros stripped; never '-0'."""
    text = f"{value:.{COORDINATE_DECIMALS}f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


# ------------------------------------------------------------------ header

def _rewrite_bbox_line(line: bytes, scale: float, number: int) -> bytes:
    match = _BBOX_LINE.match(line)
    if match:
        value = match.group(2)
        if value.strip() == b"(atend)":
            return line
        bbox = parse_bbox_value(value, number).scaled(scale)
        corners = (
            math.floor(bbox.llx + _ROUNDING_SLACK),
            math.floor(bbox.lly + _ROUNDING_SLACK),
            math.ceil(bbox.urx - _ROUNDING_SLACK),
            math.ceil(bbox.ury - _ROUNDING_SLACK),
        )
        text = " ".join(str(v) for v in corners)
        return match.group(1) + b" " + text.encode("ascii") + (match.group(3) or b"")
    match = _HIRES_LINE.match(line)
    if match:
        value = match.group(2)
        if value.strip() == b"(atend)":
            return line
        bbox = parse_bbox_value(value, number).scaled(scale)
        text = " ".join(format_number(v) for v in bbox)
        return match.group(1) + b" " + text.encode("ascii") + (match.group(3) or b"")
    return line


def split_header(lines: List[bytes]) -> Tuple[List[bytes], List[bytes]]:
    """Leading comment lines, through %%EndComments when present, and the rest."""
    end = 0
    for index, line in enumerate(lines):
        if not line.startswith(b"%"):
            break
        end = index + 1
        if line.startswith(b"%%EndComments"):
            break
    return lines[:end], lines[end:]


# ---------------------------------------------------------------- prologue

def _pops(count: int) -> str:
    if count > 4:
        return f"{count} {{pop}} repeat"
    return " ".join(["pop"] * count)


def _saved_name(name: bytes) -> str:
    return "RL" + name.decode("ascii")


def build_prologue(plan: EmitPlan) -> bytes:
    """
    Suppression prologue

    Every show-family operator is redefined inside the private dictionary to
    consume its operands without painting. With a membership set, each
    operator instead paints through the saved original unless its string is
    a member.
    """
    lines = [
        "% figrelabel: suppress original labels",
        f"/{PRIVATE_DICT_NAME} {_PRIVATE_DICT_SIZE} dict def",
        f"{PRIVATE_DICT_NAME} begin",
    ]
    for name in SHOW_FAMILY:
        lines.append(f"/{_saved_name(name)} /{name.decode('ascii')} load def")

    if plan.suppresses_all:
        for name, arity in SHOW_FAMILY.items():
            lines.append(f"/{name.decode('ascii')} {{{_pops(arity.operands)}}} def")
    else:
        members = sorted(plan.suppress)
        lines.append(f"/RLsuppress {max(len(members), 1)} dict def")
        for raw in members:
            lines.append(f"RLsuppress {escape_ps_string(raw).decode('latin-1')} true put")
        for name, arity in SHOW_FAMILY.items():
            fetch = "dup" if arity.string_depth == 0 else f"{arity.string_depth} index"
            lines.append(
                f"/{name.decode('ascii')} {{{fetch} RLsuppress exch known "
                f"{{{_pops(arity.operands)}}} {{{_saved_name(name)}}} ifelse}} def"
            )

    lines += [
        "/save {false} def",
        "/restore {pop} def",
        "/showpage {} def",
        "end",
    ]
    return ("\n".join(lines) + "\n").encode("latin-1")


# ----------------------------------------------------------------- trailer

def build_trailer(plan: EmitPlan, spec: RelabelSpec) -> bytes:
    font_size = format_number(spec.font_size.bp_value)
    lines = ["% figrelabel: replacement labels"]
    for placement in plan.placements:
        x, y = placement.position
        text = escape_ps_string(label_bytes(placement.text)).decode("latin-1")
        lines.append(
            f"/{spec.font_name} findfont {font_size} scalefont setfont "
            f"{format_number(x * plan.scale)} {format_number(y * plan.scale)} moveto {text} show"
        )
    lines.append("showpage")
    return ("\n".join(lines) + "\n").encode("latin-1")


# -------------------------------------------------------------------- main

def emit_relabeled_eps(original: bytes, plan: EmitPlan, spec: RelabelSpec) -> bytes:
    """
    Write the relabeled figure

    Args:
        original: input EPS bytes
        plan: resolved placements
        spec: source of font and size

    Returns:
        Level-1 EPS bytes
    """
    source = strip_preview(original)
    lines = source.splitlines(keepends=True)
    if plan.scale != 1.0:
        lines = [
            _rewrite_bbox_line(line, plan.scale, number) if line.startswith(b"%%") else line
            for number, line in enumerate(lines, start=1)
        ]
    header, body = split_header(lines)

    eof_line = b""
    for index in range(len(body) - 1, -1, -1):
        if not body[index].strip():
            continue
        if _EOF_LINE.match(body[index]):
            eof_line = body.pop(index).rstrip(b"\r\n") + b"\n"
        break

    out = bytearray()
    for line in header:
        out += line
    if out and not out.endswith((b"\n", b"\r")):
        out += b"\n"
    out += build_prologue(plan)
    out += b"/RLsavestate save def\n"
    out += f"{PRIVATE_DICT_NAME} begin\n".encode("ascii")
    out += b"gsave\n"
    if plan.scale != 1.0:
        out += f"{plan.scale!r} {plan.scale!r} scale\n".encode("ascii")
    for line in body:
        out += line
    if not out.endswith((b"\n", b"\r")):
        out += b"\n"
    out += b"grestore\nend\nRLsavestate restore\n"
    out += build_trailer(plan, spec)
    out += eof_line
    logger.info(f"emitted relabeled EPS with {len(plan.placements)} placement(s)")
    return bytes(out)
