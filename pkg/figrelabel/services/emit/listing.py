"""
Label listing and overlay output
"""

from typing import List

import orjson

from figrelabel.core.constants import TSV_HEADER
from figrelabel.schemas.listing import ListingRow
from figrelabel.services.emit.resolver import EmitPlan
from figrelabel.services.label_table import LabelTable


def escape_label(raw: bytes) -> str:
    """Printable ASCII as is, backslash doubled, every other byte as \\xHH."""
    out = []
    for byte in raw:
        if byte == 0x5C:
            out.append("\\\\")
        elif 0x20 <= byte < 0x7F:
            out.append(chr(byte))
        else:
            out.append(f"\\x{byte:02X}")
    return "".join(out)


def listing_rows(table: LabelTable) -> List[ListingRow]:
    return [
        ListingRow(seq=record.seq, x=record.anchor.x, y=record.anchor.y, text=escape_label(record.raw))
        for record in table
    ]


def emit_label_listing(table: LabelTable, format: str = "tsv") -> str:
    """
    Render the label table

    Args:
        table: frozen label table
        format: "tsv" or "json"

    Returns:
        TSV with a header row, or a JSON array of {seq, x, y, text}
    """
    rows = listing_rows(table)
    if format == "json":
        payload = [row.model_dump() for row in rows]
        return orjson.dumps(payload, option=orjson.OPT_INDENT_2).decode("utf-8") + "\n"
    if format != "tsv":
        raise ValueError(f"unknown listing format '{format}'")
    lines = [TSV_HEADER]
    lines += [f"{row.seq}\t{row.x:.6f}\t{row.y:.6f}\t{row.text}" for row in rows]
    return "\n".join(lines) + "\n"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_tex_overlay(plan: EmitPlan) -> str:
    """One `label x y "text"` line per placement, figure coordinates before scaling."""
    lines = []
    for placement in plan.placements:
        x, y = placement.position
        lines.append(f"label {x:.6f} {y:.6f} {_quote(placement.text)}")
    return "".join(line + "\n" for line in lines)
