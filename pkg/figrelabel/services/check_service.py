"""
Spec check against an extracted label table
"""

from typing import List

from figrelabel.core.logging import get_logger
from figrelabel.domain.entities.relabel import RelabelSpec
from figrelabel.schemas.listing import CheckRow, CheckStatus
from figrelabel.services.emit.listing import escape_label
from figrelabel.services.label_table import LabelTable

logger = get_logger(__name__)


def check_spec(spec: RelabelSpec, table: LabelTable) -> List[CheckRow]:
    """
    Report each relabel directive as FOUND, NOT FOUND or DUPLICATE

    A duplicate reports the first occurrence's anchor, the one apply uses.
    """
    rows: List[CheckRow] = []
    for relabel in spec.relabels:
        matches = table.matches(relabel.old)
        old = escape_label(relabel.old)
        if not matches:
            rows.append(CheckRow(old=old, status=CheckStatus.NOT_FOUND, line=relabel.line))
            continue
        first = matches[0]
        status = CheckStatus.FOUND
        if len(matches) > 1:
            status = CheckStatus.DUPLICATE
            logger.warning(
                f"label '{old}' shown {len(matches)} times; using the first at "
                f"({first.anchor.x:g}, {first.anchor.y:g})"
            )
        rows.append(CheckRow(
            old=old,
            status=status,
            x=first.anchor.x,
            y=first.anchor.y,
            occurrences=len(matches),
            line=relabel.line,
        ))
    return rows


def render_check_report(rows: List[CheckRow]) -> str:
    lines = []
    for row in rows:
        if row.status is CheckStatus.NOT_FOUND:
            lines.append(f"{row.status.value}\t{row.old}")
            continue
        text = f"{row.status.value}\t{row.old}\t{row.x:.6f}\t{row.y:.6f}"
        if row.status is CheckStatus.DUPLICATE:
            text += f"\t{row.occurrences} occurrences, first used"
        lines.append(text)
    found = sum(1 for row in rows if row.status is not CheckStatus.NOT_FOUND)
    lines.append(f"{found}/{len(rows)} found")
    return "\n".join(lines) + "\n"
