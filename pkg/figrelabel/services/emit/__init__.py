"""
Output generation: placement plans, relabeled EPS, listings
"""

from figrelabel.services.emit.eps_writer import emit_relabeled_eps, format_number
from figrelabel.services.emit.listing import emit_label_listing, emit_tex_overlay, escape_label
from figrelabel.services.emit.resolver import EmitPlan, Placement, Suppression, resolve

__all__ = [
    "EmitPlan",
    "Placement",
    "Suppression",
    "emit_label_listing",
    "emit_relabeled_eps",
    "emit_tex_overlay",
    "escape_label",
    "format_number",
    "resolve",
]
