"""
Restricted PostScript interpreter
"""

from figrelabel.services.ps_vm.graphics import GraphicsState
from figrelabel.services.ps_vm.machine import ExtractionResult, PsMachine, VmWarning, execute
from figrelabel.services.ps_vm.objects import (
    MARK,
    NULL,
    PsArray,
    PsDict,
    PsName,
    PsString,
    SaveToken,
    build_objects,
)
from figrelabel.services.ps_vm.operators.text_ops import SHOW_FAMILY, record_show

__all__ = [
    "ExtractionResult",
    "GraphicsState",
    "MARK",
    "NULL",
    "PsArray",
    "PsDict",
    "PsMachine",
    "PsName",
    "PsString",
    "SHOW_FAMILY",
    "SaveToken",
    "VmWarning",
    "build_objects",
    "execute",
    "record_show",
]
