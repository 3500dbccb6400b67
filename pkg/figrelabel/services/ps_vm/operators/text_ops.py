"""
Text operators

The nine show-family operators consume their operands and record the string
with the current point instead of painting glyphs; the current point does
not advance. Font operators hand out opaque font dictionaries.
"""

from typing import NamedTuple

from figrelabel.domain.entities.geometry import transform_point
from figrelabel.services.label_table import LabelTable
from figrelabel.services.ps_vm.graphics import GraphicsState
from figrelabel.services.ps_vm.objects import PsArray, PsDict, PsName, PsString


class ShowArity(NamedTuple):
    operands: int      # total operands consumed, string included
    string_depth: int  # position of the string operand from the top


# string position and operand count for each show-family operator
SHOW_FAMILY = {
    b"show": ShowArity(1, 0),        # string
    b"ashow": ShowArity(3, 0),       # ax ay string
    b"widthshow": ShowArity(4, 0),   # cx cy char string
    b"awidthshow": ShowArity(6, 0),  # cx cy char ax ay string
    b"xshow": ShowArity(2, 1),       # string numarray
    b"yshow": ShowArity(2, 1),       # string numarray
    b"xyshow": ShowArity(2, 1),      # string numarray
    b"cshow": ShowArity(2, 0),       # proc string
    b"kshow": ShowArity(2, 0),       # proc string
}


def record_show(state: GraphicsState, table: LabelTable, raw: bytes) -> int:
    """
    Record a show event at the current point

    The anchor is computed as `currentpoint transform`, the same two steps a
    PostScript-level interception procedure takes, so both routes agree to
    the last bit.

    Raises:
        NoCurrentPoint: nothing was moved to yet
    """
    anchor = transform_point(state.ctm, state.current_point)
    return table.append(raw, anchor)


def _make_show(name: bytes, arity: ShowArity):
    def op_show(vm):
        vm.require(arity.operands)
        string = vm.peek(arity.string_depth)
        if type(string) is not PsString:
            raise vm.type_error("string", string)
        record_show(vm.gstate, vm.table, string.raw)
        del vm.operand_stack[-arity.operands:]
    op_show.__name__ = f"op_{name.decode('ascii')}"
    return op_show


def _new_font(name: bytes, size: float = 1.0) -> PsDict:
    font = PsDict(4, label="font")
    font.define(b"FontName", PsName(name))
    font.define(b"FontSize", float(size))
    return font


def _copy_font(font: PsDict) -> PsDict:
    copy = PsDict(font.capacity, label="font")
    copy.entries = dict(font.entries)
    return copy


def op_findfont(vm):
    key = vm.pop()
    if type(key) not in (PsName, PsString):
        raise vm.type_error("font name", key)
    name = key.name if type(key) is PsName else key.raw
    font = vm.font_directory.lookup_name(name)
    vm.push(font if font is not None else _new_font(name))


def op_scalefont(vm):
    size = vm.pop_number()
    font = _copy_font(vm.pop_dict())
    font.define(b"FontSize", font.get(PsName(b"FontSize"), 1.0) * size)
    vm.push(font)


def op_makefont(vm):
    matrix = vm.pop_array()
    font = _copy_font(vm.pop_dict())
    font.define(b"FontMatrix", PsArray(list(matrix.items)))
    vm.push(font)


def op_setfont(vm):
    vm.gstate.font = vm.pop_dict()


def op_definefont(vm):
    font = vm.pop_dict()
    key = vm.pop()
    vm.font_directory.put(key, font)
    vm.push(font)


def op_currentfont(vm):
    font = vm.gstate.font
    vm.push(font if font is not None else _new_font(b"Courier"))


def op_stringwidth(vm):
    vm.pop_string()
    vm.warn("stringwidth has no font metrics; pushing 0 0", once="stringwidth")
    vm.push(0.0)
    vm.push(0.0)


def op_charpath(vm):
    vm.pop_bool()
    vm.pop_string()


OPERATORS = {name: _make_show(name, arity) for name, arity in SHOW_FAMILY.items()}
OPERATORS.update({
    b"findfont": op_findfont,
    b"scalefont": op_scalefont,
    b"makefont": op_makefont,
    b"setfont": op_setfont,
    b"definefont": op_definefont,
    b"currentfont": op_currentfont,
    b"stringwidth": op_stringwidth,
    b"charpath": op_charpath,
})
