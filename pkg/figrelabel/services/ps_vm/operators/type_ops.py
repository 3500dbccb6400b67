"""
Type, conversion and output operators

Output operators consume their operands and log at DEBUG; figures have no
standard output worth keeping.
"""

from figrelabel.core.exceptions import RangeCheck
from figrelabel.core.logging import get_logger
from figrelabel.services.ps_vm.objects import Operator, PsArray, PsName, PsString, type_name

logger = get_logger(__name__)


def format_value(value) -> bytes:
    """Text form used by cvs and =."""
    if type(value) is bool:
        return b"true" if value else b"false"
    if type(value) is float:
        if value.is_integer() and abs(value) < 2 ** 31:
            return str(int(value)).encode("ascii")
        return repr(value).encode("ascii")
    if type(value) is PsString:
        return value.raw
    if type(value) is PsName:
        return value.name
    if type(value) is Operator:
        return value.name
    return b"--nostringval--"


def op_cvn(vm):
    value = vm.pop()
    if type(value) is PsString:
        vm.push(PsName(value.raw))
    elif type(value) is PsName:
        vm.push(value)
    else:
        raise vm.type_error("string or name", value)


def op_cvs(vm):
    buffer = vm.pop_string()
    text = format_value(vm.pop())
    if len(text) > len(buffer.data):
        raise RangeCheck(f"cvs buffer of {len(buffer.data)} bytes is too short")
    buffer.data[:len(text)] = text
    vm.push(PsString(text))


def op_cvx(vm):
    value = vm.pop()
    if type(value) is PsArray:
        value = PsArray(value.items, executable=True)
    elif type(value) is PsName:
        value = PsName(value.name, False, value.offset, value.line)
    vm.push(value)


def op_cvlit(vm):
    value = vm.pop()
    if type(value) is PsArray:
        value = PsArray(value.items, executable=False)
    elif type(value) is PsName:
        value = PsName(value.name, True, value.offset, value.line)
    vm.push(value)


def op_xcheck(vm):
    value = vm.pop()
    kind = type(value)
    if kind is PsArray:
        vm.push(value.executable)
    elif kind is PsName:
        vm.push(not value.literal)
    else:
        vm.push(kind is Operator)


def op_type(vm):
    vm.push(PsName(type_name(vm.pop()), literal=False))


def op_access(vm):
    # access attributes are not tracked
    vm.peek()


def op_print(vm):
    text = vm.pop_string().raw
    logger.opt(lazy=True).debug("figure print: {}", lambda: repr(text))


def op_equals(vm):
    value = vm.pop()
    logger.opt(lazy=True).debug("figure =: {}", lambda: repr(format_value(value)))


def op_equals_equals(vm):
    value = vm.pop()
    logger.opt(lazy=True).debug("figure ==: {}", lambda: repr(value))


def op_pstack(vm):
    snapshot = list(reversed(vm.operand_stack))
    logger.opt(lazy=True).debug("figure pstack: {}", lambda: repr(snapshot))


def op_flush(vm):
    pass


OPERATORS = {
    b"cvn": op_cvn,
    b"cvs": op_cvs,
    b"cvx": op_cvx,
    b"cvlit": op_cvlit,
    b"xcheck": op_xcheck,
    b"type": op_type,
    b"readonly": op_access,
    b"executeonly": op_access,
    b"noaccess": op_access,
    b"print": op_print,
    b"=": op_equals,
    b"==": op_equals_equals,
    b"pstack": op_pstack,
    b"flush": op_flush,
}
