"""
Operand stack operators
"""

from figrelabel.core.exceptions import RangeCheck, StackUnderflow
from figrelabel.services.ps_vm.objects import MARK, PsArray, PsDict, PsString


def op_dup(vm):
    vm.push(vm.peek())


def op_pop(vm):
    vm.pop()


def op_exch(vm):
    vm.require(2)
    stack = vm.operand_stack
    stack[-1], stack[-2] = stack[-2], stack[-1]


def _depth_operand(vm, what: str) -> int:
    n = vm.pop_int()
    if n < 0:
        raise RangeCheck(f"negative {what} {n}")
    if n > len(vm.operand_stack):
        raise StackUnderflow(f"{what} {n} exceeds stack depth {len(vm.operand_stack)}")
    return n


def op_copy(vm):
    top = vm.peek()
    if type(top) is float:
        n = _depth_operand(vm, "copy count")
        if n:
            vm.operand_stack.extend(vm.operand_stack[-n:])
        return
    if type(top) is PsArray:
        target = vm.pop_array()
        source = vm.pop_array()
        size = len(source.items)
        if size > len(target.items):
            raise RangeCheck("copy target array is too short")
        target.items[:size] = source.items
        vm.push(PsArray(target.items[:size], target.executable) if size < len(target.items) else target)
        return
    if type(top) is PsString:
        target = vm.pop_string()
        source = vm.pop_string()
        size = len(source.data)
        if size > len(target.data):
            raise RangeCheck("copy target string is too short")
        target.data[:size] = source.data
        vm.push(PsString(target.data[:size]) if size < len(target.data) else target)
        return
    if type(top) is PsDict:
        target = vm.pop_dict()
        source = vm.pop_dict()
        target.entries.update(source.entries)
        vm.push(target)
        return
    raise vm.type_error("count or composite", top)


def op_index(vm):
    n = vm.pop_int()
    if n < 0 or n >= len(vm.operand_stack):
        raise RangeCheck(f"index {n} outside stack of depth {len(vm.operand_stack)}")
    vm.push(vm.operand_stack[-1 - n])


def op_roll(vm):
    shift = vm.pop_int()
    n = _depth_operand(vm, "roll count")
    if n == 0:
        return
    shift %= n
    if shift:
        stack = vm.operand_stack
        segment = stack[-n:]
        stack[-n:] = segment[-shift:] + segment[:-shift]


def op_count(vm):
    vm.push(float(len(vm.operand_stack)))


def op_clear(vm):
    vm.operand_stack.clear()


def op_mark(vm):
    vm.push(MARK)


def op_cleartomark(vm):
    depth = vm.count_to_mark()
    if depth < 0:
        raise RangeCheck("cleartomark without a mark")
    del vm.operand_stack[len(vm.operand_stack) - depth - 1:]


def op_counttomark(vm):
    depth = vm.count_to_mark()
    if depth < 0:
        raise RangeCheck("counttomark without a mark")
    vm.push(float(depth))


OPERATORS = {
    b"dup": op_dup,
    b"pop": op_pop,
    b"exch": op_exch,
    b"copy": op_copy,
    b"index": op_index,
    b"roll": op_roll,
    b"count": op_count,
    b"clear": op_clear,
    b"mark": op_mark,
    b"cleartomark": op_cleartomark,
    b"counttomark": op_counttomark,
}
