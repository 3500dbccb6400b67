"""
Array, string and generic composite operators
"""

from figrelabel.core.constants import MAX_COMPOSITE_SIZE
from figrelabel.core.exceptions import RangeCheck, UndefinedName
from figrelabel.services.ps_vm.objects import MARK, NULL, PsArray, PsDict, PsName, PsString


def _size_operand(vm) -> int:
    size = vm.pop_int()
    if size < 0:
        raise RangeCheck(f"negative size {size}")
    if size > MAX_COMPOSITE_SIZE:
        raise RangeCheck(f"size {size} exceeds {MAX_COMPOSITE_SIZE}")
    return size


def op_array(vm):
    vm.push(PsArray([NULL] * _size_operand(vm)))


def op_string(vm):
    vm.push(PsString(bytes(_size_operand(vm))))


def op_mark_open(vm):
    vm.push(MARK)


def op_mark_close(vm):
    depth = vm.count_to_mark()
    if depth < 0:
        raise RangeCheck("']' without a matching '['")
    stack = vm.operand_stack
    items = stack[len(stack) - depth:]
    del stack[len(stack) - depth - 1:]
    vm.push(PsArray(items))


def op_aload(vm):
    array = vm.pop_array()
    for item in array.items:
        vm.push(item)
    vm.push(array)


def op_astore(vm):
    array = vm.pop_array()
    size = len(array.items)
    vm.require(size)
    if size:
        stack = vm.operand_stack
        array.items[:] = stack[-size:]
        del stack[-size:]
    vm.push(array)


def op_length(vm):
    value = vm.pop()
    kind = type(value)
    if kind is PsArray:
        vm.push(float(len(value.items)))
    elif kind is PsString:
        vm.push(float(len(value.data)))
    elif kind is PsDict:
        vm.push(float(len(value)))
    elif kind is PsName:
        vm.push(float(len(value.name)))
    else:
        raise vm.type_error("composite or name", value)


def _checked_index(vm, size: int) -> int:
    index = vm.pop_int()
    if not 0 <= index < size:
        raise RangeCheck(f"index {index} outside 0..{size - 1}")
    return index


def op_get(vm):
    container = vm.peek(1)
    kind = type(container)
    if kind is PsDict:
        key = vm.pop()
        vm.pop()
        if not container.known(key):
            raise UndefinedName(f"key {key!r} not in dictionary")
        vm.push(container.get(key))
        return
    if kind is PsArray:
        index = _checked_index(vm, len(container.items))
        vm.pop()
        vm.push(container.items[index])
        return
    if kind is PsString:
        index = _checked_index(vm, len(container.data))
        vm.pop()
        vm.push(float(container.data[index]))
        return
    raise vm.type_error("array, string or dictionary", container)


def op_put(vm):
    container = vm.peek(2)
    kind = type(container)
    if kind is PsDict:
        value = vm.pop()
        key = vm.pop()
        vm.pop()
        container.put(key, value)
        return
    if kind is PsArray:
        value = vm.pop()
        index = _checked_index(vm, len(container.items))
        vm.pop()
        container.items[index] = value
        return
    if kind is PsString:
        value = vm.pop_int()
        index = _checked_index(vm, len(container.data))
        vm.pop()
        container.data[index] = value & 0xFF
        return
    raise vm.type_error("array, string or dictionary", container)


def op_getinterval(vm):
    count = vm.pop_int()
    start = vm.pop_int()
    container = vm.pop()
    if type(container) is PsArray:
        size = len(container.items)
    elif type(container) is PsString:
        size = len(container.data)
    else:
        raise vm.type_error("array or string", container)
    if start < 0 or count < 0 or start + count > size:
        raise RangeCheck(f"interval {start}+{count} outside length {size}")
    if type(container) is PsArray:
        vm.push(PsArray(container.items[start:start + count], container.executable))
    else:
        vm.push(PsString(container.data[start:start + count]))


def op_putinterval(vm):
    source = vm.pop()
    start = vm.pop_int()
    target = vm.pop()
    if type(target) is PsArray and type(source) is PsArray:
        destination, values = target.items, source.items
    elif type(target) is PsString and type(source) is PsString:
        destination, values = target.data, source.data
    else:
        raise vm.type_error("matching arrays or strings", (target, source))
    if start < 0 or start + len(values) > len(destination):
        raise RangeCheck(f"putinterval at {start} overflows length {len(destination)}")
    destination[start:start + len(values)] = values


OPERATORS = {
    b"array": op_array,
    b"string": op_string,
    b"[": op_mark_open,
    b"]": op_mark_close,
    b"aload": op_aload,
    b"astore": op_astore,
    b"length": op_length,
    b"get": op_get,
    b"put": op_put,
    b"getinterval": op_getinterval,
    b"putinterval": op_putinterval,
}
