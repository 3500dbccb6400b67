"""
Dictionary operators

systemdict and userdict sit permanently at the bottom of the dictionary
stack; `end` never removes them.
"""

from figrelabel.core.exceptions import RangeCheck, StackUnderflow, UndefinedName
from figrelabel.services.ps_vm.objects import PsDict

PERMANENT_DICTS = 2


def _key_text(key) -> str:
    return repr(key).lstrip("/")


def op_dict(vm):
    capacity = vm.pop_int()
    if capacity < 0:
        raise RangeCheck(f"negative dictionary size {capacity}")
    vm.push(PsDict(capacity))


def op_def(vm):
    value = vm.pop()
    key = vm.pop()
    vm.current_dict.put(key, value)


def op_load(vm):
    key = vm.pop()
    owner = vm.where(key)
    if owner is None:
        raise UndefinedName(f"undefined name '{_key_text(key)}'")
    vm.push(owner.get(key))


def op_begin(vm):
    vm.dict_stack.append(vm.pop_dict())


def op_end(vm):
    if len(vm.dict_stack) <= PERMANENT_DICTS:
        raise StackUnderflow("'end' would pop a permanent dictionary")
    vm.dict_stack.pop()


def op_store(vm):
    value = vm.pop()
    key = vm.pop()
    owner = vm.where(key) or vm.current_dict
    owner.put(key, value)


def op_known(vm):
    key = vm.pop()
    vm.push(vm.pop_dict().known(key))


def op_where(vm):
    owner = vm.where(vm.pop())
    if owner is None:
        vm.push(False)
    else:
        vm.push(owner)
        vm.push(True)


def op_currentdict(vm):
    vm.push(vm.current_dict)


def op_userdict(vm):
    vm.push(vm.userdict)


def op_systemdict(vm):
    vm.push(vm.systemdict)


def op_maxlength(vm):
    dictionary = vm.pop_dict()
    vm.push(float(max(dictionary.capacity, len(dictionary))))


OPERATORS = {
    b"dict": op_dict,
    b"def": op_def,
    b"load": op_load,
    b"begin": op_begin,
    b"end": op_end,
    b"store": op_store,
    b"known": op_known,
    b"where": op_where,
    b"currentdict": op_currentdict,
    b"userdict": op_userdict,
    b"systemdict": op_systemdict,
    b"maxlength": op_maxlength,
}
