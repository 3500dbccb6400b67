"""
Control operators

Loops push frames onto the execution stack; `exit` unwinds to the innermost
loop frame. Operators that read raw data from the program text cannot be
followed by a token-level interpreter and are fatal.
"""

from figrelabel.core.exceptions import RangeCheck, UnsupportedOperator
from figrelabel.services.ps_vm.frames import ForallFrame, ForFrame, LoopFrame, RepeatFrame
from figrelabel.services.ps_vm.objects import PsArray, PsDict, PsString

# operators that consume inline binary or encoded data
DATA_READING_OPERATORS = (
    b"image",
    b"colorimage",
    b"imagemask",
    b"readhexstring",
    b"readstring",
    b"readline",
    b"currentfile",
    b"file",
    b"filter",
    b"eexec",
    b"run",
    b"stopped",
)


def op_exec(vm):
    vm.call(vm.pop())


def op_if(vm):
    proc = vm.pop_proc()
    if vm.pop_bool():
        vm.call(proc)


def op_ifelse(vm):
    else_proc = vm.pop_proc()
    then_proc = vm.pop_proc()
    vm.call(then_proc if vm.pop_bool() else else_proc)


def op_for(vm):
    proc = vm.pop_proc()
    limit = vm.pop_number()
    increment = vm.pop_number()
    initial = vm.pop_number()
    if increment == 0:
        vm.warn("for loop with zero increment runs until the step budget is spent", once="for-zero")
    vm.push_frame(ForFrame(initial, increment, limit, proc))


def op_repeat(vm):
    proc = vm.pop_proc()
    times = vm.pop_int()
    if times < 0:
        raise RangeCheck(f"repeat count {times} is negative")
    if times:
        vm.push_frame(RepeatFrame(times, proc))


def op_loop(vm):
    vm.push_frame(LoopFrame(vm.pop_proc()))


def op_exit(vm):
    vm.exit_loop()


def op_forall(vm):
    proc = vm.pop_proc()
    container = vm.pop()
    kind = type(container)
    if kind is PsArray:
        entries = [(item,) for item in container.items]
    elif kind is PsString:
        entries = [(float(byte),) for byte in container.raw]
    elif kind is PsDict:
        entries = list(container.items())
    else:
        raise vm.type_error("array, string or dictionary", container)
    if entries:
        vm.push_frame(ForallFrame(entries, proc))


def op_quit(vm):
    vm.halt()


def op_bind(vm):
    # binding is an optimisation only; name lookup stays dynamic
    vm.peek()


def _unsupported(name: bytes):
    def op(vm):
        raise UnsupportedOperator(
            f"'{name.decode('ascii')}' reads data from the program stream and cannot be interpreted"
        )
    return op


OPERATORS = {
    b"exec": op_exec,
    b"if": op_if,
    b"ifelse": op_ifelse,
    b"for": op_for,
    b"repeat": op_repeat,
    b"loop": op_loop,
    b"exit": op_exit,
    b"forall": op_forall,
    b"quit": op_quit,
    b"stop": op_quit,
    b"bind": op_bind,
}
OPERATORS.update({name: _unsupported(name) for name in DATA_READING_OPERATORS})
