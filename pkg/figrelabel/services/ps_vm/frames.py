"""
Execution-stack frames

The machine runs an explicit frame stack instead of recursing, so runaway
loops and deep procedure nesting are bounded by the step budget rather than
by the Python stack. Each frame performs one unit of work per step.
"""

from typing import Any, Iterator, List


class Frame:
    __slots__ = ()
    is_loop = False

    def step(self, vm) -> None:
        raise NotImplementedError


class StreamFrame(Frame):
    """Top-level program, pulled lazily from the token stream."""

    __slots__ = ("source",)

    def __init__(self, source: Iterator[Any]):
        self.source = source

    def step(self, vm) -> None:
        obj = next(self.source, _END)
        if obj is _END:
            vm.exec_stack.pop()
            return
        vm.execute_object(obj)


class ProcFrame(Frame):
    __slots__ = ("items", "index")

    def __init__(self, items: List[Any]):
        self.items = items
        self.index = 0

    def step(self, vm) -> None:
        index = self.index
        if index >= len(self.items):
            vm.exec_stack.pop()
            return
        self.index = index + 1
        vm.execute_object(self.items[index])


class RepeatFrame(Frame):
    __slots__ = ("remaining", "proc")
    is_loop = True

    def __init__(self, remaining: int, proc):
        self.remaining = remaining
        self.proc = proc

    def step(self, vm) -> None:
        if self.remaining <= 0:
            vm.exec_stack.pop()
            return
        self.remaining -= 1
        vm.call(self.proc)


class ForFrame(Frame):
    __slots__ = ("value", "increment", "limit", "proc")
    is_loop = True

    def __init__(self, initial: float, increment: float, limit: float, proc):
        self.value = initial
        self.increment = increment
        self.limit = limit
        self.proc = proc

    def step(self, vm) -> None:
        value = self.value
        if (self.increment >= 0 and value > self.limit) or (self.increment < 0 and value < self.limit):
            vm.exec_stack.pop()
            return
        self.value = value + self.increment
        vm.push(value)
        vm.call(self.proc)


class LoopFrame(Frame):
    __slots__ = ("proc",)
    is_loop = True

    def __init__(self, proc):
        self.proc = proc

    def step(self, vm) -> None:
        vm.call(self.proc)


class ForallFrame(Frame):
    """Iterates a snapshot; each entry is a tuple of values to push."""

    __slots__ = ("entries", "index", "proc")
    is_loop = True

    def __init__(self, entries: List[tuple], proc):
        self.entries = entries
        self.index = 0
        self.proc = proc

    def step(self, vm) -> None:
        if self.index >= len(self.entries):
            vm.exec_stack.pop()
            return
        entry = self.entries[self.index]
        self.index += 1
        for value in entry:
            vm.push(value)
        vm.call(self.proc)


_END = object()
