"""
Values on the interpreter stacks

Numbers are plain Python floats and booleans plain bools; every other
PostScript type gets a small class here. Arrays, strings and dictionaries
share their storage between references, so a put through one reference is
visible through all of them.
"""

from dataclasses import dataclass, field
from itertools import count
from reprlib import recursive_repr
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from figrelabel.services.ps_syntax.tokens import NUMBER_KINDS, STRING_KINDS, Token, TokenKind
from figrelabel.core.exceptions import UnbalancedProcedure


class _Singleton:
    __slots__ = ("label",)

    def __init__(self, label: str):
        self.label = label

    def __repr__(self) -> str:
        return self.label


MARK = _Singleton("-mark-")
NULL = _Singleton("null")


class PsName:
    """A name; literal names push themselves, executable names are looked up."""

    __slots__ = ("name", "literal", "offset", "line")

    def __init__(self, name: bytes, literal: bool = True, offset: Optional[int] = None, line: Optional[int] = None):
        self.name = name
        self.literal = literal
        self.offset = offset
        self.line = line

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PsName) and other.name == self.name and other.literal == self.literal

    def __hash__(self) -> int:
        return hash((self.name, self.literal))

    def __repr__(self) -> str:
        prefix = "/" if self.literal else ""
        return prefix + self.name.decode("latin-1")


class PsString:
    """Mutable byte string."""

    __slots__ = ("data",)

    def __init__(self, data: bytes = b""):
        self.data = bytearray(data)

    @property
    def raw(self) -> bytes:
        return bytes(self.data)

    def __repr__(self) -> str:
        return f"({self.data.decode('latin-1')})"


class PsArray:
    """Array; executable arrays are procedures."""

    __slots__ = ("items", "executable")

    def __init__(self, items: Optional[List[Any]] = None, executable: bool = False):
        self.items = items if items is not None else []
        self.executable = executable

    @recursive_repr("...")
    def __repr__(self) -> str:
        inner = " ".join(repr(item) for item in self.items)
        return "{" + inner + "}" if self.executable else "[" + inner + "]"


class PsDict:
    """Dictionary keyed by normalized keys; original key objects are kept."""

    __slots__ = ("entries", "capacity", "label")

    def __init__(self, capacity: int = 0, label: str = ""):
        self.entries: Dict[Any, Tuple[Any, Any]] = {}
        self.capacity = capacity
        self.label = label

    def get(self, key: Any, default: Any = None) -> Any:
        entry = self.entries.get(dict_key(key))
        return default if entry is None else entry[1]

    def lookup_name(self, name: bytes) -> Any:
        entry = self.entries.get(("name", name))
        return None if entry is None else entry[1]

    def put(self, key: Any, value: Any) -> None:
        if isinstance(key, PsString):
            key = PsName(key.raw)
        self.entries[dict_key(key)] = (key, value)

    def define(self, name: bytes, value: Any) -> None:
        self.entries[("name", name)] = (PsName(name), value)

    def known(self, key: Any) -> bool:
        return dict_key(key) in self.entries

    def items(self) -> Iterator[Tuple[Any, Any]]:
        return iter(list(self.entries.values()))

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        return f"-dict{':' + self.label if self.label else ''}-"


_save_ids = count(1)


@dataclass(frozen=True)
class SaveToken:
    id: int = field(default_factory=lambda: next(_save_ids))


@dataclass(frozen=True)
class Operator:
    """A built-in; fn receives the machine."""

    name: bytes
    fn: Callable[[Any], None] = field(repr=False, compare=False)

    def __repr__(self) -> str:
        return f"--{self.name.decode('latin-1')}--"


def dict_key(key: Any) -> Any:
    """Normalize a key: names and strings collide, numbers by value."""
    if isinstance(key, PsName):
        return ("name", key.name)
    if isinstance(key, PsString):
        return ("name", key.raw)
    if isinstance(key, bool):
        return ("bool", key)
    if isinstance(key, float):
        return ("num", key)
    return ("id", id(key))


def type_name(obj: Any) -> bytes:
    """The PostScript type name of a value, as returned by `type`."""
    if isinstance(obj, bool):
        return b"booleantype"
    if isinstance(obj, float):
        return b"integertype" if obj.is_integer() else b"realtype"
    if isinstance(obj, PsString):
        return b"stringtype"
    if isinstance(obj, PsName):
        return b"nametype"
    if isinstance(obj, PsArray):
        return b"arraytype"
    if isinstance(obj, PsDict):
        return b"fonttype" if obj.label == "font" else b"dicttype"
    if isinstance(obj, Operator):
        return b"operatortype"
    if isinstance(obj, SaveToken):
        return b"savetype"
    if obj is MARK:
        return b"marktype"
    return b"nulltype"


def ps_equal(left: Any, right: Any) -> bool:
    """Equality as the `eq` operator sees it."""
    if isinstance(left, bool) or isinstance(right, bool):
        return isinstance(left, bool) and isinstance(right, bool) and left == right
    if isinstance(left, float) and isinstance(right, float):
        return left == right
    text_types = (PsString, PsName)
    if isinstance(left, text_types) and isinstance(right, text_types):
        left_bytes = left.raw if isinstance(left, PsString) else left.name
        right_bytes = right.raw if isinstance(right, PsString) else right.name
        return left_bytes == right_bytes
    if isinstance(left, PsArray) and isinstance(right, PsArray):
        return left.items is right.items
    if isinstance(left, SaveToken) and isinstance(right, SaveToken):
        return left.id == right.id
    return left is right


def token_to_object(token: Token) -> Any:
    """Convert a non-structural token to a stack value."""
    kind = token.kind
    if kind in NUMBER_KINDS:
        return token.number
    if kind in STRING_KINDS:
        return PsString(token.decoded)
    if kind is TokenKind.LITERAL_NAME:
        return PsName(token.name, True, token.offset, token.line)
    if kind is TokenKind.EXECUTABLE_NAME:
        return PsName(token.name, False, token.offset, token.line)
    if kind is TokenKind.ARRAY_OPEN:
        return PsName(b"[", False, token.offset, token.line)
    if kind is TokenKind.ARRAY_CLOSE:
        return PsName(b"]", False, token.offset, token.line)
    raise ValueError(f"token {kind} has no object form")


def build_objects(tokens) -> Iterator[Any]:
    """
    Turn a token stream into executable objects

    Procedure bodies are collected into executable arrays; DSC comments are
    dropped. Consumes the stream lazily at the top level.

    Raises:
        UnbalancedProcedure: a stray '}' or end of input inside '{'
    """
    stack: List[Tuple[List[Any], Token]] = []
    for token in tokens:
        kind = token.kind
        if kind is TokenKind.DSC_COMMENT:
            continue
        if kind is TokenKind.PROC_OPEN:
            stack.append(([], token))
            continue
        if kind is TokenKind.PROC_CLOSE:
            if not stack:
                raise UnbalancedProcedure("unmatched '}'", offset=token.offset, line=token.line)
            items, _ = stack.pop()
            proc = PsArray(items, executable=True)
            if stack:
                stack[-1][0].append(proc)
            else:
                yield proc
            continue
        obj = token_to_object(token)
        if stack:
            stack[-1][0].append(obj)
        else:
            yield obj
    if stack:
        opener = stack[-1][1]
        raise UnbalancedProcedure("end of input inside procedure", offset=opener.offset, line=opener.line)
