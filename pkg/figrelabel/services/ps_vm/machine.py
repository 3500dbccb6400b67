"""
PostScript virtual machine

A restricted Level-1 interpreter: operand stack, dictionary stack, an
explicit execution stack and a graphics state. Show-family operators record
label anchors instead of painting.
"""

from dataclasses import dataclass
import math
from typing import Any, Iterable, List, Optional, Tuple, Union

from figrelabel.config.settings import UnknownOperatorMode, VmConfig
from figrelabel.core.exceptions import (
    FigRelabelError,
    InvalidExit,
    RangeCheck,
    StackUnderflow,
    StepBudgetExceeded,
    TypeMismatch,
    UndefinedName,
)
from figrelabel.core.constants import INTEGER_LIMIT, INTEGER_TOLERANCE
from figrelabel.core.logging import get_logger
from figrelabel.domain.entities.label import LabelRecord
from figrelabel.services.label_table import LabelTable
from figrelabel.services.ps_syntax.tokenizer import iter_tokens
from figrelabel.services.ps_syntax.tokens import Token
from figrelabel.services.ps_vm.frames import Frame, ProcFrame, StreamFrame
from figrelabel.services.ps_vm.graphics import GraphicsState
from figrelabel.services.ps_vm.objects import (
    MARK,
    Operator,
    PsArray,
    PsDict,
    PsName,
    PsString,
    build_objects,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class VmWarning:
    message: str
    offset: Optional[int] = None
    line: Optional[int] = None

    def __str__(self) -> str:
        if self.offset is None:
            return self.message
        return f"{self.message} (offset {self.offset}, line {self.line})"


@dataclass(frozen=True)
class ExtractionResult:
    """Outcome of one program run; the table is frozen."""

    table: LabelTable
    warnings: Tuple[VmWarning, ...]
    steps_used: int
    halted: bool = False

    @property
    def labels(self) -> Tuple[LabelRecord, ...]:
        return self.table.records


class PsMachine:
    """
    Interpreter instance

    Not thread-safe; create one per program run. The operand stack and
    lookup() are public so tests can inspect the final machine state.
    """

    def __init__(self, config: Optional[VmConfig] = None):
        from figrelabel.services.ps_vm.operators import install_operators

        self.config = config or VmConfig()
        self.operand_stack: List[Any] = []
        self.exec_stack: List[Frame] = []
        self.systemdict = PsDict(label="systemdict")
        self.userdict = PsDict(200, label="userdict")
        self.dict_stack: List[PsDict] = [self.systemdict, self.userdict]
        self.font_directory = PsDict(label="FontDirectory")
        self.gstate = GraphicsState()
        self.gsave_stack: List[GraphicsState] = []
        self.save_snapshots: dict = {}
        self.table = LabelTable()
        self.warnings: List[VmWarning] = []
        self.steps_used = 0
        self.halted = False
        self.current_name: Optional[PsName] = None
        self._warned_once: set = set()
        install_operators(self)

    # ------------------------------------------------------------------ running

    def run(self, program: Union[bytes, Iterable[Token]]) -> "PsMachine":
        """
        Execute a program to completion

        Args:
            program: raw source bytes or a token iterable

        Raises:
            FigRelabelError subclasses, positioned at the failing token
        """
        tokens = iter_tokens(program) if isinstance(program, (bytes, bytearray)) else iter(program)
        self.halted = False
        self.exec_stack.append(StreamFrame(build_objects(tokens)))
        self._loop()
        return self

    def _loop(self) -> None:
        stack = self.exec_stack
        budget = self.config.max_steps
        steps = self.steps_used
        try:
            while stack:
                if steps >= budget:
                    raise StepBudgetExceeded(f"step budget of {budget} exhausted")
                steps += 1
                stack[-1].step(self)
        except FigRelabelError as exc:
            stack.clear()
            self._locate(exc)
            raise
        except (ArithmeticError, ValueError, RecursionError) as exc:
            # overflow, domain errors and self-referencing names from figure data
            stack.clear()
            error = RangeCheck(f"'{self.operator_name}' has no result: {type(exc).__name__}")
            self._locate(error)
            raise error from None
        finally:
            self.steps_used = steps

    def _locate(self, error: FigRelabelError) -> None:
        name = self.current_name
        if name is not None:
            error.locate(name.offset, name.line)

    def result(self) -> ExtractionResult:
        if self.gsave_stack:
            self.warn(f"{len(self.gsave_stack)} gsave(s) left open at end of program")
        return ExtractionResult(
            table=self.table.freeze(),
            warnings=tuple(self.warnings),
            steps_used=self.steps_used,
            halted=self.halted,
        )

    def execute_object(self, obj: Any) -> None:
        """Execute one object read from a program or procedure body."""
        if type(obj) is PsName and not obj.literal:
            self.current_name = obj
            self.execute_name(obj.name)
        else:
            self.operand_stack.append(obj)

    def execute_name(self, name: bytes) -> None:
        value = self.lookup(name)
        if value is None:
            if self.config.unknown_operator_mode is UnknownOperatorMode.ERROR:
                raise UndefinedName(f"undefined name '{name.decode('latin-1')}'")
            self.warn(f"undefined name '{name.decode('latin-1')}' skipped")
            return
        self.execute_value(value)

    def execute_value(self, value: Any) -> None:
        """Run a value the way executing a name bound to it would."""
        kind = type(value)
        if kind is Operator:
            value.fn(self)
        elif kind is PsArray and value.executable:
            if value.items:
                self.exec_stack.append(ProcFrame(value.items))
        elif kind is PsName and not value.literal:
            self.execute_name(value.name)
        else:
            self.operand_stack.append(value)

    call = execute_value

    def push_frame(self, frame: Frame) -> None:
        self.exec_stack.append(frame)

    def exit_loop(self) -> None:
        stack = self.exec_stack
        while stack:
            frame = stack.pop()
            if frame.is_loop:
                return
            if isinstance(frame, StreamFrame):
                break
        raise InvalidExit("exit outside of a loop")

    def halt(self) -> None:
        self.exec_stack.clear()
        self.halted = True

    # ------------------------------------------------------------ dictionaries

    def lookup(self, name: bytes) -> Any:
        """Resolve a name through the dictionary stack; None when undefined."""
        for dictionary in reversed(self.dict_stack):
            value = dictionary.lookup_name(name)
            if value is not None:
                return value
        return None

    def where(self, key: Any) -> Optional[PsDict]:
        for dictionary in reversed(self.dict_stack):
            if dictionary.known(key):
                return dictionary
        return None

    @property
    def current_dict(self) -> PsDict:
        return self.dict_stack[-1]

    # ---------------------------------------------------------- operand stack

    def push(self, value: Any) -> None:
        if type(value) is int:
            value = float(value)
        self.operand_stack.append(value)

    def pop(self) -> Any:
        try:
            return self.operand_stack.pop()
        except IndexError:
            raise StackUnderflow(f"stack underflow in '{self.operator_name}'") from None

    def peek(self, depth: int = 0) -> Any:
        if depth >= len(self.operand_stack):
            raise StackUnderflow(f"stack underflow in '{self.operator_name}'")
        return self.operand_stack[-1 - depth]

    def require(self, count: int) -> None:
        if len(self.operand_stack) < count:
            raise StackUnderflow(f"'{self.operator_name}' needs {count} operand(s)")

    def pop_number(self) -> float:
        value = self.pop()
        if type(value) is not float:
            raise self.type_error("number", value)
        return value

    def pop_int(self) -> int:
        value = self.pop_number()
        if not math.isfinite(value) or abs(value) > INTEGER_LIMIT:
            raise RangeCheck(f"'{self.operator_name}' needs an integer, got {value!r}")
        rounded = round(value)
        if abs(value - rounded) > INTEGER_TOLERANCE:
            raise TypeMismatch(f"'{self.operator_name}' needs an integer, got {value!r}")
        return int(rounded)

    def pop_bool(self) -> bool:
        value = self.pop()
        if type(value) is not bool:
            raise self.type_error("boolean", value)
        return value

    def pop_string(self) -> PsString:
        value = self.pop()
        if type(value) is not PsString:
            raise self.type_error("string", value)
        return value

    def pop_array(self) -> PsArray:
        value = self.pop()
        if type(value) is not PsArray:
            raise self.type_error("array", value)
        return value

    def pop_proc(self) -> PsArray:
        value = self.pop()
        if type(value) is not PsArray or not value.executable:
            raise self.type_error("procedure", value)
        return value

    def pop_dict(self) -> PsDict:
        value = self.pop()
        if type(value) is not PsDict:
            raise self.type_error("dictionary", value)
        return value

    def count_to_mark(self) -> int:
        for depth, value in enumerate(reversed(self.operand_stack)):
            if value is MARK:
                return depth
        return -1

    # ------------------------------------------------------------ diagnostics

    @property
    def operator_name(self) -> str:
        return self.current_name.name.decode("latin-1") if self.current_name else "?"

    def type_error(self, expected: str, got: Any) -> TypeMismatch:
        return TypeMismatch(f"'{self.operator_name}' expected {expected}, got {got!r}")

    def warn(self, message: str, once: Optional[str] = None) -> None:
        if once is not None:
            if once in self._warned_once:
                return
            self._warned_once.add(once)
        name = self.current_name
        warning = VmWarning(message, name.offset if name else None, name.line if name else None)
        self.warnings.append(warning)
        logger.debug(f"vm warning: {warning}")


def execute(program: Union[bytes, Iterable[Token]], config: Optional[VmConfig] = None) -> ExtractionResult:
    """
    Run a figure program and collect its labels

    Args:
        program: raw source bytes or tokens
        config: interpreter configuration

    Returns:
        ExtractionResult with a frozen label table
    """
    return PsMachine(config).run(program).result()
