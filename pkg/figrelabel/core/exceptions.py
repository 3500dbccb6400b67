"""
Exception hierarchy

Every failure the pipeline can report is a FigRelabelError carrying an
ErrorCode and, where one exists, the byte offset and line of the input
that triggered it.
"""

from typing import Any, Optional

from figrelabel.core.error_codes import ErrorCode, get_exit_status


class FigRelabelError(Exception):
    """Base error"""

    code: ErrorCode = ErrorCode.SUCCESS

    def __init__(
        self,
        message: str,
        offset: Optional[int] = None,
        line: Optional[int] = None,
        data: Any = None,
        code: Optional[ErrorCode] = None,
    ):
        if code is not None:
            self.code = code
        self.message = message
        self.offset = offset
        self.line = line
        self.data = data
        super().__init__(message)

    @property
    def exit_status(self) -> int:
        return get_exit_status(self.code)

    def locate(self, offset: Optional[int], line: Optional[int]) -> "FigRelabelError":
        """Attach a position unless one is already known."""
        if self.offset is None and offset is not None:
            self.offset = offset
            self.line = line
        return self

    def __str__(self) -> str:
        text = f"[{self.code.name}] {self.message}"
        if self.offset is not None:
            text += f" (offset {self.offset}, line {self.line})"
        elif self.line is not None:
            text += f" (line {self.line})"
        return text


# --- PostScript syntax / DSC -------------------------------------------------

class PsSyntaxError(FigRelabelError):
    code = ErrorCode.SYNTAX_MALFORMED_TOKEN


class UnterminatedString(PsSyntaxError):
    code = ErrorCode.SYNTAX_UNTERMINATED_STRING


class InvalidHexString(PsSyntaxError):
    code = ErrorCode.SYNTAX_INVALID_HEX_STRING


class InvalidRadixNumber(PsSyntaxError):
    code = ErrorCode.SYNTAX_INVALID_RADIX_NUMBER


class Ascii85NotSupported(PsSyntaxError):
    code = ErrorCode.SYNTAX_ASCII85_UNSUPPORTED


class UnbalancedProcedure(PsSyntaxError):
    code = ErrorCode.SYNTAX_UNBALANCED_PROCEDURE


class MalformedToken(PsSyntaxError):
    code = ErrorCode.SYNTAX_MALFORMED_TOKEN


class MalformedBoundingBox(PsSyntaxError):
    code = ErrorCode.DSC_MALFORMED_BOUNDING_BOX


# --- Virtual machine ----------------------------------------------------------

class VmError(FigRelabelError):
    code = ErrorCode.VM_TYPE_MISMATCH


class StackUnderflow(VmError):
    code = ErrorCode.VM_STACK_UNDERFLOW


class TypeMismatch(VmError):
    code = ErrorCode.VM_TYPE_MISMATCH


class UndefinedName(VmError):
    code = ErrorCode.VM_UNDEFINED_NAME


class RangeCheck(VmError):
    code = ErrorCode.VM_RANGE_CHECK


class InvalidExit(VmError):
    code = ErrorCode.VM_INVALID_EXIT


class SingularMatrix(VmError):
    code = ErrorCode.VM_SINGULAR_MATRIX


class NoCurrentPoint(VmError):
    code = ErrorCode.VM_NO_CURRENT_POINT


class UnsupportedOperator(VmError):
    code = ErrorCode.VM_UNSUPPORTED_OPERATOR


class StepBudgetExceeded(VmError):
    code = ErrorCode.VM_STEP_BUDGET_EXCEEDED


# --- Relabel spec --------------------------------------------------------------

class SpecError(FigRelabelError):
    code = ErrorCode.SPEC_SYNTAX_ERROR


class SpecSyntaxError(SpecError):
    code = ErrorCode.SPEC_SYNTAX_ERROR


class UnknownUnit(SpecError):
    code = ErrorCode.SPEC_UNKNOWN_UNIT


class MalformedNumber(SpecError):
    code = ErrorCode.SPEC_MALFORMED_NUMBER


class DuplicateFigureLine(SpecError):
    code = ErrorCode.SPEC_DUPLICATE_FIGURE_LINE


class MissingFigureLine(SpecError):
    code = ErrorCode.SPEC_MISSING_FIGURE_LINE


class EmptyOldLabel(SpecError):
    code = ErrorCode.SPEC_EMPTY_OLD_LABEL


# --- Resolve / emit / I/O --------------------------------------------------------

class MissingBoundingBox(FigRelabelError):
    code = ErrorCode.EMIT_MISSING_BOUNDING_BOX


class FigureIOError(FigRelabelError):
    code = ErrorCode.IO_READ_FAILED
