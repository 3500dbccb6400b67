# -*- coding: utf-8 -*-
"""
Error code definitions

Detailed error classification, CLI exit statuses and user-facing hints.
"""

from enum import IntEnum
from typing import Dict

from figrelabel.core.constants import EXIT_IO_ERROR, EXIT_PARSE_ERROR


class ErrorCategory(IntEnum):
    """Error categories"""
    SUCCESS = 0

    # 1xxx - PostScript syntax / DSC errors
    SYNTAX_ERROR = 1000

    # 2xxx - Virtual machine errors
    VM_ERROR = 2000

    # 3xxx - Relabel spec errors
    SPEC_ERROR = 3000

    # 4xxx - Resolve / emit errors
    EMIT_ERROR = 4000

    # 5xxx - I/O errors
    IO_ERROR = 5000


class ErrorCode(IntEnum):
    """
    Detailed error codes

    Format: XXYY
    - XX: category (10=syntax, 20=VM, 30=spec, 40=emit, 50=I/O)
    - YY: specific error
    """
    SUCCESS = 0

    # 10xx - PostScript syntax / DSC
    SYNTAX_UNTERMINATED_STRING = 1001    # EOF inside (...)
    SYNTAX_INVALID_HEX_STRING = 1002     # non-hex digit inside <...>
    SYNTAX_INVALID_RADIX_NUMBER = 1003   # base#digits out of range
    SYNTAX_ASCII85_UNSUPPORTED = 1004    # <~...~>
    SYNTAX_UNBALANCED_PROCEDURE = 1005   # stray } or EOF inside {
    SYNTAX_MALFORMED_TOKEN = 1006        # stray >, unknown binary wrapper
    DSC_MALFORMED_BOUNDING_BOX = 1010    # %%BoundingBox without four numbers

    # 20xx - Virtual machine
    VM_STACK_UNDERFLOW = 2001
    VM_TYPE_MISMATCH = 2002
    VM_UNDEFINED_NAME = 2003
    VM_RANGE_CHECK = 2004
    VM_INVALID_EXIT = 2005
    VM_SINGULAR_MATRIX = 2006
    VM_NO_CURRENT_POINT = 2007
    VM_UNSUPPORTED_OPERATOR = 2008
    VM_STEP_BUDGET_EXCEEDED = 2009

    # 30xx - Relabel spec
    SPEC_SYNTAX_ERROR = 3001
    SPEC_UNKNOWN_UNIT = 3002
    SPEC_MALFORMED_NUMBER = 3003
    SPEC_DUPLICATE_FIGURE_LINE = 3004
    SPEC_MISSING_FIGURE_LINE = 3005
    SPEC_EMPTY_OLD_LABEL = 3006

    # 40xx - Resolve / emit
    EMIT_MISSING_BOUNDING_BOX = 4001

    # 50xx - I/O
    IO_READ_FAILED = 5001
    IO_WRITE_FAILED = 5002


def get_category(code: ErrorCode) -> ErrorCategory:
    """Map an error code to its category."""
    if code == ErrorCode.SUCCESS:
        return ErrorCategory.SUCCESS
    return ErrorCategory((int(code) // 1000) * 1000)


# Category to CLI exit status
ERROR_EXIT_STATUS: Dict[ErrorCategory, int] = {
    ErrorCategory.SYNTAX_ERROR: EXIT_PARSE_ERROR,
    ErrorCategory.VM_ERROR: EXIT_PARSE_ERROR,
    ErrorCategory.SPEC_ERROR: EXIT_PARSE_ERROR,
    ErrorCategory.EMIT_ERROR: EXIT_PARSE_ERROR,
    ErrorCategory.IO_ERROR: EXIT_IO_ERROR,
}


# Hints printed by the CLI below the error line
ERROR_MESSAGES: Dict[ErrorCode, Dict[str, str]] = {
    ErrorCode.SYNTAX_ASCII85_UNSUPPORTED: {
        "title": "ASCII85 data",
        "message": "ASCII85-encoded strings are not decoded",
        "action": "Re-export the figure without ASCII85 encoding",
    },
    ErrorCode.VM_UNDEFINED_NAME: {
        "title": "Undefined name",
        "message": "The figure uses an operator outside the supported subset",
        "action": "Retry with --permissive",
    },
    ErrorCode.VM_UNSUPPORTED_OPERATOR: {
        "title": "Inline data",
        "message": "The figure reads inline data (images, currentfile, eexec)",
        "action": "Remove raster images from the figure",
    },
    ErrorCode.VM_STEP_BUDGET_EXCEEDED: {
        "title": "Step budget exhausted",
        "message": "The figure program did not finish within the step budget",
        "action": "Raise --max-steps or FIGRELABEL_MAX_STEPS",
    },
    ErrorCode.EMIT_MISSING_BOUNDING_BOX: {
        "title": "No bounding box",
        "message": "width and extralabel need a %%BoundingBox comment",
        "action": "Add a %%BoundingBox line to the figure header",
    },
}


def get_error_message(code: ErrorCode) -> Dict[str, str]:
    """
    Get the hint for an error code

    Args:
        code: error code

    Returns:
        dict with title, message and action
    """
    return ERROR_MESSAGES.get(code, {
        "title": "Error",
        "message": code.name.replace("_", " ").lower(),
        "action": "",
    })


def get_exit_status(code: ErrorCode) -> int:
    """Get the CLI exit status for an error code."""
    return ERROR_EXIT_STATUS.get(get_category(code), EXIT_PARSE_ERROR)
