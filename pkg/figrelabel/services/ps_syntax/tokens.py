"""
Token types produced by the PostScript tokenizer.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class TokenKind(Enum):
    INTEGER = "integer"
    REAL = "real"
    RADIX_NUMBER = "radix_number"
    LITERAL_NAME = "literal_name"
    EXECUTABLE_NAME = "executable_name"
    STRING = "string"
    HEX_STRING = "hex_string"
    PROC_OPEN = "proc_open"
    PROC_CLOSE = "proc_close"
    ARRAY_OPEN = "array_open"
    ARRAY_CLOSE = "array_close"
    DSC_COMMENT = "dsc_comment"


NUMBER_KINDS = frozenset({TokenKind.INTEGER, TokenKind.REAL, TokenKind.RADIX_NUMBER})
STRING_KINDS = frozenset({TokenKind.STRING, TokenKind.HEX_STRING})


@dataclass(frozen=True, slots=True)
class Token:
    """
    One lexical token.

    text is the raw slice of the source starting at offset; decoded is set
    for string kinds only and number for numeric kinds only.
    """

    kind: TokenKind
    text: bytes
    offset: int
    line: int
    decoded: Optional[bytes] = None
    number: Optional[float] = None

    @property
    def position(self) -> Tuple[int, int]:
        return self.offset, self.line

    @property
    def name(self) -> bytes:
        """Name bytes without the leading slash(es)."""
        if self.kind is TokenKind.LITERAL_NAME:
            return self.text[1:]
        if self.kind is TokenKind.EXECUTABLE_NAME and self.text.startswith(b"//"):
            return self.text[2:]
        return self.text
