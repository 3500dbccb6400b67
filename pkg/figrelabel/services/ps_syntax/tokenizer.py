"""
PostScript tokenizer

Works on raw bytes. String contents are never decoded to text because label
matching is byte equality on PostScript strings.
"""

from bisect import bisect_right
import re
from typing import Iterator, List

from figrelabel.core.exceptions import (
    Ascii85NotSupported,
    InvalidHexString,
    InvalidRadixNumber,
    MalformedToken,
    UnterminatedString,
)
from figrelabel.services.ps_syntax.tokens import Token, TokenKind

WHITESPACE = b"\x00\t\n\x0c\r "
HEX_DIGITS = b"0123456789abcdefABCDEF"

_REGULAR = re.compile(rb"[^\x00\t\n\x0c\r ()<>\[\]{}/%]*")
_INTEGER = re.compile(rb"[+-]?\d+\Z")
_REAL = re.compile(rb"[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?\Z")
_RADIX = re.compile(rb"(\d+)#([0-9A-Za-z]+)\Z")
_RADIX_PREFIX = re.compile(rb"\d+#")
_LINE_BREAK = re.compile(rb"\r\n|\r|\n")
_STRING_RUN = re.compile(rb"[^\\()\r]+")
_END_OF_LINE = re.compile(rb"[\r\n]")

_ESCAPES = {
    ord("n"): 0x0A,
    ord("r"): 0x0D,
    ord("t"): 0x09,
    ord("b"): 0x08,
    ord("f"): 0x0C,
    ord("\\"): 0x5C,
    ord("("): 0x28,
    ord(")"): 0x29,
}

_PUNCTUATION = {
    ord("["): TokenKind.ARRAY_OPEN,
    ord("]"): TokenKind.ARRAY_CLOSE,
    ord("{"): TokenKind.PROC_OPEN,
    ord("}"): TokenKind.PROC_CLOSE,
}


class _Scanner:
    """Cursor over one source buffer."""

    def __init__(self, source: bytes):
        self.data = bytes(source)
        self.pos = 0
        self._line_starts = [m.end() for m in _LINE_BREAK.finditer(self.data)]

    def line_at(self, offset: int) -> int:
        return bisect_right(self._line_starts, offset) + 1

    def at_line_start(self, offset: int) -> bool:
        return offset == 0 or self.data[offset - 1] in b"\r\n"

    def tokens(self) -> Iterator[Token]:
        data = self.data
        size = len(data)
        while True:
            while self.pos < size and data[self.pos] in WHITESPACE:
                self.pos += 1
            if self.pos >= size:
                return
            start = self.pos
            ch = data[start]

            if ch == 0x25:  # %
                eol = _END_OF_LINE.search(data, start)
                end = eol.start() if eol else size
                self.pos = end
                if self.at_line_start(start) and data[start + 1:start + 2] in (b"%", b"!"):
                    yield Token(TokenKind.DSC_COMMENT, data[start:end], start, self.line_at(start))
                continue

            if ch == 0x28:  # (
                yield self._string(start)
            elif ch == 0x3C:  # <
                yield self._hex_string(start)
            elif ch == 0x3E:  # >
                raise MalformedToken("unexpected '>'", offset=start, line=self.line_at(start))
            elif ch == 0x29:  # )
                raise MalformedToken("unbalanced ')'", offset=start, line=self.line_at(start))
            elif ch in _PUNCTUATION:
                self.pos = start + 1
                yield Token(_PUNCTUATION[ch], data[start:start + 1], start, self.line_at(start))
            elif ch == 0x2F:  # /
                literal = not data.startswith(b"//", start)
                body_start = start + (1 if literal else 2)
                end = _REGULAR.match(data, body_start).end()
                self.pos = end
                kind = TokenKind.LITERAL_NAME if literal else TokenKind.EXECUTABLE_NAME
                yield Token(kind, data[start:end], start, self.line_at(start))
            else:
                end = _REGULAR.match(data, start).end()
                self.pos = end
                yield self._regular(data[start:end], start)

    def _regular(self, text: bytes, start: int) -> Token:
        line = self.line_at(start)
        if _INTEGER.match(text):
            return Token(TokenKind.INTEGER, text, start, line, number=float(int(text)))
        if _REAL.match(text):
            return Token(TokenKind.REAL, text, start, line, number=float(text))
        if _RADIX_PREFIX.match(text):
            match = _RADIX.match(text)
            if match is None:
                raise InvalidRadixNumber(f"malformed radix number {text!r}", offset=start, line=line)
            base = int(match.group(1))
            if not 2 <= base <= 36:
                raise InvalidRadixNumber(f"radix {base} outside 2..36", offset=start, line=line)
            try:
                value = int(match.group(2), base)
            except ValueError:
                raise InvalidRadixNumber(
                    f"digit out of range for base {base} in {text!r}", offset=start, line=line
                ) from None
            return Token(TokenKind.RADIX_NUMBER, text, start, line, number=float(value))
        return Token(TokenKind.EXECUTABLE_NAME, text, start, line)

    def _string(self, start: int) -> Token:
        data = self.data
        size = len(data)
        out = bytearray()
        depth = 1
        i = start + 1
        while i < size:
            run = _STRING_RUN.match(data, i)
            if run:
                out += run.group()
                i = run.end()
                continue
            ch = data[i]
            if ch == 0x5C:  # backslash
                i += 1
                if i >= size:
                    break
                esc = data[i]
                if esc in _ESCAPES:
                    out.append(_ESCAPES[esc])
                    i += 1
                elif 0x30 <= esc <= 0x37:
                    digits = 0
                    value = 0
                    while digits < 3 and i < size and 0x30 <= data[i] <= 0x37:
                        value = value * 8 + (data[i] - 0x30)
                        digits += 1
                        i += 1
                    out.append(value & 0xFF)
                elif esc == 0x0D:
                    i += 1
                    if i < size and data[i] == 0x0A:
                        i += 1
                elif esc == 0x0A:
                    i += 1
                else:
                    # unknown escape: the backslash is dropped
                    out.append(esc)
                    i += 1
            elif ch == 0x28:
                depth += 1
                out.append(ch)
                i += 1
            elif ch == 0x29:
                depth -= 1
                if depth == 0:
                    self.pos = i + 1
                    return Token(
                        TokenKind.STRING, data[start:i + 1], start, self.line_at(start), decoded=bytes(out)
                    )
                out.append(ch)
                i += 1
            else:  # bare CR or CRLF reads as a single LF
                out.append(0x0A)
                i += 1
                if i < size and data[i] == 0x0A:
                    i += 1
        raise UnterminatedString("end of file inside string", offset=start, line=self.line_at(start))

    def _hex_string(self, start: int) -> Token:
        data = self.data
        line = self.line_at(start)
        nxt = data[start + 1:start + 2]
        if nxt == b"<":
            raise InvalidHexString("dictionary literal '<<' is not supported", offset=start, line=line)
        if nxt == b"~":
            raise Ascii85NotSupported("ASCII85 string '<~' is not supported", offset=start, line=line)
        end = data.find(b">", start + 1)
        if end < 0:
            raise InvalidHexString("end of file inside hex string", offset=start, line=line)
        digits = bytearray()
        for i in range(start + 1, end):
            ch = data[i]
            if ch in WHITESPACE:
                continue
            if ch not in HEX_DIGITS:
                raise InvalidHexString(
                    f"invalid hex digit {bytes([ch])!r}", offset=i, line=self.line_at(i)
                )
            digits.append(ch)
        if len(digits) % 2:
            digits.append(ord("0"))
        self.pos = end + 1
        return Token(
            TokenKind.HEX_STRING, data[start:end + 1], start, line, decoded=bytes.fromhex(digits.decode("ascii"))
        )


def iter_tokens(source: bytes) -> Iterator[Token]:
    """
    Lazily tokenize PostScript source

    Args:
        source: raw program bytes

    Yields:
        tokens in source order; errors surface when the offending byte is reached
    """
    return _Scanner(source).tokens()


def tokenize(source: bytes) -> List[Token]:
    """Tokenize the whole source eagerly."""
    return list(iter_tokens(source))


def escape_ps_string(raw: bytes) -> bytes:
    """
    Render bytes as a PostScript string literal, parentheses included

    Printable ASCII passes through except ( ) and backslash, which are
    backslash-escaped; every other byte becomes a three-digit octal escape.
    """
    out = bytearray(b"(")
    for byte in raw:
        if byte in (0x28, 0x29, 0x5C):
            out += b"\\" + bytes([byte])
        elif 32 <= byte <= 126:
            out.append(byte)
        else:
            out += b"\\%03o" % byte
    out += b")"
    return bytes(out)
