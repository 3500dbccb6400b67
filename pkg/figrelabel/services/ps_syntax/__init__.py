"""
PostScript syntax: tokenizer and DSC header parsing
"""

from .dsc import BoundingBox, DocumentMeta, parse_dsc, strip_preview
from .tokenizer import escape_ps_string, iter_tokens, tokenize
from .tokens import Token, TokenKind

__all__ = [
    'BoundingBox', 'DocumentMeta', 'parse_dsc', 'strip_preview',
    'escape_ps_string', 'iter_tokens', 'tokenize', 'Token', 'TokenKind',
]
