"""Tokenizer support shared by the textual formats (fermions, partitions, permutations)."""

from __future__ import annotations

import re
from typing import NamedTuple


class ParseError(ValueError):
    """Malformed input text; records the offending position and what was expected there."""

    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"parse error at position {pos}: expected {expected}, found {found}")


class Token(NamedTuple):
    kind: str
    value: str
    pos: int


def tokenize(text: str, patterns: list[tuple[str, str]], expected: str) -> list[Token]:
    """Split ``text`` into tokens using ordered ``(kind, regex)`` pairs; whitespace is skipped."""
    master = re.compile("|".join(f"(?P<{kind}>{rx})" for kind, rx in patterns))
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = master.match(text, pos)
        if m is None:
            raise ParseError(text, pos, expected)
        tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens
