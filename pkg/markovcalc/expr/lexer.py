"""Tokenizer for the expression language."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ..errors import MalformedLiteral, ParseError

# Longest symbols first so `<=` wins over `<`.
SYMBOLS = ("<=", ">=", "+", "-", "*", "/", "^", "(", ")", ",", ":", "<", ">")


@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER, IDENT, SYMBOL or EOF
    text: str
    line: int
    column: int
    value: Optional[Fraction] = None

    def is_symbol(self, symbol: str) -> bool:
        return self.kind == "SYMBOL" and self.text == symbol

    def is_word(self, word: str) -> bool:
        return self.kind == "IDENT" and self.text == word

    def describe(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.text)


def tokenize(src: str, line: int = 1, column: int = 1) -> List[Token]:
    """Split source text into tokens.

    Args:
        src: Expression text (may span lines)
        line: Line number of the first character, for diagnostics
        column: Column number of the first character, for diagnostics

    Returns:
        Token list terminated by an EOF token

    Raises:
        MalformedLiteral: on literals such as `1/0`, `2.5` or `3t`
        ParseError: on characters outside the language
    """
    tokens: List[Token] = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            column += 1
            continue
        start_col = column
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            numerator = int(src[i:j])
            denominator = 1
            # `p/q` with no blanks is a single rational literal
            if j + 1 < n and src[j] == "/" and src[j + 1].isdigit():
                k = j + 1
                while k < n and src[k].isdigit():
                    k += 1
                denominator = int(src[j + 1:k])
                j = k
            if j < n and (src[j].isalpha() or src[j] in "._"):
                raise MalformedLiteral(
                    f"malformed number literal {src[i:j + 1]!r}", line, start_col
                )
            if denominator == 0:
                raise MalformedLiteral(f"zero denominator in literal {src[i:j]!r}", line, start_col)
            text = src[i:j]
            tokens.append(Token("NUMBER", text, line, start_col, Fraction(numerator, denominator)))
            column += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", src[i:j], line, start_col))
            column += j - i
            i = j
            continue
        for symbol in SYMBOLS:
            if src.startswith(symbol, i):
                tokens.append(Token("SYMBOL", symbol, line, start_col))
                i += len(symbol)
                column += len(symbol)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(Token("EOF", "", line, column))
    return tokens
