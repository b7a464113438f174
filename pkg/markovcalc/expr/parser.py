"""Recursive descent parser for endpoint expressions.

Grammar::

    expr      := term (('+' | '-') term)*
    term      := factor (('*' | '/') factor)*
    factor    := '-' NUMBER            (folded into a negative constant unless '^' follows)
               | ['-'] atom ['^' NAT]
    atom      := NUMBER | 't' | 'sqrt2' | NAME | call | '(' expr ')'
    call      := 'abs' '(' expr ')'
               | ('min' | 'max') '(' expr (',' expr)+ ')'
               | 'quad' '(' SIGNED ',' SIGNED ')'
               | 'piecewise' '(' (pred ':' expr ',')* 'else' ':' expr ')'
    pred      := conj ('or' conj)*
    conj      := patom ('and' patom)*
    patom     := 'rational' '(' expr ')' | '(' pred ')' | expr REL expr

Numbers are integers or `p/q` rationals written without blanks.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from ..core.quadnum import QuadNum
from ..errors import ParseError, UnknownIdentifier
from .lexer import Token, tokenize
from .nodes import (
    Abs,
    And,
    BinaryOp,
    BinOp,
    Compare,
    Const,
    Expr,
    IsRational,
    MinMax,
    Neg,
    Or,
    Piecewise,
    Pow,
    Predicate,
    Relation,
    Span,
    Var,
)

KEYWORDS = {"t", "sqrt2", "abs", "min", "max", "quad", "piecewise", "rational", "and", "or", "else"}
RELATIONS = ("<", "<=", ">", ">=")


class Parser:
    """Parser over a token list produced by `tokenize`."""

    def __init__(self, tokens: List[Token], names: Optional[Dict[str, Expr]] = None):
        """Initialize the parser.

        Args:
            tokens: Tokens ending with EOF
            names: Named subexpressions that identifiers may refer to
        """
        self.tokens = tokens
        self.pos = 0
        self.names = dict(names or {})

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.line, token.column)

    def _advance(self) -> Token:
        token = self.current
        if token.kind != "EOF":
            self.pos += 1
        return token

    def eat(self, symbol: str) -> Token:
        """Consume a symbol token or fail."""
        if not self.current.is_symbol(symbol):
            raise self._error(f"expected {symbol!r}, got {self.current.describe()}")
        return self._advance()

    def eat_word(self, word: str) -> Token:
        if not self.current.is_word(word):
            raise self._error(f"expected {word!r}, got {self.current.describe()}")
        return self._advance()

    @staticmethod
    def _span(token: Token) -> Span:
        return Span(token.line, token.column)

    # Expressions

    def expr(self) -> Expr:
        result = self.term()
        while self.current.is_symbol("+") or self.current.is_symbol("-"):
            token = self._advance()
            result = BinOp(BinaryOp.from_symbol(token.text), result, self.term(), self._span(token))
        return result

    def term(self) -> Expr:
        result = self.factor()
        while self.current.is_symbol("*") or self.current.is_symbol("/"):
            token = self._advance()
            result = BinOp(BinaryOp.from_symbol(token.text), result, self.factor(), self._span(token))
        return result

    def factor(self) -> Expr:
        if self.current.is_symbol("-"):
            minus = self._advance()
            nxt = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
            if self.current.kind == "NUMBER" and not (nxt and nxt.is_symbol("^")):
                number = self._advance()
                return Const(QuadNum(-number.value), self._span(minus))
            return Neg(self._power(), self._span(minus))
        return self._power()

    def _power(self) -> Expr:
        base = self.atom()
        if self.current.is_symbol("^"):
            caret = self._advance()
            token = self.current
            if token.kind != "NUMBER" or token.value.denominator != 1:
                raise self._error("exponent must be a nonnegative integer literal")
            self._advance()
            return Pow(base, int(token.value), self._span(caret))
        return base

    def atom(self) -> Expr:
        token = self.current
        span = self._span(token)
        if token.kind == "NUMBER":
            self._advance()
            return Const(QuadNum(token.value), span)
        if token.is_symbol("("):
            self._advance()
            inner = self.expr()
            self.eat(")")
            return inner
        if token.kind != "IDENT":
            raise self._error(f"unexpected {token.describe()}")
        name = token.text
        if name == "t":
            self._advance()
            return Var(span)
        if name == "sqrt2":
            self._advance()
            return Const(QuadNum(0, 1), span)
        if name == "abs":
            self._advance()
            self.eat("(")
            operand = self.expr()
            self.eat(")")
            return Abs(operand, span)
        if name in ("min", "max"):
            self._advance()
            self.eat("(")
            args = [self.expr()]
            while self.current.is_symbol(","):
                self._advance()
                args.append(self.expr())
            self.eat(")")
            if len(args) < 2:
                raise ParseError(f"{name} needs at least two arguments", token.line, token.column)
            return MinMax(name == "max", tuple(args), span)
        if name == "quad":
            self._advance()
            self.eat("(")
            a = self._signed_literal()
            self.eat(",")
            b = self._signed_literal()
            self.eat(")")
            return Const(QuadNum(a, b), span)
        if name == "piecewise":
            return self._piecewise()
        if name in self.names:
            self._advance()
            return self.names[name]
        if name in KEYWORDS:
            raise self._error(f"{name!r} cannot start an expression")
        raise UnknownIdentifier(f"unknown identifier {name!r}", token.line, token.column)

    def _signed_literal(self):
        negative = False
        if self.current.is_symbol("-"):
            self._advance()
            negative = True
        token = self.current
        if token.kind != "NUMBER":
            raise self._error(f"expected a rational literal, got {token.describe()}")
        self._advance()
        return -token.value if negative else token.value

    def _piecewise(self) -> Piecewise:
        start = self.eat_word("piecewise")
        self.eat("(")
        branches = []
        while not self.current.is_word("else"):
            pred = self.predicate()
            self.eat(":")
            branches.append((pred, self.expr()))
            if not self.current.is_symbol(","):
                raise self._error("piecewise requires a final 'else' branch")
            self._advance()
        self.eat_word("else")
        self.eat(":")
        otherwise = self.expr()
        self.eat(")")
        return Piecewise(tuple(branches), otherwise, self._span(start))

    # Predicates

    def predicate(self) -> Predicate:
        parts = [self._conjunction()]
        while self.current.is_word("or"):
            self._advance()
            parts.append(self._conjunction())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def _conjunction(self) -> Predicate:
        parts = [self._predicate_atom()]
        while self.current.is_word("and"):
            self._advance()
            parts.append(self._predicate_atom())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def _predicate_atom(self) -> Predicate:
        if self.current.is_word("rational"):
            self._advance()
            self.eat("(")
            operand = self.expr()
            self.eat(")")
            return IsRational(operand)
        if self.current.is_symbol("("):
            saved = self.pos
            try:
                self._advance()
                inner = self.predicate()
                self.eat(")")
                return inner
            except ParseError:
                # not a grouped predicate; reread as an expression comparison
                self.pos = saved
        left = self.expr()
        token = self.current
        if token.kind != "SYMBOL" or token.text not in RELATIONS:
            raise self._error(f"expected a comparison, got {token.describe()}")
        self._advance()
        return Compare(Relation.from_symbol(token.text), left, self.expr())


def _finish(parser: Parser, result):
    if parser.current.kind != "EOF":
        raise parser._error(f"unexpected {parser.current.describe()} after expression")
    return result


def parse(src: str, names: Optional[Dict[str, Expr]] = None, line: int = 1, column: int = 1) -> Expr:
    """Parse expression text into an AST.

    Args:
        src: Expression source
        names: Named subexpressions identifiers may refer to (inlined)
        line: Line of the first character, for diagnostics
        column: Column of the first character, for diagnostics

    Returns:
        The expression AST

    Raises:
        ParseError: on syntax errors, unknown identifiers or malformed literals
    """
    parser = Parser(tokenize(src, line, column), names)
    return _finish(parser, parser.expr())


def parse_predicate(src: str) -> Predicate:
    parser = Parser(tokenize(src))
    return _finish(parser, parser.predicate())


def parse_constant(src: str) -> QuadNum:
    """Parse a variable-free expression and evaluate it exactly."""
    from .evaluator import evaluate, uses_variable

    expr = parse(src)
    if uses_variable(expr):
        raise ParseError("constant expected, found the variable t")
    return evaluate(expr, QuadNum(0))
