import re
from dataclasses import dataclass
from typing import Any, Optional

from hf_workbench.resources.formula.enums import TokenKind
from hf_workbench.resources.formula.model import (
    And,
    BExists,
    BForall,
    Const,
    Eq,
    Falsum,
    Formula,
    Imp,
    In,
    Or,
    SubExists,
    SubForall,
    Term,
    UExists,
    UForall,
    Var,
    rename_clashing_binders,
)
from hf_workbench.resources.formula.schemas import (
    EXPECTED_BOUND_KIND,
    EXPECTED_DOT,
    EXPECTED_RELATION,
    EXPECTED_TERM,
    EXPECTED_VARIABLE,
    INVALID_LITERAL,
    UNCLOSED_PAREN,
    UNEXPECTED_END,
    UNEXPECTED_TOKEN,
)
from hf_workbench.resources.hfset.literal import LiteralParser
from hf_workbench.resources.shared.errors import (
    FormulaSyntaxError,
    LiteralSyntaxError,
)

KEYWORDS = frozenset({'all', 'some', 'All', 'Some', 'in', 'sub', 'false'})
SYMBOLS = ('->', '(', ')', '.', '&', '|', '~', '=')
_IDENT = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    pos: int
    value: Any = None


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in '{<' or c.isdigit():
            reader = LiteralParser(text, i)
            try:
                value = reader.read_one()
            except LiteralSyntaxError as error:
                raise FormulaSyntaxError(
                    f'{INVALID_LITERAL}: {error.message}',
                    text,
                    error.position,
                )
            literal = text[i : reader.position]
            tokens.append(Token(TokenKind.LITERAL, literal, i, value))
            i = reader.position
            continue
        match = _IDENT.match(text, i)
        if match:
            word = match.group()
            kind = (
                TokenKind.KEYWORD if word in KEYWORDS else TokenKind.IDENT
            )
            tokens.append(Token(kind, word, i))
            i = match.end()
            continue
        for symbol in SYMBOLS:
            if text.startswith(symbol, i):
                tokens.append(Token(TokenKind.SYMBOL, symbol, i))
                i += len(symbol)
                break
        else:
            raise FormulaSyntaxError(f'{UNEXPECTED_TOKEN} "{c}"', text, i)
    tokens.append(Token(TokenKind.END, '', len(text)))
    return tokens


class FormulaParser:
    """
    Recursive-descent parser. Precedence from loosest to tightest:
    `->` (right associative), `|`, `&`, then `~`, quantifiers and atoms.
    A quantifier body extends as far right as possible.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != TokenKind.END:
            self.index += 1
        return token

    def at(self, text: str) -> bool:
        token = self.peek()
        return token.kind in {TokenKind.SYMBOL, TokenKind.KEYWORD} and (
            token.text == text
        )

    def fail(self, message: str, token: Optional[Token] = None):
        token = token or self.peek()
        if token.kind == TokenKind.END:
            raise FormulaSyntaxError(UNEXPECTED_END, self.text, token.pos)
        raise FormulaSyntaxError(
            f'{message}, found "{token.text}"', self.text, token.pos
        )

    def expect(self, text: str, message: str) -> Token:
        if not self.at(text):
            self.fail(message)
        return self.advance()

    def parse(self) -> Formula:
        phi = self.parse_imp()
        if self.peek().kind != TokenKind.END:
            self.fail(UNEXPECTED_TOKEN)
        return phi

    def parse_imp(self) -> Formula:
        left = self.parse_or()
        if self.at('->'):
            token = self.advance()
            return Imp(left, self.parse_imp(), pos=token.pos)
        return left

    def parse_or(self) -> Formula:
        left = self.parse_and()
        while self.at('|'):
            token = self.advance()
            left = Or(left, self.parse_and(), pos=token.pos)
        return left

    def parse_and(self) -> Formula:
        left = self.parse_unary()
        while self.at('&'):
            token = self.advance()
            left = And(left, self.parse_unary(), pos=token.pos)
        return left

    def parse_unary(self) -> Formula:
        token = self.peek()
        if self.at('~'):
            self.advance()
            inner = self.parse_unary()
            return Imp(inner, Falsum(pos=token.pos), pos=token.pos)
        if self.at('('):
            self.advance()
            phi = self.parse_imp()
            self.expect(')', UNCLOSED_PAREN)
            return phi
        if token.kind == TokenKind.KEYWORD and token.text in {
            'all',
            'some',
            'All',
            'Some',
        }:
            return self.parse_quantifier()
        if self.at('false'):
            self.advance()
            return Falsum(pos=token.pos)
        return self.parse_atom()

    def parse_variable(self) -> str:
        token = self.peek()
        if token.kind != TokenKind.IDENT:
            self.fail(EXPECTED_VARIABLE)
        return self.advance().text

    def parse_quantifier(self) -> Formula:
        token = self.advance()
        var = self.parse_variable()
        if token.text in {'All', 'Some'}:
            self.expect('.', EXPECTED_DOT)
            body = self.parse_imp()
            cls = UForall if token.text == 'All' else UExists
            return cls(var, body, pos=token.pos)
        if self.at('in'):
            self.advance()
            kinds = (BForall, BExists)
        elif self.at('sub'):
            self.advance()
            kinds = (SubForall, SubExists)
        else:
            self.fail(EXPECTED_BOUND_KIND)
        bound = self.parse_term()
        self.expect('.', EXPECTED_DOT)
        body = self.parse_imp()
        cls = kinds[0] if token.text == 'all' else kinds[1]
        return cls(var, bound, body, pos=token.pos)

    def parse_atom(self) -> Formula:
        start = self.peek()
        left = self.parse_term()
        if self.at('in'):
            self.advance()
            return In(left, self.parse_term(), pos=start.pos)
        if self.at('='):
            self.advance()
            return Eq(left, self.parse_term(), pos=start.pos)
        self.fail(EXPECTED_RELATION)

    def parse_term(self) -> Term:
        token = self.peek()
        if token.kind == TokenKind.IDENT:
            self.advance()
            return Var(token.text)
        if token.kind == TokenKind.LITERAL:
            self.advance()
            return Const(token.value)
        self.fail(EXPECTED_TERM)


def parse(text: str) -> Formula:
    """
    Parses formula text, renaming any binder that clashes with a free
    variable or an enclosing binder.

    :return: Formula.
    """
    return rename_clashing_binders(FormulaParser(text).parse())


def parse_term(text: str) -> Term:
    parser = FormulaParser(text)
    term = parser.parse_term()
    if parser.peek().kind != TokenKind.END:
        parser.fail(UNEXPECTED_TOKEN)
    return term
