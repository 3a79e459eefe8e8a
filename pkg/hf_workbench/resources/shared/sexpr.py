from typing import Union

from hf_workbench.resources.hfset.literal import LiteralParser
from hf_workbench.resources.hfset.model import HFSet
from hf_workbench.resources.shared.errors import (
    LiteralSyntaxError,
    TermSyntaxError,
)

SExpr = Union[str, HFSet, list['SExpr']]

UNEXPECTED_END = 'Unexpected end of s-expression'
UNEXPECTED_CLOSE = "Unexpected ')'"
TRAILING_INPUT = 'Trailing input after s-expression'


class SExprReader:
    """
    Reads `(head arg ...)` forms. The argument following a `const` head is
    an HF literal and is returned as an HFSet.
    """

    def __init__(self, text: str):
        self.text = text
        self.position = 0

    def skip_space(self) -> None:
        while (
            self.position < len(self.text)
            and self.text[self.position].isspace()
        ):
            self.position += 1

    def read(self) -> SExpr:
        self.skip_space()
        if self.position >= len(self.text):
            raise TermSyntaxError(f'{UNEXPECTED_END} at {self.position}')
        c = self.text[self.position]
        if c == '(':
            self.position += 1
            return self.read_list()
        if c == ')':
            raise TermSyntaxError(f'{UNEXPECTED_CLOSE} at {self.position}')
        return self.read_atom()

    def read_list(self) -> list[SExpr]:
        items: list[SExpr] = []
        while True:
            self.skip_space()
            if self.position >= len(self.text):
                raise TermSyntaxError(f'{UNEXPECTED_END} at {self.position}')
            if self.text[self.position] == ')':
                self.position += 1
                return items
            if items == ['const']:
                items.append(self.read_literal())
            else:
                items.append(self.read())

    def read_atom(self) -> str:
        start = self.position
        while (
            self.position < len(self.text)
            and not self.text[self.position].isspace()
            and self.text[self.position] not in '()'
        ):
            self.position += 1
        return self.text[start : self.position]

    def read_literal(self) -> HFSet:
        reader = LiteralParser(self.text, self.position)
        try:
            value = reader.read_one()
        except LiteralSyntaxError as error:
            raise TermSyntaxError(error.message)
        self.position = reader.position
        return value

    def parse(self) -> SExpr:
        value = self.read()
        self.skip_space()
        if self.position < len(self.text):
            raise TermSyntaxError(f'{TRAILING_INPUT} at {self.position}')
        return value


def read_sexpr(text: str) -> SExpr:
    return SExprReader(text).parse()
