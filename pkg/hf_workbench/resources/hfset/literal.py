from hf_workbench.resources.hfset.model import (
    HFSet,
    as_natural,
    as_pair,
    numeral,
    pair,
)
from hf_workbench.resources.hfset.schemas import (
    TRAILING_INPUT,
    UNEXPECTED_CHAR,
    UNEXPECTED_END,
)
from hf_workbench.resources.shared.errors import LiteralSyntaxError


class LiteralParser:
    """
    Reader for the HF literal syntax: `{}`, `{a,b}`, decimal numerals and
    `<a,b>` pairs. Whitespace between tokens is ignored.
    """

    def __init__(self, text: str, position: int = 0):
        self.text = text
        self.position = position

    def nextc(self) -> str:
        while (
            self.position < len(self.text)
            and self.text[self.position].isspace()
        ):
            self.position += 1
        if self.position >= len(self.text):
            return ''
        c = self.text[self.position]
        self.position += 1
        return c

    def unreadc(self, c: str) -> None:
        if c != '':
            self.position -= 1

    def expect(self, wanted: str) -> None:
        c = self.nextc()
        if c != wanted:
            self.fail(c)

    def fail(self, c: str):
        if c == '':
            raise LiteralSyntaxError(UNEXPECTED_END, self.position)
        raise LiteralSyntaxError(
            f'{UNEXPECTED_CHAR} "{c}"', self.position - 1
        )

    def read_one(self) -> HFSet:
        c = self.nextc()
        match c:
            case '{':
                return self.read_set()
            case '<':
                return self.read_pair()
            case _ if c.isdigit():
                return self.read_numeral(c)
            case _:
                self.fail(c)

    def read_set(self) -> HFSet:
        c = self.nextc()
        if c == '}':
            return HFSet.of()
        self.unreadc(c)
        members = [self.read_one()]
        while True:
            c = self.nextc()
            if c == '}':
                return HFSet.of(members)
            if c != ',':
                self.fail(c)
            members.append(self.read_one())

    def read_pair(self) -> HFSet:
        first = self.read_one()
        self.expect(',')
        second = self.read_one()
        self.expect('>')
        return pair(first, second)

    def read_numeral(self, first: str) -> HFSet:
        digits = [first]
        while (
            self.position < len(self.text)
            and self.text[self.position].isdigit()
        ):
            digits.append(self.text[self.position])
            self.position += 1
        return numeral(int(''.join(digits)))

    def parse(self) -> HFSet:
        value = self.read_one()
        c = self.nextc()
        if c != '':
            raise LiteralSyntaxError(TRAILING_INPUT, self.position - 1)
        return value


def parse_literal(text: str) -> HFSet:
    return LiteralParser(text).parse()


def to_literal(x: HFSet) -> str:
    """Numerals print as decimals, pairs as `<a,b>`, the rest in braces."""
    n = as_natural(x)
    if n is not None:
        return str(n)
    found = as_pair(x)
    if found is not None:
        return f'<{to_literal(found[0])},{to_literal(found[1])}>'
    return '{' + ','.join(to_literal(e) for e in x) + '}'
