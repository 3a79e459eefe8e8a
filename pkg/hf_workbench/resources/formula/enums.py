from enum import Enum


class Classification(str, Enum):
    SIGMA0 = 'SIGMA0'
    SIGMA0P = 'SIGMA0P'
    CONTAINS_UNBOUNDED = 'CONTAINS_UNBOUNDED'


class TokenKind(str, Enum):
    IDENT = 'IDENT'
    KEYWORD = 'KEYWORD'
    LITERAL = 'LITERAL'
    SYMBOL = 'SYMBOL'
    END = 'END'
