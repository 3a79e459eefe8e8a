from enum import Enum


class PairSide(str, Enum):
    FIRST = 'FIRST'
    SECOND = 'SECOND'


class SetAlgebraKind(str, Enum):
    UNION_ALL = 'UNION_ALL'
    BINARY_UNION = 'BINARY_UNION'
    INTERSECT = 'INTERSECT'
    DIFFERENCE = 'DIFFERENCE'
    PRODUCT = 'PRODUCT'
    DOMAIN = 'DOMAIN'
    RANGE = 'RANGE'
    IMAGE = 'IMAGE'
