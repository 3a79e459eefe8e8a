from enum import Enum


class OpCode(str, Enum):
    PAIR = 'pair'
    INTER = 'inter'
    UNION = 'union'
    DIFF = 'diff'
    TIMES = 'times'
    IMP = 'imp'
    FORALL = 'forall'
    DOM = 'dom'
    RAN = 'ran'
    ABC = 'abc'
    ACB = 'acb'
    EQ = 'eq'
    IN = 'in'
    G0 = 'g0'
    G1 = 'g1'
    G2 = 'g2'
    G3 = 'g3'

    @property
    def arity(self) -> int:
        return 3 if self in AUXILIARY else 2


FUNDAMENTAL = (
    OpCode.PAIR,
    OpCode.INTER,
    OpCode.UNION,
    OpCode.DIFF,
    OpCode.TIMES,
    OpCode.IMP,
    OpCode.FORALL,
    OpCode.DOM,
    OpCode.RAN,
    OpCode.ABC,
    OpCode.ACB,
    OpCode.EQ,
    OpCode.IN,
)

AUXILIARY = frozenset({OpCode.G0, OpCode.G1, OpCode.G2, OpCode.G3})
