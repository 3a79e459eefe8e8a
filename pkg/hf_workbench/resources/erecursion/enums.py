from enum import Enum

from hf_workbench.resources.hfset.model import HFSet, numeral


class Index(str, Enum):
    K = 'k'
    S = 's'
    P = 'p'
    P0 = 'p0'
    P1 = 'p1'
    SN = 'sN'
    PN = 'pN'
    DN = 'dN'
    ZERO = 'zero'
    OMEGA = 'omega'
    PI = 'pi'
    NU = 'nu'
    GAMMA = 'gamma'
    RHO = 'rho'
    I1 = 'i1'
    I2 = 'i2'
    I3 = 'i3'
    POW = 'pow'

    @property
    def number(self) -> int:
        """Position in the index table; part of the wire format."""
        return INDEX_ORDER.index(self) + 1

    @property
    def code(self) -> HFSet:
        return numeral(self.number)

    @property
    def arity(self) -> int:
        return ARITY[self]


INDEX_ORDER: tuple[Index, ...] = tuple(Index)

ARITY: dict[Index, int] = {
    Index.K: 2,
    Index.S: 3,
    Index.P: 2,
    Index.P0: 1,
    Index.P1: 1,
    Index.SN: 1,
    Index.PN: 1,
    Index.DN: 4,
    Index.ZERO: 1,
    Index.OMEGA: 1,
    Index.PI: 2,
    Index.NU: 1,
    Index.GAMMA: 2,
    Index.RHO: 2,
    Index.I1: 3,
    Index.I2: 3,
    Index.I3: 3,
    Index.POW: 1,
}


class OutcomeKind(str, Enum):
    VALUE = 'value'
    TIMEOUT = 'timeout'
    NON_FINITARY = 'non-finitary'
    APPLY_ERROR = 'apply-error'
