from enum import Enum


class Variant(str, Enum):
    WT = 'wt'
    W = 'w'
    WP = 'wp'


class VerdictKind(str, Enum):
    REALIZED = 'realized'
    NOT_REALIZED = 'not-realized'
    UNKNOWN = 'unknown'


class UnknownReason(str, Enum):
    FUEL = 'fuel'
    SEARCH_BOUND = 'search-bound'
