from enum import Enum


class NameProperty(str, Enum):
    STAR = 'star'
    ONEP = 'onep'
    LEM = 'lem'
    DELTA = 'delta'
    CANONICAL = 'canonical'
