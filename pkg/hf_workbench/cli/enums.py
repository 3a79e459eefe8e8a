from enum import Enum, IntEnum


class OutputFormat(str, Enum):
    JSON = 'json'
    TEXT = 'text'


class ExitCode(IntEnum):
    OK = 0
    VIOLATED = 1
    USAGE = 2
    BUDGET = 3


class Battery(str, Enum):
    COMPILER = 'compiler'
    SEPARATION = 'separation'
    HIERARCHY = 'hierarchy'
    ALPHA_STAR = 'alpha-star'
    COMPARISON = 'comparison'
    KRIPKE = 'kripke'
    FULL_MODEL = 'full-model'
    DELTA = 'delta'
    VM = 'vm'
    REALIZABILITY = 'realizability'
