from typing import Any


class WorkbenchError(Exception):
    """Base class for every domain error raised by the workbench."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class NotAPair(WorkbenchError):
    pass


class EmptyTuple(WorkbenchError):
    pass


class LiteralSyntaxError(WorkbenchError):
    def __init__(self, message: str, position: int):
        super().__init__(f'{message} at offset {position}')
        self.position = position


class FormulaSyntaxError(WorkbenchError):
    """Parse failure in formula text, with 1-based line and column."""

    def __init__(self, message: str, text: str, position: int):
        line = text.count('\n', 0, position) + 1
        column = position - (text.rfind('\n', 0, position) + 1) + 1
        super().__init__(f'{message} (line {line}, column {column})')
        self.position = position
        self.line = line
        self.column = column


class TermSyntaxError(WorkbenchError):
    pass


class UnboundVariable(WorkbenchError):
    def __init__(self, name: str):
        super().__init__(f'Unbound variable: {name}')
        self.name = name


class NotSigma0(WorkbenchError):
    pass


class UnboundedWithoutUniverse(WorkbenchError):
    pass


class BudgetExceeded(WorkbenchError):
    """A configured budget was exhausted; `partial` holds what was built."""

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


class StageTooLarge(BudgetExceeded):
    pass


class InvalidModel(WorkbenchError):
    def __init__(self, message: str, violations: list[str] | None = None):
        super().__init__(message)
        self.violations = violations or []


class NodeOutsideCone(WorkbenchError):
    pass


class WitnessMismatch(WorkbenchError):
    pass
