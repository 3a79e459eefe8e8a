"""
Run reports for the command line: the JSON RunReport (or a text
rendering) goes to standard output, a Rich summary to standard error.
"""

import functools
import json
import logging
import sys
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, Optional

from pydantic import BaseModel
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from hf_workbench.cli.enums import ExitCode, OutputFormat
from hf_workbench.resources.fullmodel.model import KName
from hf_workbench.resources.hfset.literal import to_literal
from hf_workbench.resources.hfset.model import HFSet
from hf_workbench.resources.shared.errors import (
    BudgetExceeded,
    WorkbenchError,
)
from hf_workbench.resources.shared.schemas import (
    Budget,
    Report,
    RunReport,
    Versions,
)
from hf_workbench.settings import get_settings
from hf_workbench.utils import (
    get_digest,
    get_package_version,
    get_timestamp,
)

logger = logging.getLogger(__name__)


@dataclass
class Session:
    """What one invocation runs with: its argv, budget and output format."""

    command: list[str] = field(default_factory=list)
    budget: Budget = field(default_factory=Budget.from_settings)
    format: OutputFormat = OutputFormat.JSON


_session = Session()


def open_session(
    command: list[str], budget: Budget, format: OutputFormat
) -> Session:
    global _session  # noqa: PLW0603
    _session = Session(command=command, budget=budget, format=format)
    return _session


def get_session() -> Session:
    return _session


def get_versions() -> Versions:
    settings = get_settings()
    return Versions(
        index_table=settings.INDEX_TABLE_VERSION,
        grammar=settings.GRAMMAR_VERSION,
        package=get_package_version(),
    )


def to_jsonable(value: Any) -> Any:
    """
    Plain JSON data for a result: HF sets as literals, names as graph
    dumps, unordered collections sorted.

    :return: JSON-compatible value.
    """
    match value:
        case HFSet():
            return to_literal(value)
        case KName():
            return value.dump()
        case Report():
            return {
                'name': value.name,
                'ok': value.ok,
                'checked': value.checked,
                'violations': list(value.violations),
                'details': to_jsonable(value.details),
            }
        case BaseModel():
            return value.model_dump(mode='json')
        case Enum():
            return value.value
        case Mapping():
            return {str(k): to_jsonable(v) for k, v in value.items()}
        case set() | frozenset():
            return sorted((to_jsonable(v) for v in value), key=str)
        case list() | tuple():
            return [to_jsonable(v) for v in value]
    return value


def render_text(report: RunReport, console: Console) -> None:
    table = Table(title=' '.join(report.command) or 'hfw')
    table.add_column('key')
    table.add_column('value')
    results = report.results
    if not isinstance(results, dict):
        results = {'result': results}
    for key, value in results.items():
        shown = value if isinstance(value, str) else json.dumps(value)
        table.add_row(escape(str(key)), escape(shown))
    console.print(table)
    for message in report.violations:
        console.print(f'violation: {escape(message)}')
    console.print(f'seed {report.seed}')


def summarize(report: RunReport, code: ExitCode) -> None:
    console = Console(stderr=True)
    status = {
        ExitCode.OK: '[bold green]ok[/]',
        ExitCode.VIOLATED: '[bold red]violated[/]',
        ExitCode.BUDGET: '[bold yellow]budget exceeded[/]',
    }[code]
    name = escape(' '.join(report.command[:2]) or 'hfw')
    console.print(
        f'{status} {name}: {len(report.violations)} violation(s), '
        f'seed {report.seed}'
    )


def emit(
    results: Any,
    violations: Iterable[str] = (),
    inputs: Optional[Mapping[str, Any]] = None,
    code: Optional[ExitCode] = None,
) -> int:
    """
    Writes the RunReport for the current session.

    :return: the exit code; VIOLATED when violations are present.
    """
    session = get_session()
    violations = list(violations)
    report = RunReport(
        command=session.command,
        inputs_digest=get_digest(to_jsonable(dict(inputs or {}))),
        results=to_jsonable(results),
        budgets=session.budget,
        violations=violations,
        versions=get_versions(),
        seed=session.budget.seed,
        timestamp=get_timestamp(),
    )
    if code is None:
        code = ExitCode.VIOLATED if violations else ExitCode.OK
    if session.format == OutputFormat.JSON:
        sys.stdout.write(report.model_dump_json(indent=2) + '\n')
    else:
        render_text(report, Console())
    summarize(report, code)
    return int(code)


def usage_error(message: str) -> int:
    Console(stderr=True).print(f'[bold red]usage error[/]: {escape(message)}')
    return int(ExitCode.USAGE)


def reported(command: Callable[..., int]) -> Callable[..., int]:
    """
    Turns domain errors into exit codes: a budget stop still reports
    what was built, anything else is a usage error.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs) -> int:
        try:
            return command(*args, **kwargs)
        except BudgetExceeded as error:
            logger.warning('%s: %s', command.__name__, error.message)
            return emit(
                {'partial': error.partial},
                [error.message],
                inputs=kwargs,
                code=ExitCode.BUDGET,
            )
        except WorkbenchError as error:
            return usage_error(error.message)
        except (ValueError, OSError) as error:
            return usage_error(str(error))

    return wrapper
