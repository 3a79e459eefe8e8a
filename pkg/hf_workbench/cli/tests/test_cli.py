import json

import pytest

from hf_workbench.cli.app import run
from hf_workbench.cli.enums import Battery, ExitCode
from hf_workbench.cli.schemas import BAD_BINDING
from hf_workbench.resources.compiler.schemas import NOT_SIGMA0
from hf_workbench.resources.kripke.examples import two_node_example
from hf_workbench.resources.kripke.repository import to_file
from hf_workbench.settings import get_settings


def invoke(capsys, *tokens: str) -> tuple[int, dict]:
    code = run(list(tokens))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else {}


@pytest.fixture
def model_file(tmp_path):
    path = tmp_path / 'two_node.json'
    path.write_text(to_file(two_node_example()).model_dump_json(indent=2))
    return path


def test_compile(capsys):
    code, report = invoke(
        capsys, 'compile', '--formula', 'x1 in x2', '--vars', 'x1,x2'
    )
    assert code == ExitCode.OK
    assert report['results']['term'] == '(in (var x1) (var x2))'
    assert report['results']['var_order'] == ['x1', 'x2']
    assert report['violations'] == []
    assert report['command'] == [
        'compile',
        '--formula',
        'x1 in x2',
        '--vars',
        'x1,x2',
    ]


def test_report_carries_versions_and_budgets(capsys):
    code, report = invoke(
        capsys, '--seed', '7', 'compile', '--formula', 'x = x', '--vars', 'x'
    )
    assert code == ExitCode.OK
    assert report['seed'] == 7
    assert report['budgets']['seed'] == 7
    settings = get_settings()
    assert report['versions']['index_table'] == settings.INDEX_TABLE_VERSION
    assert report['versions']['grammar'] == settings.GRAMMAR_VERSION
    assert len(report['inputs_digest']) == 64


def test_same_inputs_same_digest(capsys):
    tokens = ('compile', '--formula', 'x = x', '--vars', 'x')
    _, first = invoke(capsys, *tokens)
    _, second = invoke(capsys, *tokens)
    assert first['inputs_digest'] == second['inputs_digest']


def test_not_sigma0_is_a_usage_error(capsys):
    code = run(['compile', '--formula', 'All z. z in x', '--vars', 'x'])
    captured = capsys.readouterr()
    assert code == ExitCode.USAGE
    assert captured.out == ''
    assert NOT_SIGMA0 in captured.err


def test_unknown_command(capsys):
    assert run(['frobnicate']) == ExitCode.USAGE


def test_bad_binding(capsys):
    code = run(['eval-term', '--term', '(var x)', '--env', 'x'])
    assert code == ExitCode.USAGE
    assert BAD_BINDING in capsys.readouterr().err


def test_eval_term(capsys):
    code, report = invoke(
        capsys, 'eval-term', '--term', '(pair (var x) (var x))', '--env', 'x=0'
    )
    assert code == ExitCode.OK
    assert report['results'] == {'value': '<0,0>'}


def test_oracle_eval_over_universe(capsys):
    _, small = invoke(
        capsys,
        'oracle',
        'eval',
        '--formula',
        'Some x. 1 in x',
        '--universe-rank',
        '2',
    )
    _, large = invoke(
        capsys,
        'oracle',
        'eval',
        '--formula',
        'Some x. 1 in x',
        '--universe-rank',
        '3',
    )
    assert small['results']['value'] is False
    assert large['results']['value'] is True


def test_stage_over_budget_exits_with_partial(capsys):
    code, report = invoke(
        capsys, '--budget-elems', '3', 'hier', 'll', '--alpha', '6'
    )
    assert code == ExitCode.BUDGET
    assert report['budgets']['elems'] == 3
    assert 'partial' in report['results']
    assert len(report['violations']) == 1


def test_witness(capsys):
    code, report = invoke(capsys, 'hier', 'witness', '--n', '3')
    assert code == ExitCode.OK
    assert report['results']['certified_stage'] == 7
    assert report['results']['meets_target'] is True


def test_fullmodel_delta(capsys):
    code, report = invoke(capsys, 'fullmodel', 'delta', '--bits', '1011')
    assert code == ExitCode.OK
    assert report['results']['bits'] == '1011'
    assert report['results']['decoded'] == '1011'


def test_fullmodel_delta_rejects_bad_bits(capsys):
    assert run(['fullmodel', 'delta', '--bits', '12']) == ExitCode.USAGE


def test_kripke_check(capsys, model_file):
    code, report = invoke(
        capsys,
        'kripke',
        'check',
        '--model',
        str(model_file),
        '--formula',
        'a = b | ~a = b',
        '--env',
        'a=a',
        '--env',
        'b=b',
    )
    assert code == ExitCode.OK
    assert report['results']['forced'] == {'0': False, '1': True}
    assert report['results']['valid'] is False


def test_kripke_validate(capsys, model_file):
    code, report = invoke(
        capsys, 'kripke', 'validate', '--model', str(model_file)
    )
    assert code == ExitCode.OK
    assert report['results']['ok'] is True


def test_erec_run(capsys, tmp_path):
    term = tmp_path / 'k.sexpr'
    term.write_text('(app (idx k) (var x) (const 3))')
    code, report = invoke(
        capsys, 'erec', 'run', '--term', str(term), '--env', 'x=2'
    )
    assert code == ExitCode.OK
    assert report['results']['kind'] == 'value'
    assert report['results']['value'] == '2'


def test_erec_run_at_global_fuel(capsys, tmp_path):
    term = tmp_path / 'loop.sexpr'
    skk = '(app (idx s) (idx k) (idx k))'
    sii = f'(app (idx s) {skk} {skk})'
    term.write_text(f'(app {sii} {sii})')
    code, report = invoke(
        capsys, '--fuel', '5', 'erec', 'run', '--term', str(term)
    )
    assert code == ExitCode.OK
    assert report['results']['kind'] == 'timeout'
    assert report['results']['spent'] == 5


def test_erec_indices_file(capsys, tmp_path):
    out = tmp_path / 'indices.json'
    code, report = invoke(capsys, 'erec', 'indices', '--out', str(out))
    assert code == ExitCode.OK
    assert json.loads(out.read_text()) == report['results']


def test_realize_check(capsys, tmp_path):
    realizer = tmp_path / 'realizer.txt'
    realizer.write_text('0\n')
    code, report = invoke(
        capsys,
        'realize',
        'check',
        '--realizer',
        str(realizer),
        '--formula',
        '0 in 1',
    )
    assert code == ExitCode.OK
    assert report['results']['kind'] == 'realized'
    assert report['results']['interpretation'] == 'bounded-search'


def test_realize_check_rejects_search_rank(capsys, tmp_path):
    realizer = tmp_path / 'realizer.txt'
    realizer.write_text('0')
    code = run(
        [
            'realize',
            'check',
            '--realizer',
            str(realizer),
            '--formula',
            '0 in 1',
            '--search-rank',
            '4',
        ]
    )
    assert code == ExitCode.USAGE


def test_quick_vm_suite(capsys):
    code, report = invoke(capsys, 'suite', 'vm', '--quick')
    assert code == ExitCode.OK
    assert list(report['results']['batteries']) == ['vm']
    assert report['results']['batteries']['vm']['ok'] is True


def test_paper_checks_runs_every_battery(capsys):
    code, report = invoke(capsys, 'suite', '--paper-checks', '--quick')
    assert code in {ExitCode.OK, ExitCode.VIOLATED}
    assert list(report['results']['batteries']) == [b.value for b in Battery]
    assert report['command'] == ['suite', '--paper-checks', '--quick']


def test_text_format(capsys):
    code = run(['--format', 'text', 'fullmodel', 'delta', '--bits', '1'])
    assert code == ExitCode.OK
    assert 'decoded' in capsys.readouterr().out
