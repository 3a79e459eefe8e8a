import pytest
from fastapi.testclient import TestClient

from hf_workbench.app import app
from hf_workbench.resources.formula.parser import parse
from hf_workbench.resources.kripke.examples import chains, two_node_example
from hf_workbench.resources.kripke.repository import to_file
from hf_workbench.settings import get_settings

settings = get_settings()


@pytest.fixture
def client():
    with TestClient(app) as client:
        yield client


@pytest.fixture
def small_budget(monkeypatch):
    """Shrinks the element and fuel budgets through the environment."""
    monkeypatch.setenv('HFW_BUDGET_ELEMS', '50')
    monkeypatch.setenv('HFW_FUEL', '50')
    return get_settings()


@pytest.fixture
def two_node():
    return two_node_example()


@pytest.fixture
def two_node_file(tmp_path, two_node):
    path = tmp_path / 'two_node.json'
    path.write_text(to_file(two_node).model_dump_json(indent=2))
    return path


@pytest.fixture
def chain():
    return chains(2)


@pytest.fixture
def decidable_equality():
    return parse('a = b | ~a = b')


@pytest.fixture
def double_negated_equality():
    return parse('~~a = b')
