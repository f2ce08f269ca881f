import pytest

from orthomorph.group import GroupSpec
from orthomorph.search import SearchBudget


@pytest.fixture
def z7():
    return GroupSpec.parse('Z7')


@pytest.fixture
def klein():
    return GroupSpec.parse('Z2xZ2')


@pytest.fixture
def small_budget():
    return SearchBudget(max_nodes=50)


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """ Points the CLI at a config file that does not exist yet """
    path = tmp_path / 'config.json'
    monkeypatch.setenv('ORTHOMORPH_CONFIG_FILE', str(path))
    monkeypatch.delenv('ORTHOMORPH_DEBUG', raising=False)
    return path