import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.daha import build_daha_instance  # noqa: E402
from core.fields import field_instance  # noqa: E402
from core.scalars import ParameterSet  # noqa: E402
from core.torus import QuantumTorus  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size property runs")


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep user config and log files out of the real home directory."""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.setenv("APPDATA", str(tmp_path))
    monkeypatch.delenv("SKEWALG_SEED", raising=False)
    monkeypatch.delenv("SKEWALG_STRICT_SCHEMA", raising=False)
    return tmp_path


@pytest.fixture(scope="session")
def torus():
    return QuantumTorus(ParameterSet.generic())


@pytest.fixture(scope="session")
def daha():
    return build_daha_instance()


@pytest.fixture(scope="session")
def f1():
    return field_instance("QS-order2")


@pytest.fixture(scope="session")
def f2():
    return field_instance("F2S-dds")


@pytest.fixture(scope="session")
def f2_zero():
    return field_instance("F2S-zero")
