import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from liewide.rootsys import build_root_system

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def golden():
    def load(name):
        return json.loads((GOLDEN / name).read_text())
    return load


@pytest.fixture(scope="session")
def A3():
    return build_root_system("A3")


# -- acceptance bookkeeping -------------------------------------------------------

ACCEPTANCE_LINES: list = []
BUILT_MODULES: list = []


@pytest.fixture(scope="session", autouse=True)
def record_built_modules():
    """Log every simple module constructed through the library entry point."""
    from liewide import hwmod

    real = hwmod.build_simple_module

    def recording(phi, cb, lam, cap=None):
        V = real(phi, cb, lam, cap)
        BUILT_MODULES.append((phi, tuple(lam.marks if hasattr(lam, "marks") else lam), V.dim, len(V.weights)))
        return V

    hwmod.build_simple_module = recording
    yield BUILT_MODULES
    hwmod.build_simple_module = real


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
