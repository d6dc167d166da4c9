import pytest
from hypothesis import settings

from ivfg import IvfGraph, generate

# brute-force oracles are slow on the larger draws
settings.register_profile("default", deadline=None)
settings.load_profile("default")

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[_ACCEPTANCE_KEY]


@pytest.fixture
def tri():
    """The small triangle used for most hand-checked values."""
    return IvfGraph(
        {"a": ("0.3", "0.6"), "b": ("0.4", "0.7"), "c": ("0.5", "0.8")},
        {("a", "b"): ("0.2", "0.5"), ("b", "c"): ("0.3", "0.6"), ("a", "c"): ("0.1", "0.4")},
    )


@pytest.fixture
def k3():
    return generate("complete-constant", 3, ("0.4", "0.4"))


@pytest.fixture
def c4():
    return generate("even-cycle-alternating", 4, ("0.5", "0.5"), [("0.1", "0.2"), ("0.3", "0.4")])
