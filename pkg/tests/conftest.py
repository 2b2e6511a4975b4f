import pytest

from tropmon.froidure_pin import enumerate_monoid
from tropmon.generators import minplus2_gens


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run long checks (3x3 conjecture at t = 3)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session", autouse=True)
def compiled_kernels():
    # load (or compile) the numba kernels before anything is timed
    enumerate_monoid(minplus2_gens(0))
