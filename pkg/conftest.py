import shutil

import pytest

import arithring


def pytest_addoption(parser):
    parser.addoption(
        "--slow-tests",
        action="store_true",
        default=False,
        help="Run acceptance-scale tests (large bounds, full property sweeps). "
        "This increases test time.",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale test, needs --slow-tests")


def pytest_collection_modifyitems(config, items):
    run_slow = config.getoption("--slow-tests")
    skip_slow = pytest.mark.skip(reason="need --slow-tests option to run")
    for item in items:
        # All tests marked with `pytest.mark.slow` get skipped unless
        # `--slow-tests` passed
        if not run_slow and ("slow" in item.keywords):
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def save_path(tmpdir_factory):
    dir = tmpdir_factory.mktemp("temp_data", numbered=False)
    path = str(dir)
    yield path + "/"
    shutil.rmtree(path)


@pytest.fixture(scope="session", autouse=True)
def seeded():
    arithring.settings.seed = 0
    yield
