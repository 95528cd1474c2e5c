import pytest


def pytest_addoption(parser):
    parser.addoption("--big", action="store_true", default=False,
                     help="also run the S_9 sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--big"):
        return
    skip = pytest.mark.skip(reason="needs --big")
    for item in items:
        if "big" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def big(request):
    return request.config.getoption("--big")
