import pytest

from pypaq import common


def pytest_configure(config):
    config.addinivalue_line('markers',
                            'slow: exhaustive sweeps at n = 7 and 8')


@pytest.fixture(autouse=True)
def fresh_config():
    # each test starts from the default limits, whatever QSYM_BOUND says
    common.set_default_config(common.config())
    yield
    common.set_default_config(common.config())
