import os

import pytest

from periodica.cli import data_dir


@pytest.fixture(scope="session")
def data():
    root = data_dir()
    return lambda name: os.path.join(root, name)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
