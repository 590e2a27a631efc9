import pytest

from dimstruct.io import fixture_path, parse_structure_file


@pytest.fixture
def load():
    def _load(name, validated=True):
        sf = parse_structure_file(fixture_path(name).read_text())
        return sf.validated() if validated else sf
    return _load


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.LINES:
            terminalreporter.write_line(line)
