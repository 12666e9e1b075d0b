import pytest

from iasfl import IntSet, Labeling, parse_graph

ACCEPTANCE_LINES: list[str] = []


def S(*xs):
    return IntSet(xs)


@pytest.fixture
def k2():
    return parse_graph("a b")


@pytest.fixture
def p3():
    return parse_graph("a b\nb c")


@pytest.fixture
def c4():
    return parse_graph("a b\nb c\nc d\nd a")


@pytest.fixture
def star3():
    return parse_graph("a b\na c\na d")


@pytest.fixture
def star3_iasfl(star3):
    return star3, Labeling({"a": S(0), "b": S(0, 1), "c": S(0, 2), "d": S(0, 1, 2)}, S(0, 1, 2))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
