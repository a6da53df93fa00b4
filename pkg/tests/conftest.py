import numpy as np
import pytest
from hypothesis import strategies as st

from shannon_invariants.dist import JointDistribution

from oracles import AND, COPY, XOR


@pytest.fixture
def xor():
    return JointDistribution.from_pmf(XOR)


@pytest.fixture
def copy_gate():
    return JointDistribution.from_pmf(COPY)


@pytest.fixture
def and_gate():
    return JointDistribution.from_pmf(AND)


@st.composite
def joint_arrays(draw, n_sources=None, max_alphabet=3):
    """Dense pmf arrays with some zero cells, normalised."""
    n = draw(st.integers(1, 3)) if n_sources is None else n_sources
    shape = tuple(draw(st.lists(st.integers(2, max_alphabet), min_size=n + 1, max_size=n + 1)))
    size = int(np.prod(shape))
    w = draw(st.lists(st.one_of(st.just(0.0), st.floats(1e-3, 1.0)), min_size=size, max_size=size))
    w = np.array(w)
    if w.sum() == 0:
        w[0] = 1.0
    return (w / w.sum()).reshape(shape)


@st.composite
def distributions(draw, n_sources=None, max_alphabet=3):
    return JointDistribution.from_array(draw(joint_arrays(n_sources, max_alphabet)))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
