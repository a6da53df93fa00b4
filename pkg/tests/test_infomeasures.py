import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shannon_invariants.dist import JointDistribution
from shannon_invariants.errors import EmptyVariableSet, OverlappingSubsets
from shannon_invariants.infomeasures import conditional_mi, entropy, mutual_information

from conftest import distributions
from oracles import AND_CMI, H_AND, cmi_dict, entropy_dict, mi_dict


def test_entropy_examples(xor, and_gate):
    assert entropy(xor, [0]) == pytest.approx(1.0, abs=1e-15)
    const = JointDistribution.from_pmf({("a", "b"): 1.0})
    assert entropy(const, [0]) == 0.0
    assert entropy(and_gate, [2]) == pytest.approx(H_AND, abs=1e-12)
    assert entropy(and_gate, [2]) == pytest.approx(0.811278, abs=1e-6)


def test_mi_examples(xor, copy_gate):
    assert mutual_information(xor, [0]) == 0.0
    assert mutual_information(xor, [0, 1]) == pytest.approx(1.0, abs=1e-12)
    assert mutual_information(copy_gate, [0]) == pytest.approx(1.0, abs=1e-12)


def test_cmi_examples(xor, copy_gate, and_gate):
    assert conditional_mi(xor, [1], [0]) == pytest.approx(1.0, abs=1e-12)
    assert conditional_mi(copy_gate, [1], [0]) == 0.0
    assert conditional_mi(and_gate, [1], [0]) == pytest.approx(AND_CMI, abs=1e-12)
    assert conditional_mi(and_gate, [1], []) == mutual_information(and_gate, [1])


def test_errors(xor):
    with pytest.raises(EmptyVariableSet):
        entropy(xor, [])
    with pytest.raises(EmptyVariableSet):
        conditional_mi(xor, [], [0])
    with pytest.raises(OverlappingSubsets):
        conditional_mi(xor, [0], [0, 1])


def test_clamp_only_tiny_negatives():
    # independent target: MI is zero up to rounding and never reported negative
    p = {(a, b, y): 1 / 12 for a in range(2) for b in range(2) for y in range(3)}
    d = JointDistribution.from_pmf(p)
    for v in (mutual_information(d, [0, 1]), conditional_mi(d, [0], [1])):
        assert 0.0 <= v <= 1e-12
    assert mutual_information(d, [0], tol=0.0) >= -1e-15


@given(distributions())
def test_agrees_with_dict_oracle(d):
    pmf = d.pmf
    y = (d.target,)
    for i in range(d.n_sources):
        assert abs(mutual_information(d, [i]) - mi_dict(pmf, (i,), y)) < 1e-10
        rest = tuple(j for j in range(d.n_sources) if j != i)
        if rest:
            assert abs(conditional_mi(d, [i], rest) - cmi_dict(pmf, (i,), y, rest)) < 1e-10
    assert abs(entropy(d, range(d.n_vars)) - entropy_dict(pmf, range(d.n_vars))) < 1e-10


@given(distributions(n_sources=2))
def test_chain_rule(d):
    joint = mutual_information(d, [0, 1])
    assert abs(joint - (mutual_information(d, [0]) + conditional_mi(d, [1], [0]))) < 1e-10


@given(distributions(), st.data())
def test_monotone_under_inclusion(d, data):
    srcs = list(range(d.n_sources))
    b = data.draw(st.lists(st.sampled_from(srcs), min_size=1, unique=True))
    a = data.draw(st.lists(st.sampled_from(b), min_size=1, unique=True))
    assert mutual_information(d, a) <= mutual_information(d, b) + 1e-10


@given(distributions())
def test_nonnegative_and_symmetric_forms(d):
    y = [d.target]
    for i in range(d.n_sources):
        mi = mutual_information(d, [i])
        assert mi >= 0
        raw = entropy(d, [i]) + entropy(d, y) - entropy(d, [i, d.target])
        assert raw >= -1e-9
        h_y_given = entropy(d, [i, d.target]) - entropy(d, [i])
        assert abs(mi - max(0.0, entropy(d, y) - h_y_given)) < 1e-10
        assert mutual_information(d, y, [i]) == pytest.approx(mi, abs=1e-12)
    assert all(math.isfinite(entropy(d, [v])) for v in range(d.n_vars))
