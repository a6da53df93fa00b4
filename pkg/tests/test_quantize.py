import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shannon_invariants.dist import from_samples
from shannon_invariants.errors import InvalidDraw, ShapeMismatch
from shannon_invariants.quantize import (
    QuantizerConfig,
    cell_draws,
    level_value,
    quantize_array,
    quantize_table,
    read_labels,
    read_matrix,
    stochastic_quantize,
)

TANH8 = QuantizerConfig(-1.0, 1.0, 8, seed=3)


def test_step_formula():
    assert TANH8.step == pytest.approx(2 / 7, abs=1e-15)
    assert np.allclose(TANH8.levels, [-1 + 2 * k / 7 for k in range(8)])


def test_config_validation():
    with pytest.raises(ValueError):
        QuantizerConfig(1.0, 1.0, 8)
    with pytest.raises(ValueError):
        QuantizerConfig(0.0, 1.0, 1)


@pytest.mark.parametrize("u", [0.0, 0.3, 0.999, 1.0])
@pytest.mark.parametrize("k", range(8))
def test_on_grid_values_are_fixed(u, k):
    x = -1 + 2 * k / 7
    assert stochastic_quantize(x, TANH8, u) == k


def test_case_split_orientation():
    cfg = QuantizerConfig(0.0, 1.0, 2)
    # t = 0.3: up with probability 0.3
    assert stochastic_quantize(0.3, cfg, 0.1) == 1
    assert stochastic_quantize(0.3, cfg, 0.5) == 0
    assert stochastic_quantize(0.3, cfg, 0.3) == 0  # tie goes down
    reversed_cfg = QuantizerConfig(0.0, 1.0, 2, reverse_split=True)
    assert stochastic_quantize(0.3, reversed_cfg, 0.1) == 0
    assert stochastic_quantize(0.3, reversed_cfg, 0.5) == 1
    assert stochastic_quantize(0.3, reversed_cfg, 0.3) == 0


def test_clamping_and_bad_draws():
    assert stochastic_quantize(5.0, TANH8, 0.5) == 7
    assert stochastic_quantize(-5.0, TANH8, 0.5) == 0
    with pytest.raises(InvalidDraw):
        stochastic_quantize(0.0, TANH8, 1.5)
    with pytest.raises(InvalidDraw):
        stochastic_quantize(0.0, TANH8, -0.01)


def test_midpoint_frequency():
    x = -1 + 2 * 3.5 / 7
    u = np.random.default_rng(0).random(100_000)
    upper = (quantize_array(np.full(u.shape, x), TANH8, u) == 4).mean()
    assert abs(upper - 0.5) < 0.01


@given(st.floats(-1.0, 1.0), st.integers(0, 2**32))
def test_support_and_determinism(x, seed):
    u = np.random.default_rng(seed).random(64)
    lam = quantize_array(np.full(64, x), TANH8, u)
    assert set(lam.tolist()) <= set(range(8))
    vals = level_value(lam, TANH8)
    assert np.all(np.abs(vals - x) <= TANH8.step + 1e-12)
    assert np.array_equal(lam, quantize_array(np.full(64, x), TANH8, u))


def test_cell_draws_are_per_cell():
    full = cell_draws(9, 50, 4)
    assert np.array_equal(full[:, 2], cell_draws(9, 50, [2])[:, 0])
    assert np.array_equal(full[:20], cell_draws(9, 20, 4))
    assert not np.array_equal(full, cell_draws(10, 50, 4))


def test_quantize_table_examples():
    # constant on a grid point; off-grid constants still randomise between two levels
    const = quantize_table(np.full((5, 3), -1 + 6 / 7), TANH8, list("abcde"))
    d = from_samples(const)
    assert [len(a) for a in d.alphabets[:3]] == [1, 1, 1]
    assert const.column_names == ("x1", "x2", "x3", "y")

    cfg2 = QuantizerConfig(-1.0, 1.0, 2, seed=1)
    m = np.array([[-1.0, 1.0], [1.0, -1.0], [1.0, 1.0]])
    t = quantize_table(m, cfg2, [0, 1, 2])
    assert [r[:2] for r in t.rows] == [(0, 1), (1, 0), (1, 1)]

    rng = np.random.default_rng(2)
    act = np.tanh(rng.normal(size=(200, 4)))
    a = quantize_table(act, TANH8, list(range(200))).to_csv()
    b = quantize_table(act, TANH8, list(range(200))).to_csv()
    assert a.encode() == b.encode()


def test_quantize_table_value_symbols():
    t = quantize_table(np.array([[-1.0], [1.0], [-1 + 2 / 7]]), TANH8, [0, 1, 2], symbols="value")
    assert [r[0] for r in t.rows] == ["-1", "1", "-0.714285714286"]


def test_quantize_table_shape_errors():
    with pytest.raises(ShapeMismatch):
        quantize_table(np.zeros((3, 2)), TANH8, [0, 1])
    with pytest.raises(ShapeMismatch):
        quantize_table(np.zeros((0, 2)), TANH8, [])


def test_matrix_and_label_files(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("2 3\n0.1 0.2 0.3\n0.4 0.5 0.6\n")
    assert read_matrix(p).shape == (2, 3)
    p.write_text("2 3\n0.1 0.2\n")
    with pytest.raises(ShapeMismatch):
        read_matrix(p)
    q = tmp_path / "y.txt"
    q.write_text("a\nb\n\n")
    assert read_labels(q) == ["a", "b"]


def test_reversed_split_is_biased():
    # ceil when u > f rounds up with probability 1 - f, pulling values away from x
    reversed_cfg = QuantizerConfig(0.0, 1.0, 2, reverse_split=True)
    u = np.random.default_rng(1).random(100_000)
    mean = quantize_array(np.full(u.shape, 0.2), reversed_cfg, u).mean()
    assert abs(mean - 0.8) < 0.01
