"""
Stochastic quantisation of bounded activations onto a uniform grid.

A value ``x`` in ``[sigma_min, sigma_max]`` sits at fractional grid position
``t = (x - sigma_min) / eps`` with ``eps = (sigma_max - sigma_min)/(n_levels - 1)``.
It is rounded up to ``ceil(t)`` with probability ``t mod 1`` and down
otherwise, so the expected level value equals ``x``.

Per-cell randomness is counter based: the draw for ``(row, col)`` is the
``row``-th uniform of a Philox stream keyed by ``(seed, col)``. Output is
therefore independent of evaluation order.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dist import SampleTable
from .errors import InvalidDraw, MalformedTable, ShapeMismatch

__all__ = [
    "QuantizerConfig",
    "stochastic_quantize",
    "level_value",
    "quantize_array",
    "cell_draws",
    "quantize_table",
    "read_matrix",
    "read_labels",
]


@dataclass(frozen=True)
class QuantizerConfig:
    sigma_min: float = -1.0
    sigma_max: float = 1.0
    n_levels: int = 8
    seed: int = 0
    # ceil when u > t mod 1 instead; biased away from x, kept for comparison
    reverse_split: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.sigma_min) and math.isfinite(self.sigma_max)):
            raise ValueError("activation bounds must be finite")
        if not self.sigma_max > self.sigma_min:
            raise ValueError("sigma_max must exceed sigma_min")
        if int(self.n_levels) != self.n_levels or self.n_levels < 2:
            raise ValueError("n_levels must be an integer >= 2")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if not self.step > 0:
            raise ValueError("grid step is not positive")

    @property
    def step(self) -> float:
        """Grid spacing ``(sigma_max - sigma_min) / (n_levels - 1)``."""
        return (self.sigma_max - self.sigma_min) / (self.n_levels - 1)

    @property
    def levels(self) -> np.ndarray:
        return self.step * np.arange(self.n_levels) + self.sigma_min


def _positions(values, cfg: QuantizerConfig) -> np.ndarray:
    x = np.clip(np.asarray(values, dtype=float), cfg.sigma_min, cfg.sigma_max)
    t = (x - cfg.sigma_min) / cfg.step
    # snap values that land within rounding noise of a grid point
    near = np.rint(t)
    return np.where(np.abs(t - near) < 1e-12, near, t)


def quantize_array(values, cfg: QuantizerConfig, u) -> np.ndarray:
    """Vectorised :func:`stochastic_quantize`: level indices for ``values`` given draws ``u``."""
    u = np.asarray(u, dtype=float)
    if np.any((u < 0) | (u > 1)) or np.any(np.isnan(u)):
        raise InvalidDraw("uniform draws must lie in [0, 1]")
    t = _positions(values, cfg)
    lo = np.floor(t)
    frac = t - lo
    up = u > frac if cfg.reverse_split else u < frac
    # f == 0 means t is on the grid; ceil == floor there
    up &= frac > 0
    lam = (lo + up).astype(np.int64)
    return np.clip(lam, 0, cfg.n_levels - 1)


def stochastic_quantize(value: float, cfg: QuantizerConfig, u: float) -> int:
    """Level index in ``0 .. n_levels - 1`` for one value and one uniform draw ``u``.

    Out-of-range values are clamped to the bounds first. With
    ``f = t mod 1`` the result is ``ceil(t)`` if ``u < f`` and ``floor(t)``
    otherwise (ties go down). ``cfg.reverse_split`` flips the branch to
    ``ceil(t)`` if ``u > f``, which is biased away from ``x``.
    """
    return int(quantize_array(value, cfg, u))


def level_value(level, cfg: QuantizerConfig):
    """Grid value ``eps * level + sigma_min``."""
    return cfg.step * np.asarray(level) + cfg.sigma_min


def cell_draws(seed: int, n_rows: int, cols: Sequence[int] | int) -> np.ndarray:
    """Uniform draws of shape ``(n_rows, len(cols))`` for the given columns."""
    if isinstance(cols, (int, np.integer)):
        cols = range(int(cols))
    out = np.empty((n_rows, len(cols)))
    for j, col in enumerate(cols):
        bitgen = np.random.Philox(np.random.SeedSequence([int(seed), int(col)]))
        out[:, j] = np.random.Generator(bitgen).random(n_rows)
    return out


def quantize_table(
    matrix,
    cfg: QuantizerConfig,
    target_column_values: Sequence,
    symbols: str = "index",
) -> SampleTable:
    """Quantise an activation matrix and attach labels as a sample table.

    Columns are named ``x1 .. xm`` and the target column is ``y``. Source
    symbols are level indices, or grid values formatted to 12 significant
    digits when ``symbols="value"``.
    """
    if symbols not in ("index", "value"):
        raise ValueError("symbols must be 'index' or 'value'")
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.size == 0:
        raise ShapeMismatch("activation matrix must be a nonempty 2-D array")
    if len(target_column_values) != m.shape[0]:
        raise ShapeMismatch(
            f"{m.shape[0]} activation rows but {len(target_column_values)} target labels"
        )
    if not np.all(np.isfinite(m)):
        raise ValueError("activation matrix contains non-finite values")
    levels = quantize_array(m, cfg, cell_draws(cfg.seed, m.shape[0], m.shape[1]))
    if symbols == "value":
        grid = [f"{round(v, 12) + 0.0:.12g}" for v in cfg.levels]
        levels = np.array(grid, dtype=object)[levels]
    names = tuple(f"x{j + 1}" for j in range(m.shape[1])) + ("y",)
    rows = tuple(tuple(r) + (y,) for r, y in zip(levels.tolist(), target_column_values))
    return SampleTable(names, rows, "y")


def read_matrix(path: str | os.PathLike) -> np.ndarray:
    """Dense matrix file: header ``rows cols``, then row-major whitespace-separated doubles."""
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise MalformedTable("line 1: expected header 'rows cols'")
        try:
            rows, cols = int(header[0]), int(header[1])
        except ValueError:
            raise MalformedTable("line 1: rows and cols must be integers") from None
        tokens = fh.read().split()
    if rows <= 0 or cols <= 0:
        raise MalformedTable("line 1: rows and cols must be positive")
    if len(tokens) != rows * cols:
        raise ShapeMismatch(f"header declares {rows}x{cols} values, found {len(tokens)}")
    try:
        data = np.array([float(t) for t in tokens])
    except ValueError as exc:
        raise MalformedTable(f"non-numeric entry: {exc}") from None
    return data.reshape(rows, cols)


def read_labels(path: str | os.PathLike) -> list[str]:
    """One target label per nonblank line."""
    with open(path) as fh:
        return [line.strip() for line in fh if line.strip()]
