"""
Exact discrete joint distributions and their construction from sample data.

A :class:`JointDistribution` holds a sparse pmf over ``(X_1, ..., X_n, Y)``.
Variables are addressed by 0-based index: sources are ``0 .. n-1`` and the
target is always index ``n``. Symbols are interned to integer codes once, at
construction, and the original labels are kept in ``alphabets`` for reporting.

Empirical distributions keep their integer counts, so every marginal is an
exact integer aggregation followed by a single division.
"""
from __future__ import annotations

import io
import math
import os
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    EmptyTable,
    EmptyVariableSet,
    IndexOutOfRange,
    MalformedTable,
    MissingTargetColumn,
)

__all__ = [
    "SampleTable",
    "JointDistribution",
    "from_samples",
    "marginal",
    "random_distribution",
    "read_csv",
]

PMF_TOL = 1e-12


@dataclass(frozen=True)
class SampleTable:
    """Rows of discrete symbols: ``n`` source columns plus one target column.

    ``target_column`` may be a column name or a 0-based column position.
    """

    column_names: tuple[str, ...]
    rows: tuple[tuple[Hashable, ...], ...]
    target_column: str | int

    def __post_init__(self):
        object.__setattr__(self, "column_names", tuple(str(c) for c in self.column_names))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.column_names) < 2:
            raise MalformedTable("a sample table needs at least one source and one target column")
        if len(set(self.column_names)) != len(self.column_names):
            raise MalformedTable(f"duplicate column names in {self.column_names}")
        width = len(self.column_names)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise MalformedTable(f"row {i} has {len(row)} entries, expected {width}")
        self.target_index  # validates

    @property
    def target_index(self) -> int:
        t = self.target_column
        if isinstance(t, (int, np.integer)) and not isinstance(t, bool):
            if not 0 <= t < len(self.column_names):
                raise MissingTargetColumn(f"target column index {t} out of range")
            return int(t)
        try:
            return self.column_names.index(str(t))
        except ValueError:
            raise MissingTargetColumn(f"no column named {t!r}") from None

    @property
    def source_names(self) -> tuple[str, ...]:
        t = self.target_index
        return tuple(c for i, c in enumerate(self.column_names) if i != t)

    def __len__(self):
        return len(self.rows)

    def to_csv(self, target=None) -> str | None:
        """Write the table as CSV (header line, ``,`` delimiter, no quoting).

        Returns the text when ``target`` is None, otherwise writes to the
        given path or text stream.
        """
        buf = io.StringIO()
        buf.write(",".join(self.column_names) + "\n")
        for row in self.rows:
            buf.write(",".join(str(s) for s in row) + "\n")
        text = buf.getvalue()
        if target is None:
            return text
        if hasattr(target, "write"):
            target.write(text)
        else:
            with open(target, "w", newline="") as fh:
                fh.write(text)
        return None


def read_csv(path_or_text, target: str | int | None = None) -> SampleTable:
    """Parse a sample table from a CSV file.

    The first line is the header and the delimiter is ``,``. Quoting is not
    supported: every ``,`` separates fields and symbols are compared as exact
    strings. The target defaults to the last column. Errors name the 1-based
    line number at fault.
    """
    if isinstance(path_or_text, (str, os.PathLike)) and os.path.exists(path_or_text):
        with open(path_or_text, newline="") as fh:
            lines = fh.read().splitlines()
    elif hasattr(path_or_text, "read"):
        lines = path_or_text.read().splitlines()
    else:
        raise FileNotFoundError(f"no such file: {path_or_text}")

    if not lines or not lines[0].strip():
        raise MalformedTable("line 1: missing header")
    header = lines[0].split(",")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != len(header):
            raise MalformedTable(
                f"line {lineno}: expected {len(header)} fields, found {len(fields)}"
            )
        rows.append(tuple(fields))
    if target is None:
        target = header[-1]
    try:
        return SampleTable(tuple(header), tuple(rows), target)
    except MalformedTable as exc:
        raise MalformedTable(f"line 1: {exc}") from None


def _encode_keys(codes: np.ndarray, sizes: Sequence[int]) -> np.ndarray:
    """Collapse integer-coded rows into one key per row.

    Uses a mixed-radix int64 key when the product alphabet fits, else falls
    back to a structured row view.
    """
    if codes.shape[1] == 0:
        return np.zeros(codes.shape[0], dtype=np.int64)
    if math.prod(int(s) for s in sizes) < 2**62:
        key = np.zeros(codes.shape[0], dtype=np.int64)
        for j, s in enumerate(sizes):
            key = key * int(s) + codes[:, j]
        return key
    contiguous = np.ascontiguousarray(codes, dtype=np.int64)
    return contiguous.view(np.dtype((np.void, 8 * codes.shape[1]))).ravel()


def _aggregate(codes: np.ndarray, weights: np.ndarray, sizes: Sequence[int]):
    """Sum ``weights`` over identical rows of ``codes``."""
    keys = _encode_keys(codes, sizes)
    _, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
    summed = np.bincount(inverse.ravel(), weights=weights)
    if np.issubdtype(weights.dtype, np.integer):
        summed = np.rint(summed).astype(np.int64)
    return codes[first], summed


class JointDistribution:
    """Sparse exact pmf over ``n_sources`` sources plus a target (last index).

    Instances are immutable. Use :func:`from_samples`,
    :meth:`JointDistribution.from_pmf` or :meth:`JointDistribution.from_array`
    to build one.

    Parameters
    ----------
    outcomes : ndarray of int, shape (m, n_sources + 1)
        Integer-coded outcome rows; column ``j`` indexes ``alphabets[j]``.
    weights : ndarray, shape (m,)
        Positive masses. Integer counts are kept exact; probabilities are
        ``weights / weights.sum()``.
    alphabets : sequence of sequences
        Symbol labels per variable, in code order.
    """

    def __init__(self, outcomes, weights, alphabets):
        outcomes = np.asarray(outcomes, dtype=np.int64)
        weights = np.asarray(weights)
        alphabets = tuple(tuple(a) for a in alphabets)
        if outcomes.ndim != 2 or outcomes.shape[1] != len(alphabets) or outcomes.shape[1] < 1:
            raise ValueError("outcomes must be a 2-D array with one column per alphabet")
        if weights.shape != (outcomes.shape[0],):
            raise ValueError("weights must have one entry per outcome row")
        keep = weights > 0
        outcomes, weights = outcomes[keep], weights[keep]
        if outcomes.shape[0] == 0:
            raise ValueError("a distribution needs at least one outcome with positive mass")
        sizes = [len(a) for a in alphabets]
        if np.any(outcomes < 0) or np.any(outcomes >= np.asarray(sizes)):
            raise ValueError("outcome code outside its alphabet")
        outcomes, weights = _aggregate(outcomes, weights, sizes)
        total = weights.sum()

        self._outcomes = outcomes
        self._weights = weights
        self._total = total
        self._alphabets = alphabets
        self._probs = weights / total
        if abs(self._probs.sum() - 1.0) > PMF_TOL:
            raise ValueError("probabilities do not sum to 1")
        for arr in (self._outcomes, self._weights, self._probs):
            arr.flags.writeable = False
        self._entropy_cache: dict[tuple[int, ...], float] = {}

    # -- construction -------------------------------------------------------

    @classmethod
    def from_pmf(cls, pmf: Mapping[tuple, float], tol: float = PMF_TOL) -> "JointDistribution":
        """Build from a mapping ``outcome tuple -> probability``.

        The last element of each outcome tuple is the target. Zero-mass
        entries are dropped. Probabilities must sum to 1 within ``tol``.
        """
        items = [(tuple(k), float(v)) for k, v in pmf.items()]
        if not items:
            raise ValueError("empty pmf")
        width = len(items[0][0])
        if any(len(k) != width for k, _ in items):
            raise ValueError("outcome tuples have inconsistent lengths")
        if any(v < 0 for _, v in items):
            raise ValueError("negative probability")
        if abs(sum(v for _, v in items) - 1.0) > tol:
            raise ValueError("probabilities do not sum to 1")
        interned = [dict() for _ in range(width)]
        codes = np.empty((len(items), width), dtype=np.int64)
        for i, (k, _) in enumerate(items):
            for j, sym in enumerate(k):
                codes[i, j] = interned[j].setdefault(sym, len(interned[j]))
        weights = np.array([v for _, v in items], dtype=float)
        return cls(codes, weights, [list(m) for m in interned])

    @classmethod
    def from_array(cls, p: np.ndarray) -> "JointDistribution":
        """Build from a dense array ``p[x_1, ..., x_n, y]`` (target on the last axis).

        Symbols are the integer positions along each axis.
        """
        p = np.asarray(p, dtype=float)
        if p.ndim < 2:
            raise ValueError("need at least one source axis and a target axis")
        if np.any(p < 0):
            raise ValueError("negative probability")
        idx = np.nonzero(p > 0)
        codes = np.stack(idx, axis=1)
        return cls(codes, p[idx], [range(s) for s in p.shape])

    # -- accessors ----------------------------------------------------------

    @property
    def n_sources(self) -> int:
        return len(self._alphabets) - 1

    @property
    def n_vars(self) -> int:
        return len(self._alphabets)

    @property
    def target(self) -> int:
        return self.n_sources

    @property
    def alphabets(self) -> tuple[tuple, ...]:
        return self._alphabets

    @property
    def outcomes(self) -> np.ndarray:
        return self._outcomes

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    @property
    def counts(self) -> np.ndarray | None:
        """Integer counts when built from samples, else None."""
        return self._weights if np.issubdtype(self._weights.dtype, np.integer) else None

    @property
    def pmf(self) -> dict[tuple, float]:
        """The pmf keyed by outcome label tuples."""
        labels = self._alphabets
        return {
            tuple(labels[j][c] for j, c in enumerate(row)): float(p)
            for row, p in zip(self._outcomes.tolist(), self._probs)
        }

    def dense(self) -> np.ndarray:
        """Dense pmf array of shape ``alphabet sizes``; for small systems only."""
        out = np.zeros([len(a) for a in self._alphabets])
        out[tuple(self._outcomes.T)] = self._probs
        return out

    def __len__(self):
        return self._outcomes.shape[0]

    def __repr__(self):
        sizes = [len(a) for a in self._alphabets]
        return f"JointDistribution(n_sources={self.n_sources}, alphabet_sizes={sizes}, support={len(self)})"

    # -- internals shared with infomeasures ---------------------------------

    def _check_vars(self, vars: Iterable[int]) -> tuple[int, ...]:
        vs = tuple(sorted(set(int(v) for v in vars)))
        if not vs:
            raise EmptyVariableSet("variable set is empty")
        if vs[0] < 0 or vs[-1] >= self.n_vars:
            raise IndexOutOfRange(f"variable indices {vs} outside 0..{self.n_vars - 1}")
        return vs

    def _marginal_weights(self, vs: tuple[int, ...]) -> np.ndarray:
        if len(vs) == self.n_vars:
            return self._weights
        sizes = [len(self._alphabets[v]) for v in vs]
        _, w = _aggregate(self._outcomes[:, vs], self._weights, sizes)
        return w

    def _entropy(self, vs: tuple[int, ...]) -> float:
        """Entropy in bits of the marginal on sorted, validated ``vs`` (cached)."""
        h = self._entropy_cache.get(vs)
        if h is None:
            w = self._marginal_weights(vs)
            p = w / self._total
            h = float(-np.dot(p, np.log2(p)))
            h = max(h, 0.0) + 0.0  # no -0.0
            self._entropy_cache[vs] = h
        return h


def from_samples(table: SampleTable) -> JointDistribution:
    """Empirical pmf of a sample table, treating the rows as the full population.

    Each outcome gets ``count / rows``. Alphabets list the distinct symbols of
    each column in first-appearance order, and the target column is moved to
    the last position.
    """
    if len(table.rows) == 0:
        raise EmptyTable("sample table has no rows")
    t = table.target_index
    order = [i for i in range(len(table.column_names)) if i != t] + [t]
    interned = [dict() for _ in order]
    codes = np.empty((len(table.rows), len(order)), dtype=np.int64)
    for j, col in enumerate(order):
        lookup = interned[j]
        codes[:, j] = [lookup.setdefault(row[col], len(lookup)) for row in table.rows]
    weights = np.ones(len(table.rows), dtype=np.int64)
    return JointDistribution(codes, weights, [list(m) for m in interned])


def marginal(d: JointDistribution, vars: Iterable[int]) -> JointDistribution:
    """Marginal pmf over ``vars``.

    The result orders the kept variables by ascending original index, so the
    last kept variable occupies the target slot.
    """
    vs = d._check_vars(vars)
    if len(vs) == d.n_vars:
        return d
    sizes = [len(d.alphabets[v]) for v in vs]
    codes, w = _aggregate(d.outcomes[:, vs], d._weights, sizes)
    return JointDistribution(codes, w, [d.alphabets[v] for v in vs])


def random_distribution(
    rng: np.random.Generator,
    n_sources: int,
    max_alphabet: int = 4,
    min_alphabet: int = 2,
) -> JointDistribution:
    """Random full-support joint pmf with i.i.d. exponential weights per outcome.

    Alphabet sizes are drawn uniformly from ``min_alphabet .. max_alphabet``.
    """
    shape = rng.integers(min_alphabet, max_alphabet + 1, size=n_sources + 1)
    w = rng.exponential(size=tuple(shape))
    return JointDistribution.from_array(w / w.sum())
