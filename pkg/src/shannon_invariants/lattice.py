"""
Antichains of source subsets and the redundancy lattice, for up to five sources.

A source subset is a bitmask: bit ``i`` set means source ``i + 1`` is in the
set (sources are numbered from 1 in all textual output). An antichain is a
canonically sorted tuple of such masks in which no mask contains another.

Each antichain also has an *up-set mask*: a bitmask over all ``2**n`` subsets
with bit ``s`` set iff subset ``s`` contains some member of the antichain.
This is the antichain's row in the containment table, and the order becomes
a bit test::

    alpha <= beta  <=>  up(beta) is a subset of up(alpha)
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import MismatchedSourceCount, UnsupportedSize

__all__ = [
    "MAX_SOURCES",
    "Antichain",
    "enumerate_antichains",
    "degree_redundancy",
    "degree_vulnerability",
    "lattice_leq",
    "down_set",
    "bottom",
    "top",
    "degree_histograms",
    "render_lattice",
]

MAX_SOURCES = 5


def _members(mask: int) -> tuple[int, ...]:
    """1-based members of a subset mask."""
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _set_key(mask: int):
    return (mask.bit_count(), _members(mask))


@dataclass(frozen=True, order=False)
class Antichain:
    """A nonempty collection of pairwise incomparable nonempty source subsets."""

    sets: tuple[int, ...]
    n: int

    def __post_init__(self):
        sets = tuple(sorted(set(int(s) for s in self.sets), key=_set_key))
        if not sets:
            raise ValueError("an antichain must contain at least one set")
        full = (1 << self.n) - 1
        for s in sets:
            if s <= 0 or s & ~full:
                raise ValueError(f"subset {_members(s)} not a nonempty subset of 1..{self.n}")
        for i, a in enumerate(sets):
            for b in sets[i + 1:]:
                if a & b == a or a & b == b:
                    raise ValueError(f"{_members(a)} and {_members(b)} are comparable")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def from_sets(cls, sets, n: int) -> "Antichain":
        """Build from 1-based member collections, e.g. ``[[1], [2, 3]]``."""
        masks = []
        for s in sets:
            m = 0
            for i in s:
                if not 1 <= i <= n:
                    raise ValueError(f"source {i} outside 1..{n}")
                m |= 1 << (i - 1)
            masks.append(m)
        return cls(tuple(masks), n)

    @classmethod
    def parse(cls, text: str, n: int) -> "Antichain":
        """Inverse of ``str``: ``"{1}{2,3}"`` -> antichain."""
        groups = re.findall(r"\{([^{}]*)\}", text)
        if not groups or "".join("{%s}" % g for g in groups) != text.replace(" ", ""):
            raise ValueError(f"cannot parse antichain {text!r}")
        return cls.from_sets([[int(t) for t in g.split(",")] for g in groups], n)

    @property
    def key(self):
        return tuple(_set_key(s) for s in self.sets)

    @property
    def members(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_members(s) for s in self.sets)

    @property
    def up_mask(self) -> int:
        """Containment-table row: bit ``s`` set iff subset ``s`` contains a member."""
        return _up_mask(self.sets, self.n)

    def __str__(self):
        return "".join("{" + ",".join(map(str, m)) + "}" for m in self.members)


@lru_cache(maxsize=None)
def _up_mask(sets: tuple[int, ...], n: int) -> int:
    up = 0
    for s in range(1, 1 << n):
        if any(a & s == a for a in sets):
            up |= 1 << s
    return up


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_SOURCES:
        raise UnsupportedSize(f"lattices are supported for 1 <= n <= {MAX_SOURCES}, got {n}")


def _raw_antichains(n: int) -> list[tuple[int, ...]]:
    """Backtracking over subsets in canonical order; each antichain appears once."""
    subsets = sorted(range(1, 1 << n), key=_set_key)
    out: list[tuple[int, ...]] = []

    def extend(chosen: list[int], start: int) -> None:
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all((a & s) != a and (a & s) != s for a in chosen):
                chosen.append(s)
                out.append(tuple(chosen))
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    return out


class _Lattice:
    """Ordered antichains for one ``n`` with their up-set masks."""

    def __init__(self, n: int):
        self.n = n
        chains = [Antichain(s, n) for s in _raw_antichains(n)]
        ups = np.array([c.up_mask for c in chains], dtype=np.uint64)
        # down-set size of j = number of i with up[j] subset of up[i]
        sizes = np.zeros(len(chains), dtype=np.int64)
        for lo in range(0, len(chains), 512):
            block = ups[lo:lo + 512]
            sizes[lo:lo + 512] = ((block[:, None] & ~ups[None, :]) == 0).sum(axis=1)
        order = sorted(range(len(chains)), key=lambda i: (sizes[i], chains[i].key))
        self.antichains = tuple(chains[i] for i in order)
        self.ups = ups[order]
        self.down_sizes = sizes[order]
        self.index = {c: i for i, c in enumerate(self.antichains)}

    def down_indices(self, i: int) -> np.ndarray:
        return np.flatnonzero((self.ups[i] & ~self.ups) == 0)


@lru_cache(maxsize=None)
def _lattice(n: int) -> _Lattice:
    _check_n(n)
    return _Lattice(n)


def enumerate_antichains(n: int) -> list[Antichain]:
    """All antichains for ``n`` sources, ordered by down-set size then canonical form.

    The order is a linear extension of the lattice order, so iterating it
    visits every antichain after all of its strict predecessors.
    """
    return list(_lattice(n).antichains)


def degree_redundancy(alpha: Antichain) -> int:
    """Number of single sources from which the atom is accessible."""
    return sum(1 for s in alpha.sets if s.bit_count() == 1)


def degree_vulnerability(alpha: Antichain) -> int:
    """Number of sources contained in every set of the antichain."""
    common = (1 << alpha.n) - 1
    for s in alpha.sets:
        common &= s
    return common.bit_count()


def lattice_leq(alpha: Antichain, beta: Antichain) -> bool:
    """``alpha <= beta``: every set of ``beta`` contains some set of ``alpha``."""
    if alpha.n != beta.n:
        raise MismatchedSourceCount(f"n={alpha.n} vs n={beta.n}")
    return all(any(a & b == a for a in alpha.sets) for b in beta.sets)


def down_set(alpha: Antichain) -> list[Antichain]:
    """All ``beta <= alpha``, including ``alpha``, in lattice order."""
    lat = _lattice(alpha.n)
    return [lat.antichains[i] for i in lat.down_indices(lat.index[alpha])]


def bottom(n: int) -> Antichain:
    """``{1}{2}...{n}``: information held redundantly by every single source."""
    return Antichain(tuple(1 << i for i in range(n)), n)


def top(n: int) -> Antichain:
    """``{1,...,n}``: information available only from all sources jointly."""
    return Antichain(((1 << n) - 1,), n)


def degree_histograms(n: int) -> tuple[dict[int, int], dict[int, int]]:
    """Counts of antichains per degree of redundancy and per degree of vulnerability."""
    chains = enumerate_antichains(n)
    r = Counter(degree_redundancy(a) for a in chains)
    v = Counter(degree_vulnerability(a) for a in chains)
    return ({k: r.get(k, 0) for k in range(n + 1)}, {k: v.get(k, 0) for k in range(n + 1)})


def render_lattice(n: int) -> str:
    """Text listing: one line per antichain with ``r`` and ``v``, then degree histograms."""
    lines = [f"# antichains for n={n}: {len(enumerate_antichains(n))}", "antichain\tr\tv"]
    for a in enumerate_antichains(n):
        lines.append(f"{a}\t{degree_redundancy(a)}\t{degree_vulnerability(a)}")
    r_hist, v_hist = degree_histograms(n)
    lines.append("# r-degree histogram: " + " ".join(f"{k}:{c}" for k, c in r_hist.items()))
    lines.append("# v-degree histogram: " + " ".join(f"{k}:{c}" for k, c in v_hist.items()))
    return "\n".join(lines) + "\n"
