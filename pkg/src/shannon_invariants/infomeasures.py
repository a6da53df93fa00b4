"""Shannon entropy, mutual information and conditional mutual information, in bits.

Every mutual information is assembled from joint entropies, so all terms go
through the same cached marginalisation path of :class:`JointDistribution`.
Sources are addressed by 0-based index; the target is ``d.target``.
"""
from __future__ import annotations

from typing import Iterable

from .dist import JointDistribution
from .errors import EmptyVariableSet, IndexOutOfRange, OverlappingSubsets

__all__ = ["entropy", "mutual_information", "conditional_mi", "CLAMP_TOL"]

CLAMP_TOL = 1e-12


def _clamp(value: float, tol: float) -> float:
    if -tol <= value < 0.0:
        return 0.0
    return value


def _joint_entropy(d: JointDistribution, vars) -> float:
    vs = tuple(sorted(set(vars)))
    if not vs:
        return 0.0
    return d._entropy(d._check_vars(vs))


def _sources(d: JointDistribution, a: Iterable[int], name: str = "a") -> frozenset[int]:
    s = frozenset(int(i) for i in a)
    if any(i < 0 or i >= d.n_sources for i in s):
        raise IndexOutOfRange(f"source subset {name}={sorted(s)} outside 0..{d.n_sources - 1}")
    return s


def entropy(d: JointDistribution, vars: Iterable[int]) -> float:
    """Joint Shannon entropy ``H(vars)`` in bits, with ``0 log 0 = 0``."""
    return d._entropy(d._check_vars(vars))


def mutual_information(
    d: JointDistribution,
    a: Iterable[int],
    b: Iterable[int] | None = None,
    tol: float = CLAMP_TOL,
) -> float:
    """``I(X_a; Y)`` in bits, or ``I(X_a; X_b)`` when ``b`` is given.

    Computed from the joint entropies ``H(a) + H(b) - H(a, b)`` and clamped to zero when it lies
    within ``tol`` below zero.
    """
    a = set(d._check_vars(a))
    b = {d.target} if b is None else set(d._check_vars(b))
    if a & b:
        raise OverlappingSubsets("mutual information between overlapping variable sets")
    # H(b) - H(b|a): the grouping makes a deterministic b give exactly 0
    value = _joint_entropy(d, b) - (_joint_entropy(d, a | b) - _joint_entropy(d, a))
    return _clamp(value, tol)


def conditional_mi(
    d: JointDistribution,
    a: Iterable[int],
    c: Iterable[int] = (),
    tol: float = CLAMP_TOL,
) -> float:
    """``I(X_a; Y | X_c)`` in bits.

    ``H(a,c) + H(Y,c) - H(a,Y,c) - H(c)``, clamped like
    :func:`mutual_information`. An empty ``c`` reduces to ``I(X_a; Y)``.
    """
    a = _sources(d, a, "a")
    c = _sources(d, c, "c")
    if not a:
        raise EmptyVariableSet("conditional_mi needs a nonempty source subset")
    if a & c:
        raise OverlappingSubsets(f"subsets {sorted(a)} and {sorted(c)} overlap")
    if not c:
        return mutual_information(d, a, tol=tol)
    y = {d.target}
    # H(Y|c) - H(Y|a,c)
    value = (_joint_entropy(d, y | c) - _joint_entropy(d, c)) - (
        _joint_entropy(d, a | y | c) - _joint_entropy(d, a | c)
    )
    return _clamp(value, tol)
