"""
Average degrees of redundancy and vulnerability, RSI and DRSI.

All four summaries need only ``I(X;Y)``, the ``n`` marginal terms
``I(X_i;Y)`` and the ``n`` leave-one-out terms ``I(X_j;Y|X_-j)``, so the cost
is linear in the number of sources. No lattice is ever built here.

The bounds in :class:`BoundsReport` hold for any decomposition whose atoms
are non-negative; they say nothing about signed decompositions.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .dist import JointDistribution
from .errors import IllDefinedInvariant, OutOfRangeInput
from .infomeasures import CLAMP_TOL, conditional_mi, mutual_information

__all__ = [
    "BoundsReport",
    "InvariantReport",
    "ILL_DEFINED_THRESHOLD",
    "total_mi",
    "marginal_mis",
    "conditional_mis",
    "redundancy_sum",
    "vulnerability_sum",
    "avg_degree_redundancy",
    "avg_degree_vulnerability",
    "rsi",
    "drsi",
    "interpret_bounds",
    "fraction_threshold",
    "exceeds_fraction",
    "analyze",
]

ILL_DEFINED_THRESHOLD = 1e-12
# slack for r_bar / v_bar that overshoot [0, n] by rounding
RANGE_SLACK = 1e-9


def total_mi(d: JointDistribution, tol: float = CLAMP_TOL) -> float:
    return mutual_information(d, range(d.n_sources), tol=tol)


def marginal_mis(d: JointDistribution, tol: float = CLAMP_TOL) -> list[float]:
    """``[I(X_i;Y) for i in sources]``."""
    return [mutual_information(d, [i], tol=tol) for i in range(d.n_sources)]


def conditional_mis(d: JointDistribution, tol: float = CLAMP_TOL) -> list[float]:
    """``[I(X_j;Y|X_-j) for j in sources]``; for one source this is ``[I(X_1;Y)]``."""
    n = d.n_sources
    return [
        conditional_mi(d, [j], [i for i in range(n) if i != j], tol=tol) for j in range(n)
    ]


def redundancy_sum(d: JointDistribution) -> float:
    """``R(X;Y) = sum_i I(X_i;Y)``, each atom weighted by its degree of redundancy."""
    return sum(marginal_mis(d))


def vulnerability_sum(d: JointDistribution) -> float:
    """``V(X;Y) = sum_j I(X_j;Y|X_-j)``, each atom weighted by its degree of vulnerability."""
    return sum(conditional_mis(d))


def _check_defined(i_total: float, threshold: float) -> None:
    if i_total <= threshold:
        raise IllDefinedInvariant(
            f"I(X;Y) = {i_total:.3e} bits is not above the threshold {threshold:.1e}"
        )


def avg_degree_redundancy(d: JointDistribution, threshold: float = ILL_DEFINED_THRESHOLD) -> float:
    """Average degree of redundancy ``sum_i I(X_i;Y) / I(X;Y)``, in ``[0, n]``.

    Raises
    ------
    IllDefinedInvariant
        If ``I(X;Y) <= threshold``.
    """
    i_total = total_mi(d)
    _check_defined(i_total, threshold)
    return redundancy_sum(d) / i_total


def avg_degree_vulnerability(d: JointDistribution, threshold: float = ILL_DEFINED_THRESHOLD) -> float:
    """Average degree of vulnerability ``sum_j I(X_j;Y|X_-j) / I(X;Y)``, in ``[0, n]``."""
    i_total = total_mi(d)
    _check_defined(i_total, threshold)
    return vulnerability_sum(d) / i_total


def rsi(d: JointDistribution) -> float:
    """Redundancy-synergy index ``sum_i I(X_i;Y) - I(X;Y)``. Defined at ``I = 0``."""
    return redundancy_sum(d) - total_mi(d)


def drsi(d: JointDistribution) -> float:
    """Dual redundancy-synergy index ``I(X;Y) - sum_j I(X_j;Y|X_-j)``."""
    return total_mi(d) - vulnerability_sum(d)


@dataclass(frozen=True)
class BoundsReport:
    """Lower bounds on atom fractions implied by ``r_bar`` and ``v_bar``.

    Valid only under non-negativity of the atoms (``assumes_nonnegative_atoms``).
    """

    min_source_synergy_fraction: float
    min_proper_redundancy_fraction: float
    min_robustness_fraction: float
    min_vulnerability_fraction: float
    redundancy_predominant: bool
    synergy_predominant: bool
    robustness_predominant: bool
    vulnerability_predominant: bool
    assumes_nonnegative_atoms: bool = True

    def to_dict(self) -> dict:
        return asdict(self)


def fraction_threshold(lam: float, n: int) -> float:
    """Smallest ``r_bar`` (or ``v_bar``) above which the higher-order fraction exceeds ``lam``.

    Equals ``lam * n + 1 - lam``; at ``lam = 0.5`` this is ``(n + 1) / 2``.
    """
    return lam * n + 1 - lam


def exceeds_fraction(measure: float, lam: float, n: int) -> bool:
    """True iff ``measure > lam * n + 1 - lam``."""
    return measure > fraction_threshold(lam, n)


def _higher_order_min(measure: float, n: int) -> float:
    if n < 2:
        return 0.0
    return min(1.0, max(0.0, (measure - 1.0) / (n - 1)))


def interpret_bounds(r_bar: float, v_bar: float, n: int) -> BoundsReport:
    """Translate ``r_bar`` and ``v_bar`` into guaranteed minimum atom fractions.

    ``min_source_synergy_fraction = max(0, 1 - r_bar)`` and
    ``min_proper_redundancy_fraction = max(0, (r_bar - 1)/(n - 1))``
    (zero for ``n = 1``); the vulnerability side is analogous. The
    predominance flags fire at ``< 1/2`` and ``> (n + 1)/2``.
    """
    if n < 1:
        raise OutOfRangeInput(f"n must be >= 1, got {n}")
    for name, m in (("r_bar", r_bar), ("v_bar", v_bar)):
        if not (-RANGE_SLACK <= m <= n + RANGE_SLACK):
            raise OutOfRangeInput(f"{name}={m} outside [0, {n}]")
    r_bar = min(max(r_bar, 0.0), float(n))
    v_bar = min(max(v_bar, 0.0), float(n))
    upper = fraction_threshold(0.5, n)
    return BoundsReport(
        min_source_synergy_fraction=max(0.0, 1.0 - r_bar),
        min_proper_redundancy_fraction=_higher_order_min(r_bar, n),
        min_robustness_fraction=max(0.0, 1.0 - v_bar),
        min_vulnerability_fraction=_higher_order_min(v_bar, n),
        redundancy_predominant=r_bar > upper,
        synergy_predominant=r_bar < 0.5,
        robustness_predominant=v_bar < 0.5,
        vulnerability_predominant=v_bar > upper,
    )


@dataclass(frozen=True)
class InvariantReport:
    """All Shannon-invariant summaries of one distribution.

    ``r_bar``, ``v_bar`` and ``bounds`` are None when ``I(X;Y)`` is not above
    the ill-defined threshold; ``rsi`` and ``drsi`` are always set.
    """

    n_sources: int
    total_mi: float
    marginal_mi: list[float]
    conditional_mi: list[float]
    rsi: float
    drsi: float
    r_bar: float | None = None
    v_bar: float | None = None
    bounds: BoundsReport | None = None
    threshold: float = ILL_DEFINED_THRESHOLD

    @property
    def well_defined(self) -> bool:
        return self.r_bar is not None


def analyze(d: JointDistribution, threshold: float = ILL_DEFINED_THRESHOLD) -> InvariantReport:
    """Compute every invariant of ``d`` in one pass over the needed entropies."""
    n = d.n_sources
    i_total = total_mi(d)
    marg = marginal_mis(d)
    cond = conditional_mis(d)
    red, vul = sum(marg), sum(cond)
    report = dict(
        n_sources=n,
        total_mi=i_total,
        marginal_mi=marg,
        conditional_mi=cond,
        rsi=red - i_total,
        drsi=i_total - vul,
        threshold=threshold,
    )
    if i_total > threshold:
        r_bar, v_bar = red / i_total, vul / i_total
        report.update(r_bar=r_bar, v_bar=v_bar, bounds=interpret_bounds(r_bar, v_bar, n))
    return InvariantReport(**report)
