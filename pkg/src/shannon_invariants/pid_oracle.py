"""
Brute-force reference decomposition for small systems (n <= 4).

Redundancy is measured by the minimum specific information ``I_min``:
for each target outcome ``y`` the least informative collection in the
antichain determines the redundant part, averaged over ``p(y)``. Atoms are
obtained by inverting ``I_cap(alpha) = sum_{beta <= alpha} Pi(beta)`` in
lattice order. This measure yields non-negative atoms, which makes it usable
for checking the bound statements as well as the exact identities.

Nothing in the production path depends on this module; it exists to check
that the entropy-only invariants agree with an explicit decomposition.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import infomeasures as im
from . import invariants as inv
from .dist import JointDistribution, random_distribution
from .errors import OutOfRangeK, UnsupportedSize, ZeroProbabilityTarget
from .lattice import (
    Antichain,
    _lattice,
    degree_redundancy,
    degree_vulnerability,
    enumerate_antichains,
)

__all__ = [
    "MAX_ORACLE_SOURCES",
    "AtomTable",
    "specific_information",
    "imin",
    "atoms_moebius",
    "k_redundant_information",
    "k_vulnerable_information",
    "certificate_residuals",
    "run_certificates",
    "CERTIFICATES",
]

MAX_ORACLE_SOURCES = 4


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_ORACLE_SOURCES:
        raise UnsupportedSize(f"the oracle supports 1 <= n <= {MAX_ORACLE_SOURCES}, got {n}")


def _mask(a: Iterable[int], n: int) -> int:
    m = 0
    for i in a:
        if not 0 <= i < n:
            raise IndexError(f"source {i} outside 0..{n - 1}")
        m |= 1 << i
    return m


def _specific_info_table(d: JointDistribution) -> tuple[np.ndarray, np.ndarray]:
    """Specific information for every nonempty source mask and target symbol.

    Returns ``(sinfo, p_y)`` with ``sinfo[mask, y]`` in bits (row 0 unused).
    """
    n = d.n_sources
    P = d.dense()
    p_y = P.sum(axis=tuple(range(n)))
    sinfo = np.zeros((1 << n, P.shape[-1]))
    with np.errstate(divide="ignore", invalid="ignore"):
        for m in range(1, 1 << n):
            drop = tuple(i for i in range(n) if not m >> i & 1)
            p_ay = P.sum(axis=drop) if drop else P
            p_a = p_ay.sum(axis=-1, keepdims=True)
            ratio = p_ay / (p_a * p_y)
            terms = np.where(p_ay > 0, p_ay * np.log2(ratio), 0.0)
            per_y = terms.reshape(-1, P.shape[-1]).sum(axis=0)
            sinfo[m] = np.where(p_y > 0, per_y / p_y, 0.0)
    return sinfo, p_y


def specific_information(d: JointDistribution, a: Iterable[int], y) -> float:
    """Information that sources ``a`` carry about the particular outcome ``Y = y``.

    ``sum_{x_a} p(x_a|y) [log2 p(y|x_a) - log2 p(y)]``. ``a`` holds 0-based
    source indices and ``y`` is a target label.
    """
    _check_n(d.n_sources)
    m = _mask(a, d.n_sources)
    if m == 0:
        raise ValueError("source subset must be nonempty")
    labels = d.alphabets[d.target]
    if y not in labels:
        raise ZeroProbabilityTarget(f"target symbol {y!r} has zero probability")
    j = labels.index(y)
    sinfo, p_y = _specific_info_table(d)
    if p_y[j] <= 0:
        raise ZeroProbabilityTarget(f"target symbol {y!r} has zero probability")
    return float(sinfo[m, j])


def _imin_from_table(alpha: Antichain, sinfo: np.ndarray, p_y: np.ndarray) -> float:
    per_y = np.min(sinfo[list(alpha.sets)], axis=0)
    return float(np.dot(p_y, per_y))


def imin(d: JointDistribution, alpha: Antichain) -> float:
    """Redundant information ``I_cap(alpha; Y)`` under the minimum-specific-information measure."""
    _check_n(d.n_sources)
    if alpha.n != d.n_sources:
        raise ValueError(f"antichain is for n={alpha.n}, distribution has n={d.n_sources}")
    return _imin_from_table(alpha, *_specific_info_table(d))


@dataclass(frozen=True)
class AtomTable:
    """Atom values keyed by canonical antichain strings, in lattice order."""

    n: int
    atoms: Mapping[str, float]
    redundancies: Mapping[str, float] = field(default_factory=dict, compare=False)

    def __getitem__(self, alpha) -> float:
        return self.atoms[str(alpha)]

    def antichains(self) -> list[Antichain]:
        return [Antichain.parse(k, self.n) for k in self.atoms]

    def total(self) -> float:
        return math.fsum(self.atoms.values())

    def to_text(self) -> str:
        """Two tab-separated columns: antichain, value in bits to 12 significant digits."""
        return "".join(f"{k}\t{v:.12g}\n" for k, v in self.atoms.items())

    @classmethod
    def from_text(cls, text: str, n: int) -> "AtomTable":
        atoms = {}
        for line in text.splitlines():
            if line.strip():
                k, v = line.split("\t")
                atoms[str(Antichain.parse(k, n))] = float(v)
        return cls(n, atoms)


def atoms_moebius(d: JointDistribution) -> AtomTable:
    """Atoms of the ``I_min`` decomposition by Moebius inversion down the lattice."""
    n = d.n_sources
    _check_n(n)
    lat = _lattice(n)
    sinfo, p_y = _specific_info_table(d)
    red = np.array([_imin_from_table(a, sinfo, p_y) for a in lat.antichains])
    pi = np.zeros_like(red)
    # lattice order is a linear extension: predecessors are already final
    for i in range(len(red)):
        below = lat.down_indices(i)
        pi[i] = red[i] - pi[below[below != i]].sum()
    keys = [str(a) for a in lat.antichains]
    return AtomTable(n, dict(zip(keys, pi.tolist())), dict(zip(keys, red.tolist())))


def _k_information(t: AtomTable, k: int, degree) -> float:
    if not 0 <= k <= t.n:
        raise OutOfRangeK(f"k={k} outside 0..{t.n}")
    return math.fsum(v for a, v in zip(t.antichains(), t.atoms.values()) if degree(a) == k)


def k_redundant_information(t: AtomTable, k: int) -> float:
    """Total atom mass accessible through exactly ``k`` single sources."""
    return _k_information(t, k, degree_redundancy)


def k_vulnerable_information(t: AtomTable, k: int) -> float:
    """Total atom mass that critically depends on exactly ``k`` sources."""
    return _k_information(t, k, degree_vulnerability)


# -- certificates ------------------------------------------------------------

CERTIFICATES = (
    "atom_sum",
    "atom_nonnegativity",
    "redundancy_sum",
    "vulnerability_sum",
    "rsi_atoms",
    "drsi_atoms",
    "rsi_corollary",
    "drsi_corollary",
    "rsi_equals_drsi_n2",
    "robust_covers_redundant",
    "synergy_covers_vulnerable",
    "source_synergy_bound",
    "robustness_bound",
    "proper_redundancy_bound",
    "higher_vulnerability_bound",
    "lambda_threshold",
    "consistency_mi",
    "consistency_cmi",
)

COROLLARY_MIN_MI = 1e-6
LAMBDAS = (0.25, 0.5, 0.75)


def certificate_residuals(d: JointDistribution, table: AtomTable | None = None) -> dict[str, float]:
    """Residual of every certificate on one distribution.

    Identities report ``|lhs - rhs|``; inequalities report the violation
    ``max(0, rhs - lhs)``. Checks that need ``I(X;Y) > 0`` report 0 when it
    is not (they are vacuous there).
    """
    n = d.n_sources
    t = atoms_moebius(d) if table is None else table
    chains = t.antichains()
    values = list(t.atoms.values())
    I = inv.total_mi(d)
    marg, cond = inv.marginal_mis(d), inv.conditional_mis(d)
    R, V = math.fsum(marg), math.fsum(cond)
    Ir = [k_redundant_information(t, k) for k in range(n + 1)]
    Iv = [k_vulnerable_information(t, k) for k in range(n + 1)]
    rsi, drsi = R - I, I - V

    res = dict.fromkeys(CERTIFICATES, 0.0)
    res["atom_sum"] = abs(t.total() - I)
    res["atom_nonnegativity"] = max(0.0, -min(values))
    res["redundancy_sum"] = abs(math.fsum(k * Ir[k] for k in range(n + 1)) - R)
    res["vulnerability_sum"] = abs(math.fsum(k * Iv[k] for k in range(n + 1)) - V)
    res["rsi_atoms"] = abs(rsi - (math.fsum((k - 1) * Ir[k] for k in range(2, n + 1)) - Ir[0]))
    res["drsi_atoms"] = abs(drsi - (Iv[0] - math.fsum((k - 1) * Iv[k] for k in range(2, n + 1))))
    if n == 2:
        res["rsi_equals_drsi_n2"] = abs(rsi - drsi)
    res["robust_covers_redundant"] = max(0.0, math.fsum(Ir[2:]) - Iv[0])
    res["synergy_covers_vulnerable"] = max(0.0, math.fsum(Iv[2:]) - Ir[0])

    if I > COROLLARY_MIN_MI:
        r_bar, v_bar = R / I, V / I
        res["rsi_corollary"] = abs(rsi - (r_bar - 1) * I)
        res["drsi_corollary"] = abs(drsi - (1 - v_bar) * I)
    if I > inv.ILL_DEFINED_THRESHOLD:
        r_bar, v_bar = R / I, V / I
        res["source_synergy_bound"] = max(0.0, (1 - r_bar) - Ir[0] / I)
        res["robustness_bound"] = max(0.0, (1 - v_bar) - Iv[0] / I)
        if n >= 2:
            high_r, high_v = math.fsum(Ir[2:]) / I, math.fsum(Iv[2:]) / I
            res["proper_redundancy_bound"] = max(0.0, (r_bar - 1) / (n - 1) - high_r)
            res["higher_vulnerability_bound"] = max(0.0, (v_bar - 1) / (n - 1) - high_v)
            res["lambda_threshold"] = _lambda_violation(r_bar, v_bar, high_r, high_v, n)

    mi_err = cmi_err = 0.0
    ups = [a.up_mask for a in chains]
    full = (1 << n) - 1
    for m in range(0, 1 << n):
        inside = math.fsum(v for u, v in zip(ups, values) if u >> m & 1)
        outside = math.fsum(v for u, v in zip(ups, values) if not u >> m & 1)
        a = [i for i in range(n) if m >> i & 1]
        comp = [i for i in range(n) if not m >> i & 1]
        if m:
            mi_err = max(mi_err, abs(im.mutual_information(d, a) - inside))
        if m != full:
            cmi_err = max(cmi_err, abs(im.conditional_mi(d, comp, a) - outside))
    res["consistency_mi"] = mi_err
    res["consistency_cmi"] = cmi_err
    return res


def _lambda_violation(r_bar, v_bar, high_r, high_v, n) -> float:
    """How far the threshold statement fails, over the checked lambdas.

    For each lambda both sides of ``(m - 1)/(n - 1) > lam  <=>  m > lam*n + 1 - lam``
    are evaluated directly, and a measure above the threshold must come with
    an atom fraction above lambda.
    """
    worst = 0.0
    for lam in LAMBDAS:
        for m, frac in ((r_bar, high_r), (v_bar, high_v)):
            lhs = (m - 1) / (n - 1) > lam
            rhs = inv.exceeds_fraction(m, lam, n)
            if lhs != rhs and abs(m - inv.fraction_threshold(lam, n)) > 1e-12:
                worst = max(worst, abs(m - inv.fraction_threshold(lam, n)))
            if rhs:
                worst = max(worst, lam - frac)
    return max(worst, 0.0)


@dataclass
class CertificateRun:
    n: int
    trials: int
    seed: int
    max_residuals: dict[str, float]

    def passed(self, tolerance: float) -> bool:
        return all(v < tolerance for v in self.max_residuals.values())

    def summary(self, tolerance: float) -> str:
        lines = [f"# oracle certificates: n={self.n} trials={self.trials} seed={self.seed} tol={tolerance:g}"]
        for name, v in self.max_residuals.items():
            lines.append(f"{'PASS' if v < tolerance else 'FAIL'}\t{name}\t{v:.3e}")
        return "\n".join(lines) + "\n"


def run_certificates(n: int, trials: int, seed: int, max_alphabet: int = 4) -> CertificateRun:
    """Max residual of each certificate over ``trials`` seeded random distributions."""
    _check_n(n)
    rng = np.random.default_rng(seed)
    worst = dict.fromkeys(CERTIFICATES, 0.0)
    for _ in range(trials):
        d = random_distribution(rng, n, max_alphabet=max_alphabet)
        for k, v in certificate_residuals(d).items():
            worst[k] = max(worst[k], v)
    return CertificateRun(n, trials, seed, worst)
