"""Independent reference computations used only by the tests.

None of these share code with the package: entropies are plug-in sums over
Python dicts, antichains are found by filtering every family of subsets.
"""
import itertools
import math
from collections import Counter, defaultdict


def h(*ps):
    return -math.fsum(p * math.log2(p) for p in ps if p > 0)


def marginal_dict(pmf, idx):
    out = defaultdict(float)
    for k, p in pmf.items():
        out[tuple(k[i] for i in idx)] += p
    return out


def entropy_dict(pmf, idx):
    return h(*marginal_dict(pmf, idx).values())


def mi_dict(pmf, a, b):
    a, b = tuple(a), tuple(b)
    return entropy_dict(pmf, a) + entropy_dict(pmf, b) - entropy_dict(pmf, a + b)


def cmi_dict(pmf, a, b, c):
    """I(a;b|c) as H(a|c) - H(a|b,c), written with conditional entropies."""
    a, b, c = tuple(a), tuple(b), tuple(c)
    h_a_given_c = entropy_dict(pmf, a + c) - entropy_dict(pmf, c) if c else entropy_dict(pmf, a)
    h_a_given_bc = entropy_dict(pmf, a + b + c) - entropy_dict(pmf, b + c)
    return h_a_given_c - h_a_given_bc


def counts_entropy(rows):
    """Plug-in entropy of the empirical distribution of hashable rows."""
    c = Counter(rows)
    total = sum(c.values())
    return h(*(v / total for v in c.values()))


def brute_antichains(n):
    """All nonempty antichains, as frozensets of frozensets, by filtering all families."""
    subsets = [frozenset(s) for r in range(1, n + 1) for s in itertools.combinations(range(1, n + 1), r)]
    out = []
    for fam in range(1, 1 << len(subsets)):
        chosen = [subsets[i] for i in range(len(subsets)) if fam >> i & 1]
        if all(not (a <= b or b <= a) for a, b in itertools.combinations(chosen, 2)):
            out.append(frozenset(chosen))
    return out


def monotone_functions(n):
    """All monotone Boolean functions on n inputs, as truth tables (ints)."""
    points = range(1 << n)
    below = [(x, y) for x in points for y in points if x != y and x & y == x]
    return [f for f in range(1 << (1 << n)) if all(not (f >> x & 1) or f >> y & 1 for x, y in below)]


def antichain_count_via_dedekind(n):
    """Nonempty antichains of nonempty subsets of [n], via M(n) = #{f <= g in M(n-1)}.

    Subtracts the two monotone functions (constant 0 and constant 1) that
    correspond to the empty antichain and to the antichain {{}}.
    """
    fs = monotone_functions(n - 1)
    pairs = sum(1 for f in fs for g in fs if f & g == f)
    return pairs - 2


XOR = {(0, 0, 0): 0.25, (0, 1, 1): 0.25, (1, 0, 1): 0.25, (1, 1, 0): 0.25}
COPY = {(0, 0, 0): 0.5, (1, 1, 1): 0.5}
AND = {(0, 0, 0): 0.25, (0, 1, 0): 0.25, (1, 0, 0): 0.25, (1, 1, 1): 0.25}

# closed forms for the AND gate with uniform inputs
H_AND = h(0.75, 0.25)
AND_MARGINAL_MI = H_AND - 0.5  # I(X1;Y): H(Y) - H(Y|X1), H(Y|X1) = 1/2 * h(1/2)
AND_CMI = 0.5  # I(X2;Y|X1): only x1 = 1 leaves Y undetermined, then Y = X2
AND_R_BAR = 2 * AND_MARGINAL_MI / H_AND
AND_V_BAR = 2 * AND_CMI / H_AND
