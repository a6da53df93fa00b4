"""Check the invariant identities and bounds against an explicit I_min decomposition."""
import numpy as np

from shannon_invariants import analyze, atoms_moebius
from shannon_invariants.dist import random_distribution
from shannon_invariants.pid_oracle import run_certificates

rng = np.random.default_rng(3)
d = random_distribution(rng, 3, max_alphabet=3)
table = atoms_moebius(d)
print("atoms of one random three-source system (bits):")
print(table.to_text())
print("sum of atoms", table.total(), " I(X;Y)", analyze(d).total_mi)

for n in (2, 3):
    run = run_certificates(n, trials=200, seed=11)
    print(f"\nn={n}, 200 random systems")
    print(run.summary(1e-9))
