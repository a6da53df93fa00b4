"""Invariants of four two-input systems: XOR (pure synergy), COPY (one bit seen twice), PAIR and AND."""
from shannon_invariants import JointDistribution, analyze

gates = {
    "XOR": {(a, b, a ^ b): 0.25 for a in (0, 1) for b in (0, 1)},
    "COPY": {(a, a, a): 0.5 for a in (0, 1)},
    # Y copies both independent inputs: no redundancy and no synergy
    "PAIR": {(a, b, (a, b)): 0.25 for a in (0, 1) for b in (0, 1)},
    "AND": {(a, b, a & b): 0.25 for a in (0, 1) for b in (0, 1)},
}

print(f"{'gate':6}{'I(X;Y)':>10}{'r_bar':>10}{'v_bar':>10}{'RSI':>10}{'DRSI':>10}")
for name, pmf in gates.items():
    r = analyze(JointDistribution.from_pmf(pmf))
    print(f"{name:6}{r.total_mi:10.4f}{r.r_bar:10.4f}{r.v_bar:10.4f}{r.rsi:10.4f}{r.drsi:10.4f}")

# r_bar + v_bar = 2 for any two-source system, since RSI = DRSI there
r = analyze(JointDistribution.from_pmf(gates["AND"]))
print("\nAND bounds:", r.bounds.to_dict())
