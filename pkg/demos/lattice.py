"""The redundancy lattice: antichain counts and the degrees of redundancy and vulnerability."""
from shannon_invariants import enumerate_antichains
from shannon_invariants.lattice import degree_histograms, down_set, render_lattice

for n in range(1, 6):
    print(f"n={n}: {len(enumerate_antichains(n))} antichains")

print()
print(render_lattice(3))

r_hist, v_hist = degree_histograms(3)
print("r-degree histogram", r_hist)
print("v-degree histogram", v_hist)

a = enumerate_antichains(3)[3]
print(f"\ndown-set of {a}:", ", ".join(str(b) for b in down_set(a)))
