"""Quantise a synthetic tanh layer and summarise how its neurons share label information."""
import numpy as np

from shannon_invariants import QuantizerConfig, analyze, from_samples, quantize_table

rng = np.random.default_rng(0)
rows, neurons, classes = 20_000, 8, 4
labels = rng.integers(0, classes, size=rows)
act = np.tanh(rng.normal(size=(classes, neurons))[labels] + 0.8 * rng.normal(size=(rows, neurons)))

cfg = QuantizerConfig(-1.0, 1.0, n_levels=8, seed=42)
print("grid step", cfg.step, "levels", np.round(cfg.levels, 4))

for width in (2, 4, 8):
    table = quantize_table(act[:, :width], cfg, labels.tolist())
    r = analyze(from_samples(table))
    print(f"{width} neurons: I={r.total_mi:.3f} bits  r_bar={r.r_bar:.3f}  v_bar={r.v_bar:.3f}")
