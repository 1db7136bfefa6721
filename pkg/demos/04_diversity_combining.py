"""Receive-diversity combining over seeded Rayleigh draws.

Selection picks the best branch, maximal-ratio sums the branch SNRs, and
equal-gain co-phases with unit weights. MRC dominates the other two on every
draw; EGC vs selection has no fixed order.

Run: python3 demos/04_diversity_combining.py
"""

import numpy as np

from mimocap import (
    AntennaConfig,
    Bandwidth,
    BranchSet,
    CombinerKind,
    chunk_rng,
    combined_capacity,
    draw_channel,
)

b = Bandwidth(1.0)
draws = 20_000

for n_branches in (2, 4):
    rng = chunk_rng(seed=11, chunk_index=n_branches)
    totals = {kind: 0.0 for kind in CombinerKind}
    for _ in range(draws):
        h = draw_channel(AntennaConfig(1, n_branches), rng)
        branches = BranchSet(tuple(np.abs(h.gains[:, 0])), noise_power=1.0)
        for kind in CombinerKind:
            totals[kind] += combined_capacity(kind, branches, b).bits_per_second
    print(f"{n_branches} branches, mean capacity over {draws} draws:")
    for kind in CombinerKind:
        print(f"  {kind.value:<14} {totals[kind] / draws:.4f} bit/s/Hz")
    print()
