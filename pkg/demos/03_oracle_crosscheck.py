"""Cross-check the fast solver against the brute-force oracle.

The fast path grids only the b-sphere and maximizes over a exactly through
the rank-2 eigenvalue formula; the oracle grinds through all four
measurement angles (~7.7M objective evaluations at the default 5 degree
step) and never touches the reduction. Agreement on random states is the
strongest correctness evidence the package ships.
"""

import time

import numpy as np

from ggqd import StateFamilySpec, brute_force_oracle, generate_state, maximize_objective, pauli_decompose

print(f"{'seed':>4} {'f_max fast':>14} {'f_max oracle':>14} {'gap':>10} {'fast ms':>8} {'oracle ms':>10}")
worst = 0.0
for seed in range(12):
    rho = generate_state(StateFamilySpec("random", seed=seed))
    corr = pauli_decompose(rho)
    t0 = time.perf_counter()
    f_fast = maximize_objective(corr)[0]
    t1 = time.perf_counter()
    f_oracle = brute_force_oracle(corr)
    t2 = time.perf_counter()
    gap = abs(f_fast - f_oracle)
    worst = max(worst, gap)
    print(f"{seed:4d} {f_fast:14.10f} {f_oracle:14.10f} {gap:10.1e} "
          f"{(t1 - t0) * 1e3:8.1f} {(t2 - t1) * 1e3:10.1f}")

print(f"\nworst gap: {worst:.2e} (the acceptance bound is 5e-4; typical gaps sit at rounding level)")
