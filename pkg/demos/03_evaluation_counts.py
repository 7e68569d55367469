#!/usr/bin/env python3
"""The edgeless-graph evaluation-count formula.

On an edgeless graph of order n, a run seeded with all independent
k-subsets performs a predictable total number of candidate evaluations:

    tau(n, k) = sum over i = 1..n of (k+1) * C(i, k) * C(i, k+1)

The table below prints log_n(tau) for a range of n and k (a dash marks
tau = 0: no (k+1)-subsets exist).  The numbers are exact big integers;
only the displayed log form is floating point.  The second part checks
the k=1 instrumentation of an actual run against its closed form.
"""

import greedymis as gm

KS = range(1, 11)
NS = (10, 20, 30, 40, 50, 75, 100, 1000, 10_000)

print(f"{'n':>7} |", " ".join(f"{f'k={k}':>6}" for k in KS))
print("-" * 80)
for n in NS:
    cells = []
    for k in KS:
        lg = gm.log_base(gm.tau_edgeless(n, k), n)
        cells.append("     -" if lg is None else f"{lg:>6.2f}")
    print(f"{n:>7} |", " ".join(cells))

print("\nexact values for n=10:",
      ", ".join(f"tau(10,{k})={gm.tau_edgeless(10, k)}" for k in (1, 2, 9, 10)))

# The engine deduplicates each round, so an actual edgeless k=1 run keeps
# n-c+1 sets at cardinality c (all ties resolve toward low ids) and makes
# (n-c+1)*(n-c) evaluations per round, totalling (n-1)n(n+1)/3.  tau(n, k)
# counts the un-deduplicated family and is intentionally much larger.
n = 12
res = gm.run_greedy(gm.Graph(n), gm.EngineConfig(gm.Heuristic.A, 1))
dedup_total = (n - 1) * n * (n + 1) // 3
print(f"\nedgeless n={n}, k=1 run: heuristic_evals={res.stats.heuristic_evals} "
      f"= (n-1)n(n+1)/3 = {dedup_total}; tau({n},1) = {gm.tau_edgeless(n, 1)}")
assert res.stats.heuristic_evals == dedup_total
