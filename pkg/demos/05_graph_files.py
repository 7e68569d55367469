#!/usr/bin/env python3
"""Graph file round trips and the accuracy-gap protocol.

Writes a seeded graph in the edge-list text format (1-based DIMACS-style
ids), reads it back, and feeds it through both solvers.  Then runs a
small accuracy sweep showing the full distribution of alpha(G) - A(G):
failures are almost always off by exactly one vertex.
"""

from pathlib import Path

import greedymis as gm

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

g = gm.random_gnm(18, 72, seed=11)
path = OUT / "g_18_72.col"
path.write_bytes(gm.write_graph(g))
print(f"wrote {path} ({path.stat().st_size} bytes)")
print("first lines:")
for line in path.read_text().splitlines()[:4]:
    print(f"  {line}")

back = gm.read_graph(path.read_bytes())
assert back == g
print(f"round trip ok: n={back.n}, m={back.m}")

alpha = gm.exact_mis(back).alpha
size = gm.run_greedy(back, gm.EngineConfig(gm.Heuristic.A, 1)).size
print(f"exact alpha={alpha}, greedy a1 size={size}")

print("\naccuracy sweep (m = 4n, 300 paired runs per n):")
cfg = gm.ExperimentConfig(
    n_values=(20, 26, 32),
    m_rule="4n",
    algorithms=gm.parse_algorithms("a1,b1"),
    runs=300,
    base_seed=99,
)
report = gm.run_accuracy_experiment(cfg, jobs=2)
for cell in report.cells:
    for name in report.algorithms:
        hist = ", ".join(f"gap {g}: {c}" for g, c in sorted(cell.gaps[name].items()))
        print(f"  n={cell.n} {name}: {hist}")
print("\ngaps are never negative (the greedy answer is a real independent")
print("set) and rarely exceed 1 at these sizes.")
