#!/usr/bin/env python3
"""Desk-scale failure-ratio sweep.

For each n the harness draws seeded G(n, 4n) graphs, computes the exact
independence number, runs the configured family members on the same
graph (paired comparison), and reports how often each member falls
short.  The simplest member a1 starts failing as n grows, k=2 members
stay exact far longer.

At this scale (500 runs per cell) expect the a1 column to show a few
failures per thousand around n=30: run with more RUNS for tighter
estimates.
"""

import greedymis as gm

RUNS = 500
ALGOS = "a1,b1,a2,b2"

cfg = gm.ExperimentConfig(
    n_values=(16, 20, 24, 28, 32),
    m_rule="4n",
    algorithms=gm.parse_algorithms(ALGOS),
    runs=RUNS,
    base_seed=2015,
)
print(f"runs per cell: {RUNS}, edge rule: m = 4n, base seed {cfg.base_seed}")
report = gm.run_failure_experiment(cfg, jobs=2)

names = report.algorithms
print(f"\n{'n':>4} {'m':>5} {'runs':>6}", end="")
for name in names:
    print(f" {name:>9}", end="")
print()
for cell in report.cells:
    print(f"{cell.n:>4} {cell.m:>5} {cell.runs:>6}", end="")
    for name in names:
        print(f" {float(cell.ratio(name)):>9.5f}", end="")
    print()

csv_bytes = gm.emit_csv(report)
print(f"\nCSV ({len(csv_bytes)} bytes) is byte-stable for this config; first rows:")
for line in csv_bytes.decode().splitlines()[:4]:
    print(f"  {line}")
