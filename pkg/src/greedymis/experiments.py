"""Seeded experiment harness.

Three experiment protocols over uniform G(n, m) graphs:

* failure: how often a greedy family member returns less than the true
  independence number (paired runs: all algorithms see the same graph),
* accuracy: the full distribution of the gap alpha(G) - A(G),
* workload: instrumentation counters for heuristic a versus heuristic b
  over an edge-count sweep, the raw material for work-ratio trends.

Every run of every cell derives its own seed from the experiment base
seed via :func:`greedymis.rng.derive_seed`, so any cell is independently
reproducible and reruns are byte-identical.
"""

from __future__ import annotations

import signal
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from math import log

from .engine import EngineConfig, run_greedy
from .exact import exact_mis
from .graph import random_gnm
from .heuristics import Heuristic
from .rng import derive_seed


def tau_edgeless(n: int, k: int) -> int:
    """Evaluation count sum((k+1) * C(i,k) * C(i,k+1) for i = 1..n), exactly.

    This is the total candidate-evaluation workload of the greedy family
    on an edgeless graph of order n with initial cardinality k.  Exact
    big-integer arithmetic; values overflow 64 bits well below n = 1000.
    """
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be >= 1, got n={n}, k={k}")
    total = 0
    c_k = 1  # C(i, k) at i = k
    c_k1 = 0  # C(i, k+1) at i = k
    for i in range(k, n + 1):
        total += c_k * c_k1
        c_k = c_k * (i + 1) // (i + 1 - k)
        c_k1 = 1 if i == k else c_k1 * (i + 1) // (i - k)
    return (k + 1) * total


def log_base(value: int, base: int) -> float | None:
    """log_base(value), or None when value is 0 (printed as undefined)."""
    if value == 0:
        return None
    return log(value) / log(base)


def density_grid(n: int, steps: int = 12) -> tuple[int, ...]:
    """Evenly spaced edge counts 1/steps .. steps/steps of C(n,2)."""
    npairs = n * (n - 1) // 2
    grid = sorted({max(1, j * npairs // steps) for j in range(1, steps + 1)})
    return tuple(grid)


@dataclass(frozen=True)
class AlgorithmSpec:
    """One family member: heuristic plus initial cardinality, e.g. a1 or b2."""

    heuristic: Heuristic
    k: int

    @property
    def name(self) -> str:
        return f"{self.heuristic.value}{self.k}"

    @classmethod
    def parse(cls, text: str) -> "AlgorithmSpec":
        text = text.strip().lower()
        if len(text) < 2 or text[0] not in ("a", "b") or not text[1:].isdigit():
            raise ValueError(f"bad algorithm name {text!r} (expected e.g. a1, b2)")
        return cls(Heuristic(text[0]), int(text[1:]))


def parse_algorithms(text: str) -> tuple[AlgorithmSpec, ...]:
    """Parse a comma-separated algorithm list such as ``a1,b1,a2,b2``."""
    specs = tuple(AlgorithmSpec.parse(part) for part in text.split(","))
    if len({s.name for s in specs}) != len(specs):
        raise ValueError(f"duplicate algorithm in {text!r}")
    return specs


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameter grid: cells are n_values crossed with the edge-count rule.

    ``m_rule`` is an explicit edge count, the string "4n" for the density
    rule m = 4n, or a tuple of edge counts (a sweep applied to every n).
    """

    n_values: tuple[int, ...]
    m_rule: int | str | tuple[int, ...]
    algorithms: tuple[AlgorithmSpec, ...]
    runs: int
    base_seed: int

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if not self.n_values:
            raise ValueError("n_values must be nonempty")
        if not self.algorithms:
            raise ValueError("algorithms must be nonempty")
        for n in self.n_values:
            if n < 4:
                raise ValueError(f"n must be >= 4, got {n}")
        if isinstance(self.m_rule, str) and self.m_rule != "4n":
            raise ValueError(f"unknown m rule {self.m_rule!r}")
        for n, m in self.cells():
            npairs = n * (n - 1) // 2
            if not 0 <= m <= npairs:
                raise ValueError(f"m={m} out of range for n={n} (max {npairs})")

    def edge_counts(self, n: int) -> tuple[int, ...]:
        if self.m_rule == "4n":
            return (4 * n,)
        if isinstance(self.m_rule, int):
            return (self.m_rule,)
        return tuple(self.m_rule)

    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple((n, m) for n in self.n_values for m in self.edge_counts(n))


class OracleTimeout(Exception):
    """The exact oracle exceeded its wall-clock budget for one run."""


@contextmanager
def time_limit(seconds: float | None):
    """Raise OracleTimeout after ``seconds`` of wall time (SIGALRM based)."""
    if seconds is None:
        yield
        return

    def _on_alarm(signum, frame):
        raise OracleTimeout()

    old = signal.signal(signal.SIGALRM, _on_alarm)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


@dataclass(frozen=True)
class FailureCell:
    n: int
    m: int
    runs: int  # counted runs; oracle timeouts are excluded
    failures: dict[str, int]
    oracle_timeouts: int = 0

    def ratio(self, algorithm: str) -> Fraction:
        if self.runs == 0:
            return Fraction(0)
        return Fraction(self.failures[algorithm], self.runs)


@dataclass(frozen=True)
class FailureReport:
    algorithms: tuple[str, ...]
    base_seed: int
    cells: tuple[FailureCell, ...]


@dataclass(frozen=True)
class AccuracyCell:
    n: int
    m: int
    runs: int
    gaps: dict[str, dict[int, int]]  # algorithm -> gap value -> count
    oracle_timeouts: int = 0

    def max_gap(self, algorithm: str) -> int:
        hist = self.gaps[algorithm]
        return max(hist) if hist else 0


@dataclass(frozen=True)
class AccuracyReport:
    algorithms: tuple[str, ...]
    base_seed: int
    cells: tuple[AccuracyCell, ...]

    def gap_counts(self, algorithm: str) -> dict[int, int]:
        merged: dict[int, int] = {}
        for cell in self.cells:
            for gap, count in cell.gaps[algorithm].items():
                merged[gap] = merged.get(gap, 0) + count
        return dict(sorted(merged.items()))


@dataclass(frozen=True)
class WorkloadCell:
    n: int
    m: int
    heuristic_evals: dict[str, int]  # max observed over the cell's runs
    adjacency_checks: dict[str, int]


@dataclass(frozen=True)
class WorkloadReport:
    algorithms: tuple[str, ...]
    base_seed: int
    cells: tuple[WorkloadCell, ...]

    def ratio_points(
        self, n: int, numerator: str = "b1", denominator: str = "a1"
    ) -> tuple[tuple[int, Fraction], ...]:
        """(m, adjacency-check ratio) pairs for one n, sorted by m."""
        pts = []
        for cell in self.cells:
            if cell.n != n:
                continue
            den = cell.adjacency_checks[denominator]
            if den:
                pts.append((cell.m, Fraction(cell.adjacency_checks[numerator], den)))
        return tuple(sorted(pts))

    def max_ratio(
        self, n: int, numerator: str = "b1", denominator: str = "a1"
    ) -> Fraction:
        """Maximum over the edge sweep of the per-cell work ratio."""
        pts = self.ratio_points(n, numerator, denominator)
        if not pts:
            raise ValueError(f"no cells with n={n}")
        return max(r for _, r in pts)

    def normalized_r(
        self, n: int, numerator: str = "b1", denominator: str = "a1"
    ) -> Fraction:
        """max_ratio / n: the scale factor R in (b work) = R * n * (a work)."""
        return self.max_ratio(n, numerator, denominator) / n


def _oracle_worker(args):
    """One paired run: alpha plus each algorithm's size on the same graph."""
    n, m, seed, algorithms, timeout = args
    g = random_gnm(n, m, seed)
    try:
        with time_limit(timeout):
            alpha = exact_mis(g).alpha
    except OracleTimeout:
        return None
    sizes = [run_greedy(g, EngineConfig(a.heuristic, a.k)).size for a in algorithms]
    return alpha, sizes


def _counter_worker(args):
    """One paired run: instrumentation counters per algorithm, no oracle."""
    n, m, seed, algorithms = args
    g = random_gnm(n, m, seed)
    out = []
    for a in algorithms:
        res = run_greedy(g, EngineConfig(a.heuristic, a.k))
        out.append((res.stats.heuristic_evals, res.stats.adjacency_checks))
    return out


def _map_runs(worker, argslist, jobs: int):
    if jobs <= 1:
        return [worker(a) for a in argslist]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(argslist) // (jobs * 8))
        return list(pool.map(worker, argslist, chunksize=chunk))


def run_failure_experiment(
    cfg: ExperimentConfig, *, jobs: int = 1, oracle_timeout: float | None = None
) -> FailureReport:
    """Count runs where a greedy size falls below alpha, per cell and algorithm."""
    names = tuple(a.name for a in cfg.algorithms)
    cells = []
    for n, m in cfg.cells():
        args = [
            (n, m, derive_seed(cfg.base_seed, n, m, r), cfg.algorithms, oracle_timeout)
            for r in range(cfg.runs)
        ]
        counts = dict.fromkeys(names, 0)
        counted = 0
        timeouts = 0
        for result in _map_runs(_oracle_worker, args, jobs):
            if result is None:
                timeouts += 1
                continue
            counted += 1
            alpha, sizes = result
            for name, size in zip(names, sizes):
                if size < alpha:
                    counts[name] += 1
        cells.append(FailureCell(n, m, counted, counts, timeouts))
    return FailureReport(names, cfg.base_seed, tuple(cells))


def run_accuracy_experiment(
    cfg: ExperimentConfig, *, jobs: int = 1, oracle_timeout: float | None = None
) -> AccuracyReport:
    """Record the full alpha - A(G) gap histogram, per cell and algorithm."""
    names = tuple(a.name for a in cfg.algorithms)
    cells = []
    for n, m in cfg.cells():
        args = [
            (n, m, derive_seed(cfg.base_seed, n, m, r), cfg.algorithms, oracle_timeout)
            for r in range(cfg.runs)
        ]
        hists: dict[str, dict[int, int]] = {name: {} for name in names}
        counted = 0
        timeouts = 0
        for result in _map_runs(_oracle_worker, args, jobs):
            if result is None:
                timeouts += 1
                continue
            counted += 1
            alpha, sizes = result
            for name, size in zip(names, sizes):
                gap = alpha - size
                hists[name][gap] = hists[name].get(gap, 0) + 1
        cells.append(AccuracyCell(n, m, counted, hists, timeouts))
    return AccuracyReport(names, cfg.base_seed, tuple(cells))


def run_workload_experiment(
    cfg: ExperimentConfig, *, jobs: int = 1
) -> WorkloadReport:
    """Measure per-algorithm instrumentation counters over the (n, m) grid.

    Each cell records the maximum over its runs, i.e. the worst observed
    work; with runs = 1 this is simply the counter value.
    """
    names = tuple(a.name for a in cfg.algorithms)
    cells = []
    for n, m in cfg.cells():
        args = [
            (n, m, derive_seed(cfg.base_seed, n, m, r), cfg.algorithms)
            for r in range(cfg.runs)
        ]
        evals = dict.fromkeys(names, 0)
        checks = dict.fromkeys(names, 0)
        for result in _map_runs(_counter_worker, args, jobs):
            for name, (ev, ch) in zip(names, result):
                evals[name] = max(evals[name], ev)
                checks[name] = max(checks[name], ch)
        cells.append(WorkloadCell(n, m, evals, checks))
    return WorkloadReport(names, cfg.base_seed, tuple(cells))


def emit_csv(report: FailureReport | AccuracyReport | WorkloadReport) -> bytes:
    """Render a report as CSV (header row, UTF-8, LF line ends)."""
    if isinstance(report, FailureReport):
        lines = ["n,m,runs,algorithm,failures,ratio"]
        for cell in report.cells:
            for name in report.algorithms:
                f = cell.failures[name]
                ratio = str(f / cell.runs) if cell.runs else ""
                lines.append(f"{cell.n},{cell.m},{cell.runs},{name},{f},{ratio}")
    elif isinstance(report, AccuracyReport):
        lines = ["n,m,runs,algorithm,gap,count"]
        for cell in report.cells:
            for name in report.algorithms:
                for gap in sorted(cell.gaps[name]):
                    count = cell.gaps[name][gap]
                    lines.append(f"{cell.n},{cell.m},{cell.runs},{name},{gap},{count}")
    elif isinstance(report, WorkloadReport):
        lines = ["n,m,algorithm,heuristic_evals,adjacency_checks"]
        for cell in report.cells:
            for name in report.algorithms:
                lines.append(
                    f"{cell.n},{cell.m},{name},"
                    f"{cell.heuristic_evals[name]},{cell.adjacency_checks[name]}"
                )
    else:
        raise TypeError(f"unsupported report type {type(report).__name__}")
    return ("\n".join(lines) + "\n").encode("utf-8")


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def emit_plot(
    report: WorkloadReport, numerator: str = "b1", denominator: str = "a1"
) -> bytes:
    """Self-contained SVG: work ratio versus edge count, one polyline per n.

    Hand-rolled so identical reports yield byte-identical files.
    """
    width, height = 640, 440
    left, right, top, bottom = 62.0, 18.0, 18.0, 48.0
    plot_w = width - left - right
    plot_h = height - top - bottom

    ns = sorted({cell.n for cell in report.cells})
    series = {n: report.ratio_points(n, numerator, denominator) for n in ns}
    xs = [m for pts in series.values() for m, _ in pts]
    ys = [float(r) for pts in series.values() for _, r in pts]
    x_lo, x_hi = (min(xs), max(xs)) if xs else (0.0, 1.0)
    y_lo, y_hi = (0.0, max(ys)) if ys else (0.0, 1.0)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0

    def sx(x: float) -> float:
        return left + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return top + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left:.2f}" y="{top:.2f}" width="{plot_w:.2f}" height="{plot_h:.2f}" '
        'fill="none" stroke="black"/>',
    ]
    for i in range(5):
        fx = x_lo + (x_hi - x_lo) * i / 4
        fy = y_lo + (y_hi - y_lo) * i / 4
        px, py = sx(fx), sy(fy)
        parts.append(
            f'<line x1="{px:.2f}" y1="{top + plot_h:.2f}" x2="{px:.2f}" '
            f'y2="{top + plot_h + 5:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{top + plot_h + 18:.2f}" '
            f'text-anchor="middle">{fx:g}</text>'
        )
        parts.append(
            f'<line x1="{left - 5:.2f}" y1="{py:.2f}" x2="{left:.2f}" '
            f'y2="{py:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{left - 8:.2f}" y="{py + 4:.2f}" text-anchor="end">{fy:.3g}</text>'
        )
    parts.append(
        f'<text x="{left + plot_w / 2:.2f}" y="{height - 10:.2f}" '
        'text-anchor="middle">m (edge count)</text>'
    )
    parts.append(
        f'<text x="14" y="{top + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 14 {top + plot_h / 2:.2f})">'
        f"{numerator}/{denominator} adjacency checks</text>"
    )
    for i, n in enumerate(ns):
        color = _PALETTE[i % len(_PALETTE)]
        pts = series[n]
        if pts:
            coords = " ".join(f"{sx(m):.2f},{sy(float(r)):.2f}" for m, r in pts)
            parts.append(
                f'<polyline points="{coords}" fill="none" stroke="{color}" '
                'stroke-width="1.5"/>'
            )
            for m, r in pts:
                parts.append(
                    f'<circle cx="{sx(m):.2f}" cy="{sy(float(r)):.2f}" r="2.5" '
                    f'fill="{color}"/>'
                )
        parts.append(
            f'<text x="{left + plot_w - 6:.2f}" y="{top + 16 + 16 * i:.2f}" '
            f'text-anchor="end" fill="{color}">n={n}</text>'
        )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")
