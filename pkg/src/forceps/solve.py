"""Exact leak-robust forcing numbers and the audits built on them.

The solver is exhaustive and certified: per connected component it seeds
the candidate core with every vertex of degree at most ell (any of those
can be stranded by leaking its whole neighborhood, so they belong to every
valid set), raises the lower bound with the value at ell-1 and a greedy
packing of disjoint forts, then scans k-supersets of the core in
lexicographic order until one survives every leak placement.  Disconnected
graphs are solved per component at the full leak budget (the adversary may
concentrate all leaks in one component) and the answers are summed.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product as iter_product
from math import comb
from typing import Iterable, Iterator

from . import _core
from .errors import AuditFailure
from .families import FamilySpec, generate
from .forcing import Rule
from .forts import fort_from_failure
from .graph6 import to_graph6
from .graphs import Graph, VertexSet, cartesian_product, connected_components, delete_edge, induced_subgraph

log = logging.getLogger("forceps")

_PARALLEL_MIN_CANDIDATES = 1 << 14


@dataclass(frozen=True)
class SolveStats:
    """Work counters: candidate sets tested and closures computed."""

    nodes: int = 0
    leak_checks: int = 0

    def __add__(self, other: "SolveStats") -> "SolveStats":
        return SolveStats(self.nodes + other.nodes, self.leak_checks + other.leak_checks)


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet
    forced_core: VertexSet
    rule: Rule
    ell: int
    stats: SolveStats


@dataclass(frozen=True)
class ScanRecord:
    graph6: str
    edge: tuple[int, int]
    value_g: int
    value_g_minus_e: int

    @property
    def diff(self) -> int:
        return self.value_g - self.value_g_minus_e


@dataclass(frozen=True)
class FamilyRow:
    family: str
    ell: int
    computed: int
    expected: int | None

    @property
    def match(self) -> bool:
        return self.expected is None or self.expected == self.computed


def _degree_core(g: Graph, ell: int) -> int:
    core = 0
    for v in range(g.n):
        if g.adj[v].bit_count() <= ell:
            core |= 1 << v
    return core


def _fort_packing_bound(g: Graph, ell: int, core: int) -> tuple[int, int]:
    """Count pairwise disjoint forts avoiding the core; each needs its own
    witness vertex on top of the core.  Returns (count, closures_used)."""
    n = g.n
    used = 0
    count = 0
    closures = 0
    full = (1 << n) - 1
    while True:
        blue = core | used
        fail, c = _core.first_failing_leaks(n, g.adj, blue, ell, False)
        closures += c
        if fail < 0:
            return count, closures
        fort = fort_from_failure(
            g, VertexSet.from_mask(n, blue), VertexSet.from_mask(n, fail)
        ).vertices.mask
        # shrink towards a minimal fort: smaller forts pack better
        changed = True
        while changed:
            changed = False
            probe = fort
            while probe:
                low = probe & -probe
                probe ^= low
                smaller = fort & ~low
                if smaller and _core.is_fort_mask(n, g.adj, smaller, ell):
                    fort = smaller
                    changed = True
        used |= fort
        count += 1
        if (core | used) == full:
            return count, closures


def _unrank_combination(items: list[int], j: int, rank: int) -> tuple[int, ...]:
    out = []
    m = len(items)
    start = 0
    for i in range(j):
        v = start
        while True:
            below = comb(m - v - 1, j - i - 1)
            if rank < below:
                break
            rank -= below
            v += 1
        out.append(items[v])
        start = v + 1
    return tuple(out)


def _search_shard(args):
    n, adj, core, k, ell, standard, first_free, count = args
    return _core.search_min_superset(n, adj, core, k, ell, standard, first_free, count)


def _search_size_class(
    g: Graph, core: int, k: int, ell: int, standard: bool, workers: int
) -> tuple[int, int, int]:
    free = [v for v in range(g.n) if not core >> v & 1]
    j = k - core.bit_count()
    if j < 0 or j > len(free):
        return -1, 0, 0
    total = comb(len(free), j)
    if workers <= 1 or total < _PARALLEL_MIN_CANDIDATES:
        return _core.search_min_superset(g.n, g.adj, core, k, ell, standard)
    # shard the lexicographic scan by rank range; the first shard (in rank
    # order) that reports a hit holds the lexicographically first witness
    shard = -(-total // (workers * 4))
    tasks = [
        (g.n, g.adj, core, k, ell, standard, _unrank_combination(free, j, r), min(shard, total - r))
        for r in range(0, total, shard)
    ]
    nodes = 0
    closures = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for found, cand, clos in pool.map(_search_shard, tasks):
            nodes += cand
            closures += clos
            if found >= 0:
                return found, nodes, closures
    return -1, nodes, closures


def _solve_connected(
    g: Graph, ell: int, rule: Rule, workers: int, lower_bound: int
) -> tuple[int, int, SolveStats]:
    """Exact value and witness mask for a connected (or any) graph treated
    as a single search domain."""
    n = g.n
    full = (1 << n) - 1
    if n == 0:
        return 0, 0, SolveStats()
    core = _degree_core(g, ell)
    if g.max_degree() <= ell:
        return n, full, SolveStats()
    standard = rule is Rule.standard
    stats = SolveStats()
    lb = max(core.bit_count(), lower_bound, 1)
    if ell >= 1 and lower_bound == 0:
        prev_value, _, prev_stats = _solve_connected(g, ell - 1, rule, workers, 0)
        stats += prev_stats
        lb = max(lb, prev_value)
    if rule is Rule.psd:
        packing, closures = _fort_packing_bound(g, ell, core)
        stats += SolveStats(0, closures)
        lb = max(lb, core.bit_count() + packing)
    for k in range(lb, n + 1):
        found, nodes, closures = _search_size_class(g, core, k, ell, standard, workers)
        stats += SolveStats(nodes, closures)
        if found >= 0:
            return k, found, stats
    raise AssertionError("the full vertex set always forces")  # pragma: no cover


def leaky_number(
    g: Graph,
    ell: int,
    rule: Rule = Rule.psd,
    *,
    workers: int = 1,
    lower_bound: int = 0,
) -> SolveResult:
    """Minimum size of a set that forces ``g`` under every placement of
    ``ell`` leaks, with the lexicographically first optimal witness.

    ``lower_bound`` lets a caller feed a known bound (e.g. the value at a
    smaller leak budget); it must be sound or the result may be wrong.
    """
    if ell < 0:
        raise ValueError("leak budget must be non-negative")
    ell = min(ell, g.n)
    comps = connected_components(g)
    forced_core = VertexSet.from_mask(g.n, _degree_core(g, ell))
    if len(comps) <= 1:
        value, witness, stats = _solve_connected(g, ell, rule, workers, lower_bound)
        return SolveResult(value, VertexSet.from_mask(g.n, witness), forced_core, rule, ell, stats)
    value = 0
    witness = 0
    stats = SolveStats()
    for comp in comps:
        sub, back = induced_subgraph(g, comp)
        sub_ell = min(ell, sub.n)
        v, w, s = _solve_connected(sub, sub_ell, rule, workers, 0)
        value += v
        stats += s
        for i in range(sub.n):
            if w >> i & 1:
                witness |= 1 << back[i]
    return SolveResult(value, VertexSet.from_mask(g.n, witness), forced_core, rule, ell, stats)


def product_bound_check(g: Graph, h: Graph, ell: int) -> tuple[int, int, bool]:
    """Compare the product's value against the smaller of the two factor
    bounds |V(h)| * value(g) and |V(g)| * value(h)."""
    p = cartesian_product(g, h)
    lhs = leaky_number(p, ell).value
    rhs = min(h.n * leaky_number(g, ell).value, g.n * leaky_number(h, ell).value)
    return lhs, rhs, lhs <= rhs


def monotonicity_audit(g: Graph, max_ell: int) -> list[int]:
    """Values at leak budgets 0..max_ell, checked non-decreasing and never
    above the standard-rule value at the same budget."""
    if not 0 <= max_ell <= g.n:
        raise ValueError(f"max_ell must lie in [0, {g.n}]")
    psd_vals: list[int] = []
    std_vals: list[int] = []
    for ell in range(max_ell + 1):
        psd_vals.append(leaky_number(g, ell, Rule.psd, lower_bound=psd_vals[-1] if psd_vals else 0).value)
        std_vals.append(leaky_number(g, ell, Rule.standard, lower_bound=std_vals[-1] if std_vals else 0).value)
    g6 = to_graph6(g)
    for ell in range(1, max_ell + 1):
        if psd_vals[ell] < psd_vals[ell - 1]:
            raise AuditFailure(
                "value decreased when the leak budget grew",
                {"kind": "leak-monotonicity", "graph6": g6, "values": psd_vals},
            )
    for ell in range(max_ell + 1):
        if psd_vals[ell] > std_vals[ell]:
            raise AuditFailure(
                "psd value exceeded the standard-rule value",
                {"kind": "rule-dominance", "graph6": g6, "ell": ell,
                 "psd": psd_vals[ell], "standard": std_vals[ell]},
            )
    for ell in range(max_ell + 1):
        if (psd_vals[ell] == g.n) != (g.max_degree() <= ell):
            raise AuditFailure(
                "value-equals-order characterization failed",
                {"kind": "degree-characterization", "graph6": g6, "ell": ell,
                 "value": psd_vals[ell], "max_degree": g.max_degree()},
            )
    return psd_vals


# ---------------------------------------------------------------------------
# edge-deletion scanning


def _scan_one(args) -> list[ScanRecord]:
    g, ell = args
    g6 = to_graph6(g)
    if len(connected_components(g)) > 1:
        log.warning("scan input %s is disconnected; solved per component", g6)
    base = leaky_number(g, ell).value
    records = []
    for u, v in g.edges():
        reduced = leaky_number(delete_edge(g, u, v), ell).value
        records.append(ScanRecord(g6, (u, v), base, reduced))
    return records


def edge_deletion_scan(
    graphs: Iterable[Graph], ell: int = 1, workers: int = 1
) -> Iterator[ScanRecord]:
    """One record per (graph, edge): the value before and after deleting
    that edge.  Output order follows the input stream at any worker count.
    """
    tasks = ((g, ell) for g in graphs)
    if workers <= 1:
        for task in tasks:
            yield from _scan_one(task)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for records in pool.map(_scan_one, tasks, chunksize=8):
            yield from records


@dataclass
class ScanSummary:
    """Running aggregation of scan records."""

    records: int = 0
    min_diff: int | None = None
    max_diff: int | None = None
    increases: list[tuple[str, tuple[int, int]]] = field(default_factory=list)

    def add(self, rec: ScanRecord) -> None:
        self.records += 1
        d = rec.diff
        self.min_diff = d if self.min_diff is None else min(self.min_diff, d)
        self.max_diff = d if self.max_diff is None else max(self.max_diff, d)
        if d == 1:
            self.increases.append((rec.graph6, rec.edge))

    def window_violations(self, lower: int = -2, upper: int = 1) -> bool:
        if self.records == 0:
            return False
        return self.min_diff < lower or self.max_diff > upper

    def to_lines(self) -> list[str]:
        lines = [
            f"records={self.records} min_diff={self.min_diff} max_diff={self.max_diff}",
            f"deletions that raised the value by 1: {len(self.increases)}",
        ]
        for g6, (u, v) in self.increases:
            lines.append(f"  {g6} edge=({u},{v})")
        return lines


# ---------------------------------------------------------------------------
# family tables


def expected_value(spec: FamilySpec, ell: int, g: Graph | None = None) -> int | None:
    """Closed-form value for a family member, or None where no closed form
    is available at this budget (never extrapolated past its known range)."""
    kind, params = spec.kind, spec.params
    if kind == "path":
        n = params[0]
        return 1 if ell == 0 else (min(n, 2) if ell == 1 else n)
    if kind == "cycle":
        n = params[0]
        return 2 if ell <= 1 else n
    if kind == "complete":
        n = params[0]
        return n - 1 if ell <= n - 2 else n
    if kind == "wheel":
        n = params[0]  # rim size; the graph has n + 1 vertices
        if ell <= 1:
            return 3
        if ell == 2:
            return -(-n // 2) + 1
        return n if ell < n else n + 1
    if kind in ("complete_bipartite", "star"):
        m, n = params if kind == "complete_bipartite" else (1, params[0])
        lo, hi = min(m, n), max(m, n)
        if ell < lo:
            return lo
        return hi if ell < hi else m + n
    if kind == "hypercube":
        d = params[0]
        return 1 << (d - 1) if ell <= d - 1 else 1 << d
    if kind == "grid":
        n, m = params
        if ell >= (g if g is not None else generate(spec)).max_degree():
            return n * m  # every vertex can be stranded, so all must start blue
        if ell == 1 and n == m and n >= 4:
            return n
        return None  # no closed form at this budget (or contested range)
    if kind == "petersen_gp":
        n = params[0]
        if ell <= 1:
            return 3 if n == 3 else 4
        if ell == 2:
            return 4 if n in (4, 5, 6) else None
        return 2 * n
    if kind in ("tree_from_pruefer", "fig3_spider"):
        tree = g if g is not None else generate(spec)
        if ell == 0:
            return 1
        return sum(1 for v in range(tree.n) if tree.degree(v) <= ell)
    return None


def family_table(
    specs: Iterable[FamilySpec], ells: Iterable[int], workers: int = 1
) -> list[FamilyRow]:
    """Solve every (family member, budget) pair and pair each value with
    its closed form when one exists.  Budgets are processed in ascending
    order so each value seeds the next lower bound."""
    rows = []
    budgets = sorted(set(ells))
    for spec in specs:
        g = generate(spec)
        prev = 0
        for ell in budgets:
            res = leaky_number(g, min(ell, g.n), workers=workers, lower_bound=prev)
            prev = res.value
            rows.append(FamilyRow(str(spec), ell, res.value, expected_value(spec, ell, g)))
    return rows


def default_suite(extended: bool = False) -> list[tuple[FamilySpec, tuple[int, ...]]]:
    """The desk-scale verification ranges.

    Paths, cycles, complete graphs and wheels up to 8 (rim) vertices,
    complete bipartite graphs with at most 8 vertices, every labeled tree
    on up to 7 vertices, hypercubes up to dimension 3 (dimension 4 at
    budgets <= 3 behind ``extended``), prisms over cycles up to 6, and
    grids up to 5x4.  Budgets cover every break point of the closed forms;
    grid budget 2 rows (no closed form, exploration only) are limited to
    at most 12 vertices to keep the sweep quick.
    """
    suite: list[tuple[FamilySpec, tuple[int, ...]]] = []
    for n in range(1, 9):
        suite.append((FamilySpec("path", (n,)), (0, 1, 2, 3)))
    for n in range(3, 9):
        suite.append((FamilySpec("cycle", (n,)), (0, 1, 2, 3)))
    for n in range(1, 9):
        suite.append((FamilySpec("complete", (n,)), tuple(range(n + 1))))
    for n in range(3, 9):
        suite.append((FamilySpec("wheel", (n,)), tuple(range(n + 2))))
    for m in range(1, 8):
        for n in range(m, 9 - m):
            suite.append((FamilySpec("complete_bipartite", (m, n)), tuple(range(max(m, n) + 2))))
    for n in range(2, 8):
        for seq in iter_product(range(n), repeat=n - 2):
            suite.append((FamilySpec("tree_from_pruefer", seq), (0, 1, 2, 3)))
    suite.append((FamilySpec("fig3_spider"), (0, 1, 2, 3)))
    for d in range(0, 4):
        suite.append((FamilySpec("hypercube", (d,)), tuple(range((1 << d) + 1))))
    if extended:
        suite.append((FamilySpec("hypercube", (4,)), (0, 1, 2, 3)))
    for n in range(3, 7):
        suite.append((FamilySpec("petersen_gp", (n, 1)), (0, 1, 2, 3)))
    for n in range(2, 6):
        for m in range(2, min(n, 4) + 1):
            ells = (0, 1, 2, 3, 4) if n * m <= 12 else (0, 1, 3, 4)
            suite.append((FamilySpec("grid", (n, m)), ells))
    return suite
