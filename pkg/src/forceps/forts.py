"""Leak-robust psd forts: obstructions that certify lower bounds.

A fort (at leak budget ell) is a nonempty vertex set F such that within
each connected component of the subgraph induced on F, at most ell outside
vertices have exactly one neighbor inside that component.  An adversary can
leak those few threatening vertices of one component, after which nothing
inside it can ever be forced, so every ell-leaky psd forcing set must meet
every fort.  Conversely the non-blue remainder of any stalled closure is
such a fort, which makes minimum fort hitting sets an independent route to
the forcing number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _core
from .errors import AuditFailure, GuardError
from .graph6 import to_graph6
from .graphs import Graph, VertexSet

ENUMERATION_GUARD = 20  # 2^20 subset checks is the practical desk ceiling


@dataclass(frozen=True)
class Fort:
    """A vertex set certified against the fort predicate at budget ``ell``."""

    vertices: VertexSet
    ell: int


@dataclass(frozen=True)
class FortFamily:
    """Inclusion-minimal forts, pairwise incomparable, in lexicographic
    order of their vertex lists."""

    forts: tuple[Fort, ...]

    def __iter__(self) -> Iterator[Fort]:
        return iter(self.forts)

    def __len__(self) -> int:
        return len(self.forts)

    def vertex_sets(self) -> list[VertexSet]:
        return [f.vertices for f in self.forts]


def is_leaky_psd_fort(g: Graph, vertices: VertexSet, ell: int) -> bool:
    """Evaluate the fort predicate (see module docstring) on one set.

    The per-component count condition ("at most ell outside vertices with
    exactly one neighbor inside") absorbs the friendlier-sounding
    alternative "every outside vertex has zero or at least two neighbors
    inside": under that alternative the count is 0 <= ell, and conversely
    any vertex violating it is exactly one the count charges.  At a budget
    of zero this is the classical psd fort.
    """
    if vertices.n != g.n:
        raise ValueError("vertex set does not match the graph")
    if not vertices:
        raise ValueError("a fort must be nonempty")
    if ell < 0:
        raise ValueError("leak budget must be non-negative")
    return _core.is_fort_mask(g.n, g.adj, vertices.mask, ell)


def minimal_forts(g: Graph, ell: int, *, max_vertices: int = ENUMERATION_GUARD) -> FortFamily:
    """All inclusion-minimal forts at budget ``ell``.

    Subsets are scanned in ascending cardinality, then lexicographically,
    skipping anything containing a fort already found; that makes every
    accepted set minimal.  Guarded because the scan is 2^n.
    """
    if ell < 0:
        raise ValueError("leak budget must be non-negative")
    if g.n > max_vertices:
        raise GuardError(
            f"fort enumeration on {g.n} vertices exceeds the guard "
            f"({max_vertices}); pass max_vertices to override"
        )
    masks = _core.minimal_fort_masks(g.n, g.adj, ell)
    sets = sorted(
        (VertexSet.from_mask(g.n, m) for m in masks), key=lambda s: tuple(s)
    )
    return FortFamily(tuple(Fort(s, ell) for s in sets))


def fort_from_failure(g: Graph, blue: VertexSet, leaks: VertexSet) -> Fort:
    """Extract the fort left behind by a stalled closure.

    The non-blue remainder of the closure of (blue, leaks) under the psd
    rule must satisfy the fort predicate at budget |leaks|; if it does not,
    the identity this package relies on is broken on this instance, which
    is raised as an AuditFailure rather than ignored.
    """
    if blue.n != g.n or leaks.n != g.n:
        raise ValueError("state does not match the graph")
    full = (1 << g.n) - 1
    final = _core.closure_mask(g.n, g.adj, blue.mask, leaks.mask, False)
    if final == full:
        raise ValueError("closure colors every vertex; there is no fort to extract")
    remainder = VertexSet.from_mask(g.n, full & ~final)
    ell = len(leaks)
    if not _core.is_fort_mask(g.n, g.adj, remainder.mask, ell):
        raise AuditFailure(
            "stalled closure remainder is not a fort",
            {
                "kind": "fort-extraction",
                "graph6": to_graph6(g),
                "blue": list(blue),
                "leaks": list(leaks),
                "remainder": list(remainder),
                "ell": ell,
            },
        )
    return Fort(remainder, ell)


def _greedy_packing(masks: list[int], unhit: list[int]) -> int:
    used = 0
    count = 0
    for m in unhit:
        if m & used == 0:
            used |= m
            count += 1
    return count


def hitting_number(
    g: Graph, ell: int, *, max_vertices: int = ENUMERATION_GUARD
) -> tuple[int, VertexSet]:
    """Minimum size of a set meeting every fort, with its first witness.

    Every fort contains a minimal fort (strip vertices while the predicate
    holds; the descent is finite), so hitting the minimal family hits them
    all and the optimum over minimal forts is the optimum over all forts.
    Solved by branch and bound: branch on the smallest unhit fort, prune
    with a greedy disjoint-fort packing bound, and keep the
    lexicographically first optimal witness.
    """
    family = minimal_forts(g, ell, max_vertices=max_vertices)
    masks = [f.vertices.mask for f in family]
    if not masks:
        return 0, VertexSet(g.n)

    best: list = [None, None]  # size, vertex tuple
    seen: set[int] = set()

    def dfs(chosen: int) -> None:
        unhit = [m for m in masks if m & chosen == 0]
        size = chosen.bit_count()
        if not unhit:
            key = tuple(VertexSet.from_mask(g.n, chosen))
            if best[0] is None or size < best[0] or (size == best[0] and key < best[1]):
                best[0], best[1] = size, key
            return
        if best[0] is not None and size + _greedy_packing(masks, unhit) > best[0]:
            return
        branch = min(unhit, key=lambda m: (m.bit_count(), tuple(VertexSet.from_mask(g.n, m))))
        for v in VertexSet.from_mask(g.n, branch):
            nxt = chosen | 1 << v
            if nxt in seen:
                continue
            seen.add(nxt)
            dfs(nxt)

    dfs(0)
    return best[0], VertexSet(g.n, best[1])


def is_connected_fort_standard(g: Graph, fort: Fort) -> bool:
    """Whether the fort induces a connected subgraph.

    A connected fort is at the same time a fort for the standard rule at
    the same budget, since there is only one component for outside vertices
    to threaten.
    """
    if fort.vertices.n != g.n:
        raise ValueError("fort does not match the graph")
    sub = fort.vertices.mask
    comp = sub & -sub
    frontier = comp
    while frontier:
        grow = 0
        f = frontier
        while f:
            low = f & -f
            grow |= g.adj[low.bit_length() - 1]
            f ^= low
        frontier = grow & sub & ~comp
        comp |= frontier
    return comp == sub


def fort_family_json_lines(g: Graph, family: FortFamily) -> list[str]:
    """One JSON object per fort: vertices (ascending), ell, connected."""
    import json

    return [
        json.dumps(
            {
                "vertices": list(f.vertices),
                "ell": f.ell,
                "connected": is_connected_fort_standard(g, f),
            },
            separators=(",", ":"),
        )
        for f in family
    ]
