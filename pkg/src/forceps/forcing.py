"""Forcing processes on graphs, with and without leaks.

Two color change rules are supported.  Under the standard rule a blue
vertex forces its unique non-blue neighbor.  Under the positive
semidefinite (psd) rule the non-blue vertices are first split into the
connected components of the graph minus the blue set, and a blue vertex may
force within each component separately: it forces the unique non-blue
neighbor it has in that component, if there is exactly one.

A leak is a vertex that can never perform a force; it can still be forced
blue.  A set is an ell-leaky forcing set when it colors the whole graph for
every placement of ell leaks, leaks on initially blue vertices included.
Closures are applied round-simultaneously, which fixes a canonical
chronology; the final blue set itself is order independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from . import _core
from .graphs import Graph, VertexSet, _bits_ascending


class Rule(Enum):
    standard = "standard"
    psd = "psd"


def _is_standard(rule: Rule) -> bool:
    return rule is Rule.standard


@dataclass(frozen=True)
class Force:
    """A single force along the edge source -> target."""

    source: int
    target: int

    def __str__(self) -> str:
        return f"{self.source}->{self.target}"


@dataclass(frozen=True)
class ColoringState:
    """A blue vertex set plus a leak vertex set over one graph.

    The two sets may intersect: a blue leak is colored but never forces.
    """

    blue: VertexSet
    leaks: VertexSet

    def __post_init__(self):
        if self.blue.n != self.leaks.n:
            raise ValueError("blue and leak sets live in different universes")


@dataclass(frozen=True)
class Chronology:
    """The ordered record of forces of one closure run.

    Steps are (round, force) pairs; rounds are numbered from 1 and every
    target appears exactly once.
    """

    steps: tuple[tuple[int, Force], ...] = ()

    def __iter__(self) -> Iterator[tuple[int, Force]]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def to_lines(self) -> list[str]:
        return [f"{rnd} {force}" for rnd, force in self.steps]


@dataclass(frozen=True)
class LeakyVerdict:
    """Outcome of an adversarial leak-placement test.

    ``witness_leaks`` is the lexicographically first failing placement when
    ``ok`` is false and a witness was requested.
    """

    ok: bool
    witness_leaks: VertexSet | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_state(g: Graph, state: ColoringState) -> None:
    if state.blue.n != g.n:
        raise ValueError("state does not match the graph's vertex count")


def force_candidates(g: Graph, state: ColoringState, rule: Rule) -> frozenset[Force]:
    """Every force valid in the given state (before any is applied)."""
    _check_state(g, state)
    blue = state.blue.mask
    sources = blue & ~state.leaks.mask
    white = (1 << g.n) - 1 & ~blue
    out = []
    if rule is Rule.standard:
        for u in _bits_ascending(sources):
            nb = g.adj[u] & white
            if nb and nb & (nb - 1) == 0:
                out.append(Force(u, nb.bit_length() - 1))
    else:
        for comp in _white_components(g, white):
            for u in _bits_ascending(sources):
                nb = g.adj[u] & comp
                if nb and nb & (nb - 1) == 0:
                    out.append(Force(u, nb.bit_length() - 1))
    return frozenset(out)


def _white_components(g: Graph, white: int) -> list[int]:
    comps = []
    rest = white
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in _bits_ascending(frontier):
                grow |= g.adj[v]
            frontier = grow & white & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def closure(g: Graph, state: ColoringState, rule: Rule) -> tuple[VertexSet, Chronology]:
    """Run the forcing process to its fixed point.

    Each round gathers all currently valid forces, keeps the smallest
    (source, target) pair per target, and applies them simultaneously.
    Returns the final blue set and the chronology of applied forces.
    """
    _check_state(g, state)
    blue = state.blue
    steps: list[tuple[int, Force]] = []
    rnd = 0
    while True:
        cands = force_candidates(g, ColoringState(blue, state.leaks), rule)
        if not cands:
            final = VertexSet.from_mask(g.n, blue.mask)
            break
        rnd += 1
        per_target: dict[int, Force] = {}
        for f in sorted(cands, key=lambda f: (f.source, f.target)):
            per_target.setdefault(f.target, f)
        mask = blue.mask
        for t in sorted(per_target):
            steps.append((rnd, per_target[t]))
            mask |= 1 << t
        blue = VertexSet.from_mask(g.n, mask)
    return final, Chronology(tuple(steps))


def is_forcing_set(g: Graph, state: ColoringState, rule: Rule) -> bool:
    """Does the closure of this state color every vertex?"""
    _check_state(g, state)
    final = _core.closure_mask(
        g.n, g.adj, state.blue.mask, state.leaks.mask, _is_standard(rule)
    )
    return final == (1 << g.n) - 1


def is_ell_leaky_forcing_set(
    g: Graph,
    blue: VertexSet,
    ell: int,
    rule: Rule = Rule.psd,
    *,
    witness: bool = True,
) -> LeakyVerdict:
    """Test ``blue`` against every placement of ``ell`` leaks.

    Placements range over all vertices, blue ones included, and are scanned
    in lexicographic order; on failure the first failing placement is
    returned as the witness.  ``ell`` beyond the vertex count is clamped
    (extra leaks have nowhere new to land).  With ``witness=False`` the
    scan may be skipped entirely when some non-blue vertex has degree at
    most ``ell``: leaking its whole neighborhood strands it, so the verdict
    is false without running a single closure.
    """
    if blue.n != g.n:
        raise ValueError("blue set does not match the graph's vertex count")
    if ell < 0:
        raise ValueError("leak budget must be non-negative")
    ell = min(ell, g.n)
    if not witness:
        for v in range(g.n):
            if v not in blue and g.degree(v) <= ell:
                return LeakyVerdict(False, None)
    fail, _ = _core.first_failing_leaks(g.n, g.adj, blue.mask, ell, _is_standard(rule))
    if fail < 0:
        return LeakyVerdict(True, None)
    return LeakyVerdict(False, VertexSet.from_mask(g.n, fail) if witness else None)


def possible_forces(g: Graph, blue: VertexSet) -> frozenset[Force]:
    """All psd forces realizable in some sequence of valid forces from
    ``blue`` (leak free).

    Computed per target: run the closure with the target barred from ever
    being colored, which is the unique maximal reachable state avoiding it,
    then read off who can force the target there.  A force valid earlier
    stays valid in that maximal state because extra blue vertices can only
    shrink the target's white component.
    """
    if blue.n != g.n:
        raise ValueError("blue set does not match the graph's vertex count")
    out = []
    full = (1 << g.n) - 1
    for v in range(g.n):
        if v in blue:
            continue
        out.extend(_forcers_of(g, blue.mask, v, full))
    return frozenset(out)


def _forcers_of(g: Graph, blue_mask: int, v: int, full: int) -> list[Force]:
    final = _core.closure_mask(g.n, g.adj, blue_mask, 0, False, 1 << v)
    white = full & ~final
    comp = 1 << v
    frontier = comp
    while frontier:
        grow = 0
        for w in _bits_ascending(frontier):
            grow |= g.adj[w]
        frontier = grow & white & ~comp
        comp |= frontier
    return [
        Force(u, v)
        for u in _bits_ascending(g.adj[v] & final)
        if g.adj[u] & comp == 1 << v
    ]


def distinct_forcers(g: Graph, blue: VertexSet, v: int) -> int:
    """Number of distinct vertices that can realizably force ``v``."""
    if blue.n != g.n:
        raise ValueError("blue set does not match the graph's vertex count")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside [0, {g.n})")
    if v in blue:
        raise ValueError(f"vertex {v} is already blue; it has no forcers")
    return len(_forcers_of(g, blue.mask, v, (1 << g.n) - 1))


def one_leaky_criterion(g: Graph, blue: VertexSet) -> bool:
    """Robustness against a single leak, decided without leak enumeration.

    True iff ``blue`` forces the graph leak-free and every non-blue vertex
    can be forced by two distinct vertices.  Two independent forcers mean
    no single leak can cut off a target, and the condition is also
    necessary, so this agrees with the exhaustive one-leak test.
    """
    if blue.n != g.n:
        raise ValueError("blue set does not match the graph's vertex count")
    full = (1 << g.n) - 1
    if _core.closure_mask(g.n, g.adj, blue.mask, 0, False) != full:
        return False
    for v in range(g.n):
        if v not in blue and len(_forcers_of(g, blue.mask, v, full)) < 2:
            return False
    return True
