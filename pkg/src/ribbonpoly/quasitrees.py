"""Quasi-trees: enumeration, chord diagrams, activities and the weight expansion.

A quasi-tree of a connected ribbon graph is a connected spanning subgraph
with exactly one face; for genus zero these are precisely the spanning
trees.  The single boundary walk of a quasi-tree visits every half-edge
once, so it defines an ordered chord diagram: the walk is the circle, the
edge pairs are the chords.  Given a total edge order, a chord is *live*
when it crosses no lower-ordered chord and *dead* otherwise; combined
with membership this classifies every edge as internally/externally
live/dead (symbols L, D, ℓ, d).

Enumeration never scans all 2^e subsets.  It grows a binary resolution
tree over per-edge states {0, 1, *}: starting from all-unresolved, edges
are examined from the highest order downward.  Resolving an edge both
ways splits the search; an edge is *nugatory* - left unresolved - exactly
when one of its two resolutions can no longer complete to a one-face
subgraph.  That test is a union-find: take the boundary components of the
currently-included edges as nodes and link the two components touched by
each unresolved edge; the resolution is viable iff this graph is
connected.  Each leaf completes uniquely to a quasi-tree (include an
unresolved edge iff including it keeps the linked boundary connected),
and the leaf's unresolved edges are exactly the live edges.

Each quasi-tree contributes the weight

    Y^nullity(D) * Z^genus(D) * (1+Y)^|external live| * T(X, 1+YZ)

where D is the spanning subgraph of internally dead edges and T is the
Tutte polynomial of the contracted graph whose vertices are the
components of D and whose edges are the internally live edges.  Summed
over all quasi-trees this equals the three-variable polynomial computed
by the state sum over all spanning subgraphs, with far fewer summands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import NotQuasiTree, SplitRoot
from .mpoly import MPoly, ONE, Y, Z
from .multigraph import MultiGraph
from .ribbon import RibbonGraph, SpanningSubgraph


class Activity(Enum):
    """Per-edge classification with respect to a quasi-tree."""

    INTERNALLY_LIVE = "L"
    INTERNALLY_DEAD = "D"
    EXTERNALLY_LIVE = "ℓ"
    EXTERNALLY_DEAD = "d"

    @property
    def symbol(self) -> str:
        return self.value

    @property
    def is_live(self) -> bool:
        return self in (Activity.INTERNALLY_LIVE, Activity.EXTERNALLY_LIVE)

    @property
    def is_internal(self) -> bool:
        return self in (Activity.INTERNALLY_LIVE, Activity.INTERNALLY_DEAD)


class ChordDiagram:
    """The marked boundary circle of a quasi-tree with edge pairs as chords."""

    __slots__ = ("cycle", "chords", "_position")

    def __init__(self, cycle: Sequence[int], chords: Sequence[tuple[int, int]]):
        self.cycle = tuple(cycle)
        self.chords = tuple(chords)
        self._position = {h: pos for pos, h in enumerate(self.cycle)}
        if len(self._position) != len(self.cycle):
            raise ValueError("boundary walk repeats a half-edge")

    def position(self, half_edge: int) -> int:
        return self._position[half_edge]

    def chord_span(self, edge_id: int) -> tuple[int, int]:
        a, b = self.chords[edge_id]
        p, q = self._position[a], self._position[b]
        return (p, q) if p < q else (q, p)

    def chords_intersect(self, edge_a: int, edge_b: int) -> bool:
        """True when the endpoints of the two chords alternate around the circle."""
        a1, a2 = self.chord_span(edge_a)
        b1, b2 = self.chord_span(edge_b)
        return (a1 < b1 < a2) != (a1 < b2 < a2)

    def __repr__(self) -> str:
        return f"ChordDiagram(({','.join(map(str, self.cycle))}))"


def chord_diagram(graph: RibbonGraph, edges: Iterable[int]) -> ChordDiagram:
    """The ordered chord diagram of a quasi-tree's single boundary walk.

    The walk starts at half-edge 1.  Raises
    :class:`~ribbonpoly.errors.NotQuasiTree` when the subgraph has more
    than one boundary component.
    """
    if graph.is_trivial:
        return ChordDiagram((), ())
    cycles = graph.boundary_components(edges)
    if len(cycles) != 1:
        raise NotQuasiTree(
            f"subgraph has {len(cycles)} boundary components, expected one"
        )
    return ChordDiagram(cycles[0], graph.edges)


def classify_activities(
    diagram: ChordDiagram, internal: Iterable[int], order: Sequence[int]
) -> tuple[Activity, ...]:
    """Live/dead status of every edge, combined with internal/external membership.

    An edge is live iff its chord crosses no chord of strictly lower order.
    Indexed by edge id, not by order position.
    """
    internal_set = frozenset(internal)
    n = len(diagram.chords)
    rank = {eid: pos for pos, eid in enumerate(order)}
    out: list[Activity] = []
    for eid in range(n):
        live = not any(
            diagram.chords_intersect(eid, other)
            for other in range(n)
            if rank[other] < rank[eid]
        )
        if eid in internal_set:
            out.append(Activity.INTERNALLY_LIVE if live else Activity.INTERNALLY_DEAD)
        else:
            out.append(Activity.EXTERNALLY_LIVE if live else Activity.EXTERNALLY_DEAD)
    return tuple(out)


def activity_string(activities: Sequence[Activity], order: Sequence[int]) -> str:
    """Symbols in order position (lowest-ordered edge first)."""
    return "".join(activities[eid].symbol for eid in order)


@dataclass(frozen=True)
class PartialResolution:
    """Per-edge states in {0, 1, *}; ``None`` encodes the unresolved ``*``.

    A partial resolution stands for the interval of all full resolutions
    agreeing with it on the resolved edges.
    """

    states: tuple[int | None, ...]

    def unresolved(self) -> tuple[int, ...]:
        return tuple(e for e, s in enumerate(self.states) if s is None)

    def included(self) -> frozenset[int]:
        return frozenset(e for e, s in enumerate(self.states) if s == 1)

    def interval_size(self) -> int:
        return 1 << len(self.unresolved())

    def contains(self, edge_set: Iterable[int]) -> bool:
        chosen = frozenset(edge_set)
        return all(
            s is None or (s == 1) == (e in chosen) for e, s in enumerate(self.states)
        )

    def completions(self) -> Iterator[frozenset[int]]:
        """All edge subsets in the interval of this partial resolution."""
        free = self.unresolved()
        base = self.included()
        for size in range(len(free) + 1):
            for extra in combinations(free, size):
                yield base | frozenset(extra)

    def string(self, order: Sequence[int]) -> str:
        symbols = {0: "0", 1: "1", None: "*"}
        return "".join(symbols[self.states[eid]] for eid in order)


@dataclass(frozen=True)
class QuasiTree:
    """A quasi-tree with its diagram, activities and derived structures."""

    subgraph: SpanningSubgraph
    diagram: ChordDiagram = field(repr=False)
    activities: tuple[Activity, ...]
    resolution: PartialResolution
    order: tuple[int, ...]
    dead_subgraph: SpanningSubgraph = field(repr=False)
    contracted_graph: MultiGraph = field(repr=False)

    @property
    def parent(self) -> RibbonGraph:
        return self.subgraph.parent

    @property
    def edges(self) -> frozenset[int]:
        return self.subgraph.edges

    @property
    def genus(self) -> int:
        return self.subgraph.genus

    @property
    def live_internal(self) -> frozenset[int]:
        return frozenset(
            e for e, a in enumerate(self.activities) if a is Activity.INTERNALLY_LIVE
        )

    @property
    def live_external(self) -> frozenset[int]:
        return frozenset(
            e for e, a in enumerate(self.activities) if a is Activity.EXTERNALLY_LIVE
        )

    def bitstring(self, order: Sequence[int] | None = None) -> str:
        return self.subgraph.bitstring(order if order is not None else self.order)

    def activity_string(self, order: Sequence[int] | None = None) -> str:
        return activity_string(self.activities, order if order is not None else self.order)


def _contracted_graph(
    graph: RibbonGraph, dead_edges: frozenset[int], live_internal: Iterable[int]
) -> MultiGraph:
    """Vertices are the components of the dead subgraph; edges the live internal ones."""
    v = graph.vertex_count
    parent = list(range(v))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for eid in dead_edges:
        x, y = graph.edges[eid]
        rx, ry = find(graph.vertex_of(x)), find(graph.vertex_of(y))
        if rx != ry:
            parent[rx] = ry
    component_index: dict[int, int] = {}
    for vi in range(v):
        root = find(vi)
        if root not in component_index:
            component_index[root] = len(component_index)
    edges = tuple(
        (
            component_index[find(graph.vertex_of(graph.edges[eid][0]))],
            component_index[find(graph.vertex_of(graph.edges[eid][1]))],
            eid,
        )
        for eid in sorted(live_internal)
    )
    return MultiGraph(len(component_index), edges)


def _build_quasi_tree(
    graph: RibbonGraph,
    edge_set: frozenset[int],
    states: Sequence[int | None],
    order: tuple[int, ...],
) -> QuasiTree:
    subgraph = graph.spanning_subgraph(edge_set)
    if not subgraph.is_quasi_tree:
        raise AssertionError(
            f"leaf completion {sorted(edge_set)} is not a quasi-tree "
            f"(f={subgraph.faces}, k={subgraph.components})"
        )
    diagram = chord_diagram(graph, edge_set)
    activities = classify_activities(diagram, edge_set, order)
    resolution = PartialResolution(tuple(states))
    live = frozenset(e for e, a in enumerate(activities) if a.is_live)
    if live != frozenset(resolution.unresolved()):
        raise AssertionError(
            f"leaf {resolution.states} disagrees with live edges {sorted(live)}"
        )
    dead_edges = frozenset(
        e for e, a in enumerate(activities) if a is Activity.INTERNALLY_DEAD
    )
    dead_subgraph = graph.spanning_subgraph(dead_edges)
    live_internal = frozenset(
        e for e, a in enumerate(activities) if a is Activity.INTERNALLY_LIVE
    )
    return QuasiTree(
        subgraph=subgraph,
        diagram=diagram,
        activities=activities,
        resolution=resolution,
        order=order,
        dead_subgraph=dead_subgraph,
        contracted_graph=_contracted_graph(graph, dead_edges, live_internal),
    )


def _gamma_connected(
    graph: RibbonGraph,
    states: Sequence[int | None],
    flip_edge: int | None = None,
    flip_to: int | None = None,
) -> bool:
    """Connectivity of the boundary components linked by unresolved edges.

    ``flip_edge``/``flip_to`` test a candidate resolution without copying
    the state vector.
    """
    included = []
    stars = []
    for eid, state in enumerate(states):
        if eid == flip_edge:
            state = flip_to
        if state == 1:
            included.append(eid)
        elif state is None:
            stars.append(eid)
    count, ids = graph.face_orbit_ids(included)
    parent = list(range(count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    remaining = count
    for eid in stars:
        a, b = graph.edges[eid]
        ra, rb = find(ids[a]), find(ids[b])
        if ra != rb:
            parent[ra] = rb
            remaining -= 1
    return remaining == 1


def enumerate_quasi_trees(
    graph: RibbonGraph, order: Sequence[int] | None = None
) -> list[QuasiTree]:
    """All quasi-trees, one per leaf of the binary resolution tree.

    Edges are resolved from the highest order down; nugatory edges are
    skipped once and never revisited.  Leaves are emitted left (0-branch)
    to right, deterministically.  Raises
    :class:`~ribbonpoly.errors.SplitRoot` on a disconnected graph.
    """
    if graph.is_trivial:
        return [_build_quasi_tree(graph, frozenset(), (), ())]
    if not graph.is_connected:
        raise SplitRoot("quasi-tree enumeration requires a connected graph")
    order = graph.resolve_edge_order(order)
    edge_count = len(graph.edges)
    out: list[QuasiTree] = []
    stack: list[tuple[tuple[int | None, ...], int]] = [
        ((None,) * edge_count, edge_count - 1)
    ]
    while stack:
        frozen_states, pos = stack.pop()
        states = list(frozen_states)
        branched = False
        while pos >= 0:
            eid = order[pos]
            viable0 = _gamma_connected(graph, states, eid, 0)
            viable1 = _gamma_connected(graph, states, eid, 1)
            if viable0 and viable1:
                lower = states[:]
                lower[eid] = 0
                upper = states[:]
                upper[eid] = 1
                stack.append((tuple(upper), pos - 1))
                stack.append((tuple(lower), pos - 1))
                branched = True
                break
            pos -= 1  # nugatory: leave unresolved
        if branched:
            continue
        # leaf: include each unresolved edge iff inclusion keeps the
        # linked boundary connected; this is the unique quasi-tree in
        # the leaf's interval
        chosen = set(e for e, s in enumerate(states) if s == 1)
        for eid, state in enumerate(states):
            if state is None and _gamma_connected(graph, states, eid, 1):
                chosen.add(eid)
        out.append(_build_quasi_tree(graph, frozenset(chosen), states, order))
    return out


def genus_histogram(quasi_trees: Iterable[QuasiTree]) -> dict[int, int]:
    """Number of quasi-trees of each genus."""
    hist: dict[int, int] = {}
    for qt in quasi_trees:
        hist[qt.genus] = hist.get(qt.genus, 0) + 1
    return dict(sorted(hist.items()))


@dataclass(frozen=True)
class QuasiTreeWeight:
    """One quasi-tree's summand, kept in factored pieces and expanded."""

    nullity_dead: int
    genus_dead: int
    external_live_count: int
    tutte_factor: MPoly  # Tutte polynomial of the contracted graph at (X, 1+YZ)
    expanded: MPoly

    def factored_string(self) -> str:
        parts = []
        if self.nullity_dead:
            parts.append("Y" if self.nullity_dead == 1 else f"Y^{self.nullity_dead}")
        if self.genus_dead:
            parts.append("Z" if self.genus_dead == 1 else f"Z^{self.genus_dead}")
        if self.external_live_count:
            base = "(1+Y)"
            parts.append(
                base if self.external_live_count == 1 else f"{base}^{self.external_live_count}"
            )
        if self.tutte_factor != ONE:
            parts.append(f"({self.tutte_factor})")
        return "*".join(parts) if parts else "1"


def quasi_tree_weight(qt: QuasiTree) -> QuasiTreeWeight:
    dead = qt.dead_subgraph
    tutte = qt.contracted_graph.tutte_polynomial().substitute(y=ONE + Y * Z)
    expanded = (
        MPoly.monomial(1, y=dead.nullity, z=dead.genus)
        * (ONE + Y) ** len(qt.live_external)
        * tutte
    )
    return QuasiTreeWeight(
        nullity_dead=dead.nullity,
        genus_dead=dead.genus,
        external_live_count=len(qt.live_external),
        tutte_factor=tutte,
        expanded=expanded,
    )


def quasi_tree_expansion(
    graph: RibbonGraph, order: Sequence[int] | None = None
) -> MPoly:
    """The three-variable polynomial as a sum of quasi-tree weights.

    One summand per quasi-tree; the result does not depend on the edge
    order even though each individual weight does.  For one-vertex graphs
    every contracted graph is a bouquet of loops, so the Tutte factor
    degenerates to (1+YZ)^|internal live|.
    """
    total = MPoly.zero()
    for qt in enumerate_quasi_trees(graph, order):
        total = total + quasi_tree_weight(qt).expanded
    return total
