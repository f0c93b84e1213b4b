"""Oriented ribbon graphs as permutation triples.

A ribbon graph on ``2n`` half-edges is a triple of permutations
``(sigma0, sigma1, sigma2)`` of ``{1, ..., 2n}``: the orbits of ``sigma0``
are the vertices (counterclockwise order of half-edges at each vertex),
the orbits of the fixed-point-free involution ``sigma1`` are the edges,
and the orbits of ``sigma2`` are the faces.  The triple satisfies
``sigma0(sigma1(sigma2(i))) == i`` for every half-edge ``i``, so
``sigma2 = (sigma0 * sigma1)^-1`` is derived, never stored independently.

This data is equivalent to a cellular embedding of a multigraph in a
closed oriented surface; with ``v``, ``e``, ``f``, ``k`` the numbers of
vertices, edges, faces and connected components, the genus satisfies
``2g = 2k - v + e - f`` and the nullity is ``n = e - v + k``.

The empty triple (``2n == 0``) represents the single-vertex graph with no
edges.  Other isolated vertices cannot be encoded by permutations; they
appear only as explicit counts in :class:`RestrictedSubgraph`.

All objects here are immutable after construction and every operation is
a pure function, so shared graphs are safe to use concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import Disconnected, LoopContraction, NotInvolution, NotPartition
from .permutation import Perm


class GraphCounts(NamedTuple):
    vertices: int
    edges: int
    faces: int
    components: int
    genus: int
    nullity: int


class SubgraphCounts(NamedTuple):
    components: int
    edge_count: int
    faces: int
    nullity: int
    genus: int


def _genus_from(components: int, vertices: int, edges: int, faces: int) -> int:
    twice = 2 * components - vertices + edges - faces
    if twice < 0 or twice % 2:
        raise AssertionError(
            f"invalid Euler data: 2g = {twice} from (k={components}, v={vertices}, "
            f"e={edges}, f={faces})"
        )
    return twice // 2


def _component_count(vertex_count: int, links: Iterable[tuple[int, int]]) -> int:
    parent = list(range(vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = vertex_count
    for a, b in links:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


class RibbonGraph:
    """Immutable oriented ribbon graph.

    Edges are the pairs ``{i, sigma1(i)}``, identified by their index in
    :attr:`edges`, which lists the pairs ``(min, max)`` sorted by their
    smaller half-edge.  :attr:`edge_order` is a tuple of edge indices from
    lowest-ordered to highest; the default order is by smaller half-edge,
    but activity computations accept reorderings.
    """

    __slots__ = (
        "sigma0",
        "sigma1",
        "sigma2",
        "half_edge_count",
        "vertices",
        "edges",
        "edge_order",
        "_vertex_of",
        "_edge_of",
        "_succ0",
        "_succ2inv",
        "_component_count",
    )

    def __init__(self, sigma0: Perm, sigma1: Perm, edge_order: Sequence[int] | None = None):
        n2 = sigma0.size
        if sigma1.size != n2:
            raise ValueError("sigma0 and sigma1 act on different label sets")
        if n2 and not sigma1.is_fixed_point_free_involution():
            raise NotInvolution("sigma1 must be a fixed-point-free involution")
        self.sigma0 = sigma0
        self.sigma1 = sigma1
        self.sigma2 = (sigma0 * sigma1).inverse()
        self.half_edge_count = n2
        self.vertices = tuple(sigma0.orbits())
        self.edges = tuple(
            (i, sigma1(i)) for i in range(1, n2 + 1) if i < sigma1(i)
        )
        if edge_order is None:
            order = tuple(range(len(self.edges)))
        else:
            order = tuple(edge_order)
            if sorted(order) != list(range(len(self.edges))):
                raise ValueError(f"edge_order {order!r} is not a permutation of the edge indices")
        self.edge_order = order

        vertex_of = [0] * (n2 + 1)
        for vi, cycle in enumerate(self.vertices):
            for h in cycle:
                vertex_of[h] = vi
        edge_of = [0] * (n2 + 1)
        for ei, (a, b) in enumerate(self.edges):
            edge_of[a] = edge_of[b] = ei
        self._vertex_of = vertex_of
        self._edge_of = edge_of
        # successor tables indexed by half-edge label; slot 0 unused
        self._succ0 = [0] + list(sigma0.images)
        s1 = sigma1.images
        s0 = sigma0.images
        self._succ2inv = [0] + [s0[s1[i - 1] - 1] for i in range(1, n2 + 1)]
        self._component_count = _component_count(
            len(self.vertices) or 1,
            ((vertex_of[a], vertex_of[b]) for a, b in self.edges),
        )

    # -- basic counts ------------------------------------------------

    @property
    def is_trivial(self) -> bool:
        """True for the single-vertex graph with no edges (``2n == 0``)."""
        return self.half_edge_count == 0

    @property
    def vertex_count(self) -> int:
        return 1 if self.is_trivial else len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def component_count(self) -> int:
        return self._component_count

    @property
    def is_connected(self) -> bool:
        return self._component_count == 1

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.sigma2.orbits())

    def counts(self) -> GraphCounts:
        """The tuple ``(v, e, f, k, g, n)`` of standard invariants."""
        if self.is_trivial:
            return GraphCounts(1, 0, 1, 1, 0, 0)
        v = len(self.vertices)
        e = len(self.edges)
        f = self.sigma2.orbit_count()
        k = self._component_count
        g = _genus_from(k, v, e, f)
        return GraphCounts(v, e, f, k, g, e - v + k)

    @property
    def genus(self) -> int:
        return self.counts().genus

    def vertex_of(self, half_edge: int) -> int:
        return self._vertex_of[half_edge]

    def edge_index_of(self, half_edge: int) -> int:
        return self._edge_of[half_edge]

    def is_loop(self, edge_id: int) -> bool:
        a, b = self.edges[edge_id]
        return self._vertex_of[a] == self._vertex_of[b]

    # -- spanning subgraphs --------------------------------------------

    def _membership(self, edges: Iterable[int]) -> list[bool]:
        member = [False] * len(self.edges)
        for ei in edges:
            member[ei] = True
        return member

    def face_count(self, edges: Iterable[int]) -> int:
        """Number of boundary components of the spanning subgraph ``edges``.

        Counts the orbits of the mixed permutation that follows ``sigma0``
        across absent edges and ``sigma2^-1`` along present ones.
        """
        if self.is_trivial:
            return 1
        member = self._membership(edges)
        succ0, succ2i, edge_of = self._succ0, self._succ2inv, self._edge_of
        seen = bytearray(self.half_edge_count + 1)
        faces = 0
        for start in range(1, self.half_edge_count + 1):
            if seen[start]:
                continue
            faces += 1
            i = start
            while not seen[i]:
                seen[i] = 1
                i = succ2i[i] if member[edge_of[i]] else succ0[i]
        return faces

    def boundary_components(self, edges: Iterable[int]) -> list[tuple[int, ...]]:
        """Boundary walks of the spanning subgraph, one cycle per face.

        Each cycle is rotated to start at its smallest half-edge; cycles are
        sorted by that label.  Every half-edge appears in exactly one cycle.
        """
        if self.is_trivial:
            return []
        member = self._membership(edges)
        succ0, succ2i, edge_of = self._succ0, self._succ2inv, self._edge_of
        seen = bytearray(self.half_edge_count + 1)
        cycles = []
        for start in range(1, self.half_edge_count + 1):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = 1
                cycle.append(i)
                i = succ2i[i] if member[edge_of[i]] else succ0[i]
            cycles.append(tuple(cycle))
        return cycles

    def face_orbit_ids(self, edges: Iterable[int]) -> tuple[int, list[int]]:
        """(face count, per-half-edge boundary-orbit index) for a subgraph.

        Two half-edges share an index exactly when they lie on the same
        boundary component of the spanning subgraph.  Slot 0 is unused.
        """
        member = self._membership(edges)
        succ0, succ2i, edge_of = self._succ0, self._succ2inv, self._edge_of
        ids = [-1] * (self.half_edge_count + 1)
        count = 0
        for start in range(1, self.half_edge_count + 1):
            if ids[start] >= 0:
                continue
            i = start
            while ids[i] < 0:
                ids[i] = count
                i = succ2i[i] if member[edge_of[i]] else succ0[i]
            count += 1
        return count, ids

    def subgraph_counts(self, edges: Iterable[int]) -> SubgraphCounts:
        """``(k, e, f, n, g)`` for the spanning subgraph with the given edges."""
        edges = list(edges)
        if self.is_trivial:
            return SubgraphCounts(1, 0, 1, 0, 0)
        v = len(self.vertices)
        k = _component_count(
            v,
            (
                (self._vertex_of[self.edges[ei][0]], self._vertex_of[self.edges[ei][1]])
                for ei in edges
            ),
        )
        e_h = len(edges)
        f = self.face_count(edges)
        g = _genus_from(k, v, e_h, f)
        return SubgraphCounts(k, e_h, f, e_h - v + k, g)

    def spanning_subgraph(self, edges: Iterable[int]) -> SpanningSubgraph:
        edge_set = frozenset(edges)
        for ei in edge_set:
            if not 0 <= ei < len(self.edges):
                raise ValueError(f"edge index {ei} out of range")
        k, e_h, f, n, g = self.subgraph_counts(edge_set)
        if f < k:
            raise AssertionError("face count below component count")
        return SpanningSubgraph(self, edge_set, k, e_h, f, n, g)

    def restrict(self, edges: Iterable[int]) -> RestrictedSubgraph:
        """The spanning subgraph as a standalone ribbon graph plus isolated vertices.

        Half-edges of absent edges are spliced out of every vertex rotation;
        vertices left with no half-edges are returned as a count.  The face
        count of the restriction (faces of the standalone graph plus one per
        isolated vertex) is an oracle for :meth:`face_count`, computed by an
        independent route.
        """
        member = self._membership(edges)
        kept = [h for h in range(1, self.half_edge_count + 1) if member[self._edge_of[h]]]
        relabel = {h: i for i, h in enumerate(kept, start=1)}
        cycles = []
        isolated = 1 if self.is_trivial else 0
        for cycle in self.vertices:
            sub = [relabel[h] for h in cycle if h in relabel]
            if sub:
                cycles.append(sub)
            else:
                isolated += 1
        pairs = [
            (relabel[a], relabel[b]) for a, b in self.edges if a in relabel
        ]
        if not kept:
            return RestrictedSubgraph(None, isolated, {})
        graph = build_ribbon_graph(cycles, pairs)
        return RestrictedSubgraph(graph, isolated, relabel)

    # -- edge-order helpers --------------------------------------------

    def resolve_edge_order(self, order: Sequence[int] | None) -> tuple[int, ...]:
        if order is None:
            return self.edge_order
        order = tuple(order)
        if sorted(order) != list(range(len(self.edges))):
            raise ValueError(f"order {order!r} is not a permutation of the edge indices")
        return order

    def bitstring(self, edges: Iterable[int], order: Sequence[int] | None = None) -> str:
        """Membership string of an edge subset, one character per order position."""
        member = self._membership(edges)
        return "".join("1" if member[ei] else "0" for ei in self.resolve_edge_order(order))

    def subset_from_bitstring(self, bits: str, order: Sequence[int] | None = None) -> frozenset[int]:
        order = self.resolve_edge_order(order)
        if len(bits) != len(order):
            raise ValueError(f"bitstring {bits!r} has wrong length for {len(order)} edges")
        return frozenset(ei for ei, bit in zip(order, bits) if bit == "1")

    def with_edge_order(self, order: Sequence[int]) -> RibbonGraph:
        return RibbonGraph(self.sigma0, self.sigma1, edge_order=order)

    # -- derived graphs --------------------------------------------------

    def _rebuild(self, cycles: list[list[int]], removed: set[int]) -> RibbonGraph:
        """Relabel surviving half-edges to 1..2m and inherit the edge order."""
        survivors = [h for h in range(1, self.half_edge_count + 1) if h not in removed]
        relabel = {h: i for i, h in enumerate(survivors, start=1)}
        new_cycles = [[relabel[h] for h in c] for c in cycles if c]
        pairs = [(relabel[a], relabel[b]) for a, b in self.edges if a in relabel]
        surviving_edges = [ei for ei, (a, b) in enumerate(self.edges) if a in relabel]
        # relabelling is monotone, so surviving edges keep their relative ids
        new_id = {old: new for new, old in enumerate(surviving_edges)}
        new_order = [new_id[ei] for ei in self.edge_order if ei in new_id]
        return build_ribbon_graph(new_cycles, pairs, edge_order=new_order)

    def delete_edge(self, edge_id: int) -> RibbonGraph:
        """Remove an edge, splicing its half-edges out of the vertex rotations.

        Vertices left without half-edges disappear (they are not encodable);
        deleting the only loop of the one-vertex graph yields the trivial graph.
        """
        a, b = self.edges[edge_id]
        removed = {a, b}
        cycles = [[h for h in cycle if h not in removed] for cycle in self.vertices]
        return self._rebuild(cycles, removed)

    def contract_edge(self, edge_id: int) -> RibbonGraph:
        """Merge the endpoints of a non-loop edge into one vertex.

        The merged rotation reads the first vertex from ``sigma0(a)`` around
        to ``sigma0^-1(a)``, then the second from ``sigma0(b)`` around to
        ``sigma0^-1(b)``.  Preserves genus and component count; decrements
        vertex and edge counts by one.
        """
        a, b = self.edges[edge_id]
        va, vb = self._vertex_of[a], self._vertex_of[b]
        if va == vb:
            raise LoopContraction(f"edge {edge_id} ({a},{b}) is a loop")

        def opened(cycle: tuple[int, ...], at: int) -> list[int]:
            pos = cycle.index(at)
            return [cycle[(pos + j) % len(cycle)] for j in range(1, len(cycle))]

        merged = opened(self.vertices[va], a) + opened(self.vertices[vb], b)
        cycles = [
            list(cycle)
            for vi, cycle in enumerate(self.vertices)
            if vi not in (va, vb)
        ]
        cycles.append(merged)
        return self._rebuild(cycles, {a, b})

    def dual(self) -> RibbonGraph:
        """The dual ribbon graph: vertices and faces exchanged, same edges.

        Uses ``sigma0* = sigma2`` and ``sigma1* = sigma1``; then
        ``sigma2* = sigma1 * sigma0 * sigma1`` is conjugate to ``sigma0``, so
        the vertex/face counts swap while edges, components and genus persist.
        """
        if not self.is_connected:
            raise Disconnected("dual requires a connected graph")
        return RibbonGraph(self.sigma2, self.sigma1, edge_order=self.edge_order)

    def connected_components(self) -> list[RibbonGraph]:
        """Standalone relabeled components, each with the inherited edge order."""
        if self.is_trivial or self.is_connected:
            return [self]
        labels = sorted(
            range(len(self.vertices)),
            key=lambda vi: self.vertices[vi][0],
        )
        parent = list(range(len(self.vertices)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x, y in self.edges:
            rx, ry = find(self._vertex_of[x]), find(self._vertex_of[y])
            if rx != ry:
                parent[rx] = ry
        groups: dict[int, set[int]] = {}
        for vi in labels:
            groups.setdefault(find(vi), set()).add(vi)
        out = []
        for root in sorted(groups, key=lambda r: min(self.vertices[v][0] for v in groups[r])):
            vis = groups[root]
            keep = {h for vi in vis for h in self.vertices[vi]}
            removed = set(range(1, self.half_edge_count + 1)) - keep
            cycles = [list(self.vertices[vi]) for vi in sorted(vis)]
            out.append(self._rebuild(cycles, removed))
        return out

    def underlying_multigraph(self):
        """The abstract multigraph: vertex indices joined by the edge pairs."""
        from .multigraph import MultiGraph

        return MultiGraph(
            self.vertex_count,
            tuple(
                (self._vertex_of[a], self._vertex_of[b], ei)
                for ei, (a, b) in enumerate(self.edges)
            ),
        )

    # -- misc -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RibbonGraph)
            and self.sigma0 == other.sigma0
            and self.sigma1 == other.sigma1
            and self.edge_order == other.edge_order
        )

    def __hash__(self) -> int:
        return hash((self.sigma0, self.sigma1, self.edge_order))

    def __repr__(self) -> str:
        return (
            f"RibbonGraph(sigma0={self.sigma0.cycle_string()}, "
            f"sigma1={self.sigma1.cycle_string()})"
        )


@dataclass(frozen=True)
class SpanningSubgraph:
    """A parent graph together with an edge subset and its derived counts."""

    parent: RibbonGraph = field(repr=False)
    edges: frozenset[int]
    components: int
    edge_count: int
    faces: int
    nullity: int
    genus: int

    def bitstring(self, order: Sequence[int] | None = None) -> str:
        return self.parent.bitstring(self.edges, order)

    def boundary_components(self) -> list[tuple[int, ...]]:
        return self.parent.boundary_components(self.edges)

    @property
    def is_quasi_tree(self) -> bool:
        return self.faces == 1 and self.components == 1


@dataclass(frozen=True)
class RestrictedSubgraph:
    """Standalone restriction of a spanning subgraph.

    ``graph`` is None when no edges were kept; ``isolated_vertices`` counts
    parent vertices whose half-edges were all removed (plus the trivial
    vertex itself, which has none).  Each isolated vertex contributes one
    face, one component and genus zero.
    """

    graph: RibbonGraph | None
    isolated_vertices: int
    relabeling: dict[int, int] = field(repr=False)

    @property
    def face_count(self) -> int:
        inner = self.graph.counts().faces if self.graph is not None else 0
        return inner + self.isolated_vertices

    @property
    def component_count(self) -> int:
        inner = self.graph.counts().components if self.graph is not None else 0
        return inner + self.isolated_vertices

    @property
    def genus(self) -> int:
        return self.graph.counts().genus if self.graph is not None else 0


def build_ribbon_graph(
    sigma0_cycles: Iterable[Iterable[int]],
    sigma1_pairs: Iterable[Iterable[int]],
    edge_order: Sequence[int] | None = None,
) -> RibbonGraph:
    """Validate cycle/pair data and build a :class:`RibbonGraph`.

    ``sigma0_cycles`` must partition ``{1, ..., 2n}`` exactly (vertices of
    degree one appear as singleton cycles); ``sigma1_pairs`` must be a
    perfect matching of the same labels.  The empty inputs build the
    trivial one-vertex graph.  Disconnectedness is allowed and exposed as
    :attr:`RibbonGraph.is_connected`, not an error, so that polynomial
    multiplicativity over disjoint unions can apply.
    """
    pairs = [tuple(p) for p in sigma1_pairs]
    seen_pair_labels: set[int] = set()
    for p in pairs:
        if len(p) != 2 or p[0] == p[1]:
            raise NotInvolution(f"pair {p!r} does not join two distinct half-edges")
        for label in p:
            if label in seen_pair_labels:
                raise NotInvolution(f"half-edge {label} appears in two pairs")
            seen_pair_labels.add(label)
    n2 = 2 * len(pairs)
    if seen_pair_labels and seen_pair_labels != set(range(1, n2 + 1)):
        raise NotInvolution(
            f"pairs must match exactly the labels 1..{n2}, got {sorted(seen_pair_labels)}"
        )

    cycles = [list(c) for c in sigma0_cycles if list(c)]
    seen_cycle_labels: set[int] = set()
    for cycle in cycles:
        for label in cycle:
            if label in seen_cycle_labels:
                raise NotPartition(f"half-edge {label} appears in two vertex cycles")
            seen_cycle_labels.add(label)
    if seen_cycle_labels != set(range(1, n2 + 1)):
        missing = sorted(set(range(1, n2 + 1)) - seen_cycle_labels)
        extra = sorted(seen_cycle_labels - set(range(1, n2 + 1)))
        raise NotPartition(
            f"vertex cycles must partition 1..{n2}; missing {missing}, foreign {extra}"
        )

    sigma0 = Perm.from_cycles(cycles, n2)
    sigma1 = Perm.from_cycles(pairs, n2)
    return RibbonGraph(sigma0, sigma1, edge_order=edge_order)


def disjoint_union(a: RibbonGraph, b: RibbonGraph) -> RibbonGraph:
    """The disjoint union, with ``b``'s labels shifted above ``a``'s."""
    if a.is_trivial or b.is_trivial:
        raise ValueError("the trivial isolated vertex cannot join a disjoint union")
    shift = a.half_edge_count
    cycles = [list(c) for c in a.vertices] + [
        [h + shift for h in c] for c in b.vertices
    ]
    pairs = [list(p) for p in a.edges] + [[x + shift, y + shift] for x, y in b.edges]
    order = list(a.edge_order) + [ei + len(a.edges) for ei in b.edge_order]
    return build_ribbon_graph(cycles, pairs, edge_order=order)


def graph_from_json(data: str | dict) -> RibbonGraph:
    """Parse the on-disk graph format.

    The document carries ``sigma0`` (list of cycles), ``sigma1`` (list of
    two-element lists) and optionally ``edge_order``, a list of 1-based edge
    numbers from lowest-ordered to highest.  Half-edge labels are 1-based.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("graph document must be a JSON object")
    try:
        sigma0 = data["sigma0"]
        sigma1 = data["sigma1"]
    except KeyError as exc:
        raise ValueError(f"graph document is missing field {exc}") from None
    order = data.get("edge_order")
    if order is not None:
        order = [int(i) - 1 for i in order]
    return build_ribbon_graph(sigma0, sigma1, edge_order=order)


def graph_to_json_dict(graph: RibbonGraph) -> dict:
    out: dict = {
        "sigma0": [list(c) for c in graph.vertices] if not graph.is_trivial else [],
        "sigma1": [list(p) for p in graph.edges],
    }
    if graph.edge_order != tuple(range(len(graph.edges))):
        out["edge_order"] = [ei + 1 for ei in graph.edge_order]
    return out
