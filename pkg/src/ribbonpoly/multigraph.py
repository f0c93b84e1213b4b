"""Abstract multigraphs with loops and parallel edges.

These serve two roles: the underlying graph of a ribbon graph, and the
contracted graph attached to a quasi-tree (components of its internally
dead subgraph joined by the internally live edges).  The module computes
the two-variable Tutte polynomial by deletion/contraction (stored in the
X and Y slots of :class:`~ribbonpoly.mpoly.MPoly`), the defining sum over
spanning subgraphs as an independent cross-check, and all spanning trees
with Tutte's internal/external activities.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import Disconnected
from .mpoly import MPoly, X, Y

Edge = tuple[int, int, int]  # endpoint, endpoint, edge id


def _component_count(vertex_count: int, links: Iterable[tuple[int, int]]) -> int:
    parent = list(range(vertex_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    count = vertex_count
    for u, v in links:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


@dataclass(frozen=True)
class SpanningTreeActivities:
    """A spanning tree with its Tutte-active edge sets.

    A tree edge is internally active when it is the lowest-ordered edge of
    the cut it determines; a non-tree edge is externally active when it is
    the lowest-ordered edge of the cycle it closes (a loop closes the
    one-edge cycle consisting of itself, so loops are always externally
    active).
    """

    edges: frozenset[int]
    internally_active: frozenset[int]
    externally_active: frozenset[int]

    @property
    def internal_count(self) -> int:
        return len(self.internally_active)

    @property
    def external_count(self) -> int:
        return len(self.externally_active)


@dataclass(frozen=True)
class MultiGraph:
    """An undirected multigraph on vertices ``0..vertex_count-1``.

    Each edge is ``(u, v, edge_id)``; loops have ``u == v``.  Edge ids give
    the default total order and tie activities back to the owning ribbon
    graph's edges.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a multigraph needs at least one vertex")
        ids = set()
        for u, v, eid in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) endpoint out of range")
            if eid in ids:
                raise ValueError(f"duplicate edge id {eid}")
            ids.add(eid)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def component_count(self) -> int:
        return _component_count(self.vertex_count, ((u, v) for u, v, _ in self.edges))

    @property
    def is_connected(self) -> bool:
        return self.component_count() == 1

    def _rank_of(self, order: Sequence[int] | None) -> dict[int, int]:
        ids = sorted(eid for _, _, eid in self.edges)
        if order is None:
            order = ids
        else:
            order = list(order)
            if sorted(order) != ids:
                raise ValueError("order must list each edge id exactly once")
        return {eid: pos for pos, eid in enumerate(order)}

    # -- Tutte polynomial ----------------------------------------------

    def tutte_polynomial(self, order: Sequence[int] | None = None) -> MPoly:
        """Tutte polynomial via deletion/contraction, in the X/Y slots.

        Recurses on the highest-ordered edge that is neither a loop nor a
        bridge; the terminal graphs contribute x^bridges * y^loops.  The
        result is independent of the order; fixing it keeps runs
        deterministic.  Disconnected graphs give the product over their
        components (isolated vertices contribute the empty product 1).
        """
        rank = self._rank_of(order)
        return _tutte_recursive(self.vertex_count, self.edges, rank)

    def tutte_by_subgraph_sum(self) -> MPoly:
        """The defining sum over all spanning subgraphs; an oracle for small graphs."""
        k_g = self.component_count()
        x_minus_1 = X - 1
        y_minus_1 = Y - 1
        total = MPoly.zero()
        for size in range(len(self.edges) + 1):
            for subset in combinations(self.edges, size):
                k_w = _component_count(self.vertex_count, ((u, v) for u, v, _ in subset))
                nullity = k_w - self.vertex_count + len(subset)
                total = total + x_minus_1 ** (k_w - k_g) * y_minus_1**nullity
        return total

    # -- spanning trees and activities ------------------------------------

    def spanning_trees_with_activities(
        self, order: Sequence[int] | None = None
    ) -> list[SpanningTreeActivities]:
        """All spanning trees, each with its Tutte-active edge sets.

        The sum of x^(internal count) * y^(external count) over the result
        reproduces the Tutte polynomial.
        """
        if not self.is_connected:
            raise Disconnected("spanning trees require a connected multigraph")
        rank = self._rank_of(order)
        non_loops = [e for e in self.edges if e[0] != e[1]]
        trees = []
        for combo in combinations(non_loops, self.vertex_count - 1):
            if _component_count(self.vertex_count, ((u, v) for u, v, _ in combo)) == 1:
                trees.append(combo)
        out = []
        for combo in trees:
            tree_ids = frozenset(eid for _, _, eid in combo)
            out.append(
                SpanningTreeActivities(
                    tree_ids,
                    self._internally_active(combo, rank),
                    self._externally_active(combo, tree_ids, rank),
                )
            )
        return out

    def _internally_active(self, tree: Sequence[Edge], rank: dict[int, int]) -> frozenset[int]:
        active = set()
        for u0, v0, eid in tree:
            rest = [e for e in tree if e[2] != eid]
            side = self._reachable(u0, rest)
            cut_ranks = [
                rank[j]
                for uu, vv, j in self.edges
                if (uu in side) != (vv in side)
            ]
            if rank[eid] == min(cut_ranks):
                active.add(eid)
        return frozenset(active)

    def _externally_active(
        self, tree: Sequence[Edge], tree_ids: frozenset[int], rank: dict[int, int]
    ) -> frozenset[int]:
        adjacency: dict[int, list[tuple[int, int]]] = {v: [] for v in range(self.vertex_count)}
        for u, v, eid in tree:
            adjacency[u].append((v, eid))
            adjacency[v].append((u, eid))
        active = set()
        for u, v, eid in self.edges:
            if eid in tree_ids:
                continue
            if u == v:
                active.add(eid)  # the cycle is the loop alone
                continue
            cycle_ranks = [rank[j] for j in self._tree_path(adjacency, u, v)]
            if rank[eid] < min(cycle_ranks):
                active.add(eid)
        return frozenset(active)

    def _reachable(self, start: int, edges: Sequence[Edge]) -> set[int]:
        adjacency: dict[int, list[int]] = {v: [] for v in range(self.vertex_count)}
        for u, v, _ in edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        seen = {start}
        frontier = [start]
        while frontier:
            node = frontier.pop()
            for nxt in adjacency[node]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen

    @staticmethod
    def _tree_path(adjacency: dict[int, list[tuple[int, int]]], u: int, v: int) -> list[int]:
        """Edge ids on the unique tree path from u to v."""
        previous: dict[int, tuple[int, int]] = {}
        seen = {u}
        frontier = [u]
        while frontier:
            node = frontier.pop()
            if node == v:
                break
            for nxt, eid in adjacency[node]:
                if nxt not in seen:
                    seen.add(nxt)
                    previous[nxt] = (node, eid)
                    frontier.append(nxt)
        path = []
        node = v
        while node != u:
            node, eid = previous[node]
            path.append(eid)
        return path


def _tutte_recursive(vertex_count: int, edges: tuple[Edge, ...], rank: dict[int, int]) -> MPoly:
    loops = 0
    non_loop_edges = []
    for e in edges:
        if e[0] == e[1]:
            loops += 1
        else:
            non_loop_edges.append(e)
    base_components = _component_count(vertex_count, ((u, v) for u, v, _ in edges))
    bridges = 0
    candidates = []
    for e in non_loop_edges:
        remaining = [(u, v) for u, v, eid in edges if eid != e[2]]
        if _component_count(vertex_count, remaining) > base_components:
            bridges += 1
        else:
            candidates.append(e)
    if not candidates:
        return X**bridges * Y**loops
    pivot = max(candidates, key=lambda e: rank[e[2]])
    deleted = tuple(e for e in edges if e[2] != pivot[2])
    u0, v0 = pivot[0], pivot[1]
    merged = tuple(
        (u0 if u == v0 else u, u0 if v == v0 else v, eid) for u, v, eid in deleted
    )
    return _tutte_recursive(vertex_count, deleted, rank) + _tutte_recursive(
        vertex_count - 1, _drop_vertex(merged, v0), rank
    )


def _drop_vertex(edges: tuple[Edge, ...], gone: int) -> tuple[Edge, ...]:
    """Compact vertex labels after merging ``gone`` away (labels above shift down)."""
    return tuple(
        (u - 1 if u > gone else u, v - 1 if v > gone else v, eid) for u, v, eid in edges
    )
