"""Reference computations of the three-variable ribbon-graph polynomial.

Four independent methods produce the same element of Z[X, Y, Z]:

* ``state_sum``: the defining sum of (X-1)^(k(H)-k) Y^n(H) Z^g(H) over all
  2^e spanning subgraphs (optionally restricted to the interval of a
  partial resolution);
* ``spanning_tree_expansion``: for each spanning tree of the underlying
  graph, X^(internally active) times the subgraph sum over subsets of the
  externally active edges;
* ``deletion_contraction``: delete/contract on the highest-ordered
  non-loop edge, with X for bridges and a direct subgraph sum once only
  one vertex remains, multiplicative over disjoint unions;
* the quasi-tree expansion from :mod:`ribbonpoly.quasitrees`, with one
  summand per quasi-tree instead of one per subgraph.

``verify_all`` runs every applicable method, insists on exact agreement,
and checks the Tutte specialization C(X, Y, 1) = T(X, 1+Y).
``duality_check`` confirms that quasi-trees of the dual are the edge
complements with complementary genus, and samples the polynomial duality
identity at exact rational points on the surface (X-1)YZ = 1.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import BijectionFailure, Disconnected, IdentityFailure, Mismatch, SizeLimit
from .mpoly import MPoly, ONE, X, Y
from .quasitrees import (
    PartialResolution,
    enumerate_quasi_trees,
    genus_histogram,
    quasi_tree_weight,
)
from .ribbon import RibbonGraph

DEFAULT_SUBGRAPH_CAP = 24


class Method(str, Enum):
    STATE_SUM = "statesum"
    SPANNING_TREE = "tree"
    RECURSIVE = "recursive"
    QUASI_TREE = "quasitree"


@dataclass(frozen=True)
class BrtResult:
    """A computed polynomial plus how it was obtained.

    ``term_count`` counts summands in the method's own currency: spanning
    subgraphs for the state sum, (tree, external subset) pairs for the
    spanning-tree expansion, base-case subgraphs for the recursion, and
    quasi-trees for the quasi-tree expansion.
    """

    polynomial: MPoly
    method: Method
    term_count: int
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "polynomial": str(self.polynomial),
            "term_count": self.term_count,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


def _fixed_states(
    interval: Mapping[int, int] | PartialResolution | None, edge_count: int
) -> dict[int, int]:
    if interval is None:
        return {}
    if isinstance(interval, PartialResolution):
        fixed = {e: s for e, s in enumerate(interval.states) if s is not None}
    else:
        fixed = dict(interval)
    for eid, value in fixed.items():
        if not 0 <= eid < edge_count or value not in (0, 1):
            raise ValueError(f"bad interval entry {eid}: {value}")
    return fixed


def state_sum(
    graph: RibbonGraph,
    cap: int = DEFAULT_SUBGRAPH_CAP,
    interval: Mapping[int, int] | PartialResolution | None = None,
) -> BrtResult:
    """Sum over all spanning subgraphs (or those inside ``interval``).

    Works for disconnected graphs.  Raises
    :class:`~ribbonpoly.errors.SizeLimit` when more than 2^cap subgraphs
    would be expanded.
    """
    start = time.perf_counter()
    fixed = _fixed_states(interval, graph.edge_count)
    free = [ei for ei in range(graph.edge_count) if ei not in fixed]
    if len(free) > cap:
        raise SizeLimit(f"{len(free)} free edges exceed the cap of {cap}")
    base = [ei for ei, value in fixed.items() if value == 1]
    k_graph = graph.counts().components
    x_minus_1_powers = [
        ((X - 1) ** j) for j in range(graph.counts().vertices + 1)
    ]
    acc: dict[tuple[int, int, int, int], int] = {}
    for mask in range(1 << len(free)):
        subset = base + [free[i] for i in range(len(free)) if mask >> i & 1]
        counts = graph.subgraph_counts(subset)
        for (a, _, _, _), coeff in x_minus_1_powers[counts.components - k_graph].items():
            key = (a, counts.nullity, counts.genus, 0)
            total = acc.get(key, 0) + coeff
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
    return BrtResult(MPoly(acc), Method.STATE_SUM, 1 << len(free), time.perf_counter() - start)


@dataclass(frozen=True)
class SpanningTreeRow:
    """One spanning tree's contribution to the tree expansion.

    ``activity`` uses the same symbols as quasi-tree activities but means
    Tutte's active/inactive: L/D for tree edges, ℓ/d for the rest, in
    order position.  ``inner_weight`` is the sum of Y^n Z^g over subsets
    of the externally active edges joined to the tree.
    """

    edges: frozenset[int]
    activity: str
    internal_count: int
    external_count: int
    inner_weight: MPoly

    @property
    def x_factor(self) -> MPoly:
        return MPoly.monomial(1, x=self.internal_count)


def spanning_tree_rows(
    graph: RibbonGraph, order: Sequence[int] | None = None
) -> list[SpanningTreeRow]:
    """Per-tree data of the spanning-tree expansion, in enumeration order."""
    if not graph.is_connected:
        raise Disconnected("the spanning-tree expansion requires a connected graph")
    order = graph.resolve_edge_order(order)
    trees = graph.underlying_multigraph().spanning_trees_with_activities(order)
    rows = []
    for tree in trees:
        external = sorted(tree.externally_active)
        inner: dict[tuple[int, int, int, int], int] = {}
        for size in range(len(external) + 1):
            for extra in combinations(external, size):
                counts = graph.subgraph_counts(tree.edges | frozenset(extra))
                key = (0, counts.nullity, counts.genus, 0)
                inner[key] = inner.get(key, 0) + 1
        symbols = []
        for eid in order:
            if eid in tree.edges:
                symbols.append("L" if eid in tree.internally_active else "D")
            else:
                symbols.append("ℓ" if eid in tree.externally_active else "d")
        rows.append(
            SpanningTreeRow(
                edges=tree.edges,
                activity="".join(symbols),
                internal_count=len(tree.internally_active),
                external_count=len(tree.externally_active),
                inner_weight=MPoly(inner),
            )
        )
    return rows


def spanning_tree_expansion(
    graph: RibbonGraph, order: Sequence[int] | None = None
) -> BrtResult:
    """For every spanning tree T: X^i(T) times the subgraph sum over
    subsets of T's externally active edges (genus and nullity taken in the
    ribbon graph)."""
    start = time.perf_counter()
    total = MPoly.zero()
    summands = 0
    for row in spanning_tree_rows(graph, order):
        summands += 1 << row.external_count
        total = total + row.x_factor * row.inner_weight
    return BrtResult(total, Method.SPANNING_TREE, summands, time.perf_counter() - start)


def deletion_contraction(graph: RibbonGraph) -> BrtResult:
    """Recursive evaluation, multiplicative over connected components.

    Recurses on the highest-ordered non-loop edge; a bridge contributes a
    factor X and is contracted.  Once a component has a single vertex the
    remaining loops are expanded by a direct subgraph sum.
    """
    start = time.perf_counter()
    base_summands = 0

    def one_vertex_sum(g: RibbonGraph) -> MPoly:
        nonlocal base_summands
        acc: dict[tuple[int, int, int, int], int] = {}
        edges = list(range(g.edge_count))
        for mask in range(1 << len(edges)):
            subset = [edges[i] for i in range(len(edges)) if mask >> i & 1]
            counts = g.subgraph_counts(subset)
            key = (0, counts.nullity, counts.genus, 0)
            acc[key] = acc.get(key, 0) + 1
        base_summands += 1 << len(edges)
        return MPoly(acc)

    def recurse(g: RibbonGraph) -> MPoly:
        if g.vertex_count == 1:
            return one_vertex_sum(g)
        # connected with >= 2 vertices, so a non-loop edge exists
        rank = {eid: pos for pos, eid in enumerate(g.edge_order)}
        pivot = max(
            (ei for ei in range(g.edge_count) if not g.is_loop(ei)),
            key=rank.__getitem__,
        )
        rest = [ei for ei in range(g.edge_count) if ei != pivot]
        if g.subgraph_counts(rest).components > 1:  # bridge
            return X * recurse(g.contract_edge(pivot))
        return recurse(g.delete_edge(pivot)) + recurse(g.contract_edge(pivot))

    total = ONE
    for component in graph.connected_components():
        total = total * recurse(component)
    return BrtResult(total, Method.RECURSIVE, base_summands, time.perf_counter() - start)


def quasi_tree_sum(graph: RibbonGraph, order: Sequence[int] | None = None) -> BrtResult:
    """The quasi-tree expansion wrapped with its summand count and timing."""
    start = time.perf_counter()
    quasi_trees = enumerate_quasi_trees(graph, order)
    total = MPoly.zero()
    for qt in quasi_trees:
        total = total + quasi_tree_weight(qt).expanded
    return BrtResult(total, Method.QUASI_TREE, len(quasi_trees), time.perf_counter() - start)


def compute(
    graph: RibbonGraph,
    method: Method | str,
    order: Sequence[int] | None = None,
    cap: int = DEFAULT_SUBGRAPH_CAP,
) -> BrtResult:
    method = Method(method)
    if method is Method.STATE_SUM:
        return state_sum(graph, cap)
    if method is Method.SPANNING_TREE:
        return spanning_tree_expansion(graph, order)
    if method is Method.RECURSIVE:
        return deletion_contraction(graph)
    return quasi_tree_sum(graph, order)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of running every applicable method on one graph."""

    results: dict[Method, BrtResult]
    tutte_specialization_ok: bool
    quasi_tree_summands: int | None
    state_sum_summands: int

    @property
    def polynomial(self) -> MPoly:
        return self.results[Method.STATE_SUM].polynomial

    @property
    def quasi_tree_has_fewer_summands(self) -> bool | None:
        if self.quasi_tree_summands is None:
            return None
        return self.quasi_tree_summands <= self.state_sum_summands

    def to_json_dict(self) -> dict:
        return {
            "methods": {m.value: r.to_json_dict() for m, r in self.results.items()},
            "equal": True,
            "tutte_specialization_ok": self.tutte_specialization_ok,
            "quasi_tree_summands": self.quasi_tree_summands,
            "state_sum_summands": self.state_sum_summands,
        }


def verify_all(
    graph: RibbonGraph,
    order: Sequence[int] | None = None,
    cap: int = DEFAULT_SUBGRAPH_CAP,
) -> VerifyReport:
    """Run all methods, demand exact agreement, and check the Tutte slice.

    The two expansion methods need a connected graph and are skipped
    otherwise.  Raises :class:`~ribbonpoly.errors.Mismatch` with both
    polynomials on any disagreement, including the specialization
    C(X, Y, 1) = T(X, 1+Y) against the underlying multigraph.
    """
    results: dict[Method, BrtResult] = {Method.STATE_SUM: state_sum(graph, cap)}
    results[Method.RECURSIVE] = deletion_contraction(graph)
    if graph.is_connected:
        results[Method.SPANNING_TREE] = spanning_tree_expansion(graph, order)
        results[Method.QUASI_TREE] = quasi_tree_sum(graph, order)
    reference = results[Method.STATE_SUM]
    for method, result in results.items():
        if result.polynomial != reference.polynomial:
            raise Mismatch(
                Method.STATE_SUM.value,
                str(reference.polynomial),
                method.value,
                str(result.polynomial),
            )
    sliced = reference.polynomial.substitute(z=1)
    tutte_slice = graph.underlying_multigraph().tutte_polynomial().substitute(y=ONE + Y)
    if sliced != tutte_slice:
        raise Mismatch("statesum at Z=1", str(sliced), "Tutte at (X, 1+Y)", str(tutte_slice))
    quasi = results.get(Method.QUASI_TREE)
    return VerifyReport(
        results=results,
        tutte_specialization_ok=True,
        quasi_tree_summands=quasi.term_count if quasi else None,
        state_sum_summands=reference.term_count,
    )


@dataclass(frozen=True)
class DualityReport:
    """Outcome of the dual-graph checks (constructed only on success)."""

    genus_histogram: dict[int, int]
    dual_genus_histogram: dict[int, int]
    sample_points: tuple[tuple[Fraction, Fraction, Fraction], ...]
    bijection_ok: bool
    identity_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "genus_histogram": {str(g): c for g, c in self.genus_histogram.items()},
            "dual_genus_histogram": {
                str(g): c for g, c in self.dual_genus_histogram.items()
            },
            "sample_points": [[str(x), str(y), str(z)] for x, y, z in self.sample_points],
            "bijection_ok": self.bijection_ok,
            "identity_ok": self.identity_ok,
        }


def duality_check(
    graph: RibbonGraph,
    point_count: int = 20,
    seed: int = 0,
    cap: int = DEFAULT_SUBGRAPH_CAP,
) -> DualityReport:
    """Validate the two duality statements for a connected graph.

    (a) complementing edge sets is a genus-reversing bijection between the
    quasi-trees of the graph and of its dual, so the genus histogram
    reverses; (b) duality exchanges the rank base (X-1) with the nullity
    variable Y: with g the graph's genus and C, C* the polynomials of the
    graph and dual, (X-1)^g C(X,Y,Z) equals Y^g C*(1+Y, X-1, Z) on the
    surface (X-1)YZ = 1, sampled at ``point_count`` exact rational points
    drawn from a seeded generator (poles excluded).  (The loop/bridge dual
    pair, 1+Y vs X, shows a literal argument swap cannot hold.)
    """
    if not graph.is_connected:
        raise Disconnected("duality check requires a connected graph")
    total_genus = graph.genus
    originals = enumerate_quasi_trees(graph)
    dual_graph = graph.dual()
    duals = enumerate_quasi_trees(dual_graph)
    if len(originals) != len(duals):
        raise BijectionFailure(
            f"{len(originals)} quasi-trees vs {len(duals)} in the dual"
        )
    genus_by_edges = {qt.edges: qt.genus for qt in duals}
    all_edges = frozenset(range(graph.edge_count))
    for qt in originals:
        complement = all_edges - qt.edges
        partner_genus = genus_by_edges.get(complement)
        if partner_genus is None:
            raise BijectionFailure(
                f"complement of quasi-tree {qt.bitstring()} is not a dual quasi-tree"
            )
        if partner_genus != total_genus - qt.genus:
            raise BijectionFailure(
                f"quasi-tree {qt.bitstring()} of genus {qt.genus} pairs with dual "
                f"genus {partner_genus}, expected {total_genus - qt.genus}"
            )
    histogram = genus_histogram(originals)
    dual_histogram = genus_histogram(duals)

    poly = state_sum(graph, cap).polynomial
    dual_poly = state_sum(dual_graph, cap).polynomial
    rng = random.Random(seed)
    points: list[tuple[Fraction, Fraction, Fraction]] = []
    seen: set[tuple[Fraction, Fraction]] = set()
    while len(points) < point_count:
        x = Fraction(rng.randint(-6, 7), rng.randint(1, 4))
        y = Fraction(rng.randint(-6, 7), rng.randint(1, 4))
        if x == 1 or y == 0 or (x, y) in seen:
            continue
        seen.add((x, y))
        z = 1 / ((x - 1) * y)
        points.append((x, y, z))
    for x, y, z in points:
        lhs = (x - 1) ** total_genus * poly.evaluate(x=x, y=y, z=z)
        rhs = y**total_genus * dual_poly.evaluate(x=1 + y, y=x - 1, z=z)
        if lhs != rhs:
            raise IdentityFailure(
                f"duality identity fails at X={x}, Y={y}, Z={z}: {lhs} != {rhs}"
            )
    return DualityReport(
        genus_histogram=histogram,
        dual_genus_histogram=dual_histogram,
        sample_points=tuple(points),
        bijection_ok=True,
        identity_ok=True,
    )
