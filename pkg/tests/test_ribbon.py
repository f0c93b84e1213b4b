import itertools
import json
import random

import pytest

from ribbonpoly import (
    Disconnected,
    LoopContraction,
    NotInvolution,
    NotPartition,
    build_ribbon_graph,
    disjoint_union,
    graph_from_json,
    graph_to_json_dict,
)
from ribbonpoly.generate import random_connected_ribbon_graph


def all_subsets(graph):
    ids = range(graph.edge_count)
    return itertools.chain.from_iterable(
        itertools.combinations(ids, size) for size in range(graph.edge_count + 1)
    )


# -- construction and counts ------------------------------------------------


def test_planar_theta_faces(planar_theta):
    assert planar_theta.sigma2.orbits() == [(1,), (2, 4, 6), (3, 5)]
    assert planar_theta.counts() == (2, 3, 3, 1, 0, 2)


def test_torus_theta_faces(torus_theta):
    assert torus_theta.sigma2.orbits() == [(1, 5, 2, 3, 6, 4)]
    assert torus_theta.counts() == (2, 3, 1, 1, 1, 2)


def test_genus2_graph_data(genus2_graph):
    g = genus2_graph
    assert g.sigma2.orbit_of(1) == (1, 6, 7, 10, 12, 3, 2, 4, 9, 8, 11, 5)
    assert g.counts() == (3, 6, 1, 1, 2, 4)
    assert g.edges == ((1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12))


def test_triple_composes_to_identity(genus2_graph, torus_theta, planar_theta):
    for g in (genus2_graph, torus_theta, planar_theta):
        for i in range(1, g.half_edge_count + 1):
            assert g.sigma0(g.sigma1(g.sigma2(i))) == i


def test_one_loop_counts(one_loop):
    assert one_loop.counts() == (1, 1, 2, 1, 0, 1)


def test_trivial_graph():
    trivial = build_ribbon_graph([], [])
    assert trivial.is_trivial
    assert trivial.counts() == (1, 0, 1, 1, 0, 0)


def test_validation_errors():
    with pytest.raises(NotInvolution):
        build_ribbon_graph([[1, 2]], [[1, 1]])
    with pytest.raises(NotInvolution):
        build_ribbon_graph([[1, 2, 3, 4]], [[1, 2], [2, 3]])
    with pytest.raises(NotInvolution):
        build_ribbon_graph([[1, 2]], [[1, 3]])
    with pytest.raises(NotPartition):
        build_ribbon_graph([[1, 2], [2, 3]], [[1, 2], [3, 4]])
    with pytest.raises(NotPartition):
        build_ribbon_graph([[1, 2]], [[1, 2], [3, 4]])


def test_disconnected_is_flag_not_error(one_loop, torus_theta):
    union = disjoint_union(one_loop, torus_theta)
    assert not union.is_connected
    assert union.counts().components == 2


# -- boundary walks and the restriction oracle ------------------------------


def test_boundary_full_subgraph(genus2_graph):
    cycles = genus2_graph.boundary_components(range(6))
    assert cycles == [(1, 5, 11, 8, 9, 4, 2, 3, 12, 10, 7, 6)]


def test_boundary_named_subgraph(genus2_graph):
    subset = genus2_graph.subset_from_bitstring("011101")
    assert genus2_graph.boundary_components(subset) == [
        (1, 3, 12, 10, 4, 2, 5, 11, 8, 9, 7, 6)
    ]


def test_boundary_empty_subgraph_is_vertex_rotations(genus2_graph, torus_theta):
    for g in (genus2_graph, torus_theta):
        assert g.boundary_components([]) == list(g.sigma0.orbits())
        assert g.face_count([]) == g.counts().vertices


def test_restrict_examples(genus2_graph):
    empty = genus2_graph.restrict([])
    assert empty.graph is None
    assert empty.isolated_vertices == 3
    assert empty.face_count == 3

    quasi = genus2_graph.restrict(genus2_graph.subset_from_bitstring("001010"))
    assert quasi.isolated_vertices == 0
    assert quasi.face_count == 1


def test_restrict_loop_of_two_loop_graph(two_interleaved_loops):
    restricted = two_interleaved_loops.restrict([0])
    assert restricted.isolated_vertices == 0
    assert restricted.face_count == 2
    assert restricted.genus == 0
    assert restricted.graph.counts().vertices == 1


def _check_subgraph_counts_against_restriction(graph):
    for subset in all_subsets(graph):
        counts = graph.subgraph_counts(subset)
        restricted = graph.restrict(subset)
        assert counts.faces == restricted.face_count
        assert counts.components == restricted.component_count
        assert counts.genus == restricted.genus
        assert counts.faces >= counts.components
        assert counts.nullity == counts.components - graph.counts().vertices + counts.edge_count
        assert len(graph.boundary_components(subset)) == counts.faces


def test_two_face_count_algorithms_agree_on_fixtures(
    genus2_graph, torus_theta, planar_theta, two_interleaved_loops, one_loop
):
    for graph in (genus2_graph, torus_theta, planar_theta, two_interleaved_loops, one_loop):
        _check_subgraph_counts_against_restriction(graph)


def test_two_face_count_algorithms_agree_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(25):
        graph = random_connected_ribbon_graph(rng, rng.randint(1, 7))
        _check_subgraph_counts_against_restriction(graph)


# -- deletion ----------------------------------------------------------------


def test_delete_edge_splices(torus_theta):
    smaller = torus_theta.delete_edge(1)  # {2, 6}
    assert smaller.counts().vertices == 2
    assert smaller.counts().edges == 2


def test_delete_only_loop_gives_trivial(one_loop):
    assert one_loop.delete_edge(0).is_trivial


def test_delete_from_worked_graph(genus2_graph):
    smaller = genus2_graph.delete_edge(5)  # {11, 12}
    counts = smaller.counts()
    assert (counts.vertices, counts.edges) == (3, 5)
    # orbit recount oracle: faces recomputed from the rebuilt triple
    assert counts.faces == smaller.sigma2.orbit_count()
    assert 2 * counts.genus == (
        2 * counts.components - counts.vertices + counts.edges - counts.faces
    )


def test_delete_changes_components_by_at_most_one():
    rng = random.Random(5)
    for _ in range(20):
        graph = random_connected_ribbon_graph(rng, rng.randint(2, 7))
        for eid in range(graph.edge_count):
            after = graph.delete_edge(eid).counts().components
            assert after in (1, 2)


# -- contraction ---------------------------------------------------------------


def test_contract_bridge_to_trivial(bridge_graph):
    assert bridge_graph.contract_edge(0).is_trivial


def test_contract_torus_theta_connector(torus_theta):
    # {1,3} is a loop there; contracting a connecting edge leaves one
    # vertex with two loops and the genus intact
    merged = torus_theta.contract_edge(1)  # {2, 6}
    counts = merged.counts()
    assert (counts.vertices, counts.edges, counts.genus) == (1, 2, 1)
    with pytest.raises(LoopContraction):
        torus_theta.contract_edge(0)  # {1, 3}


def test_contract_in_worked_graph(genus2_graph):
    merged = genus2_graph.contract_edge(3)  # {7, 8}
    counts = merged.counts()
    assert (counts.vertices, counts.edges, counts.genus) == (2, 5, 2)


def test_contract_preserves_components_and_genus():
    rng = random.Random(11)
    checked = 0
    while checked < 15:
        graph = random_connected_ribbon_graph(rng, rng.randint(2, 7))
        non_loops = [ei for ei in range(graph.edge_count) if not graph.is_loop(ei)]
        if not non_loops:
            continue
        before = graph.counts()
        merged = graph.contract_edge(non_loops[0])
        after = merged.counts()
        assert after.components == before.components
        assert after.genus == before.genus
        assert after.vertices == before.vertices - 1
        assert after.edges == before.edges - 1
        checked += 1


# -- duality ---------------------------------------------------------------------


def test_dual_counts(torus_theta, genus2_graph):
    d1 = torus_theta.dual().counts()
    assert (d1.vertices, d1.edges, d1.faces, d1.genus) == (1, 3, 2, 1)
    d2 = genus2_graph.dual().counts()
    assert (d2.vertices, d2.edges, d2.faces, d2.genus) == (1, 6, 3, 2)


def test_double_dual_profile(genus2_graph, torus_theta, planar_theta, one_loop):
    for graph in (genus2_graph, torus_theta, planar_theta, one_loop):
        assert graph.dual().dual().counts() == graph.counts()


def test_dual_swaps_vertices_and_faces_randomly():
    rng = random.Random(3)
    for _ in range(20):
        graph = random_connected_ribbon_graph(rng, rng.randint(1, 7))
        counts = graph.counts()
        dual_counts = graph.dual().counts()
        assert dual_counts.vertices == counts.faces
        assert dual_counts.faces == counts.vertices
        assert dual_counts.edges == counts.edges
        assert dual_counts.genus == counts.genus


def test_dual_requires_connected(one_loop):
    union = disjoint_union(one_loop, one_loop)
    with pytest.raises(Disconnected):
        union.dual()


# -- components, unions, orders, serialization ---------------------------------


def test_components_of_disjoint_union(one_loop, torus_theta):
    union = disjoint_union(torus_theta, one_loop)
    parts = union.connected_components()
    assert [p.counts() for p in parts] == [torus_theta.counts(), one_loop.counts()]


def test_bitstring_roundtrip(genus2_graph):
    subset = genus2_graph.subset_from_bitstring("011101")
    assert subset == frozenset({1, 2, 3, 5})
    assert genus2_graph.bitstring(subset) == "011101"
    swapped = (3, 1, 2, 0, 4, 5)
    assert genus2_graph.bitstring(subset, swapped) == "111001"


def test_edge_order_override_validation(genus2_graph):
    with pytest.raises(ValueError):
        genus2_graph.with_edge_order([0, 1])
    with pytest.raises(ValueError):
        genus2_graph.with_edge_order([0, 0, 1, 2, 3, 4])
    reordered = genus2_graph.with_edge_order([3, 1, 2, 0, 4, 5])
    assert reordered.edge_order == (3, 1, 2, 0, 4, 5)


def test_json_roundtrip(genus2_graph):
    doc = graph_to_json_dict(genus2_graph)
    assert graph_from_json(doc) == genus2_graph
    assert graph_from_json(json.dumps(doc)) == genus2_graph
    reordered = genus2_graph.with_edge_order([3, 1, 2, 0, 4, 5])
    doc2 = graph_to_json_dict(reordered)
    assert doc2["edge_order"] == [4, 2, 3, 1, 5, 6]
    assert graph_from_json(doc2) == reordered


def test_json_rejects_bad_documents():
    with pytest.raises(ValueError):
        graph_from_json({"sigma0": [[1, 2]]})
    with pytest.raises(ValueError):
        graph_from_json("[1, 2]")


def test_inherited_edge_order_after_delete(genus2_graph):
    reordered = genus2_graph.with_edge_order([5, 1, 2, 0, 4, 3])
    smaller = reordered.delete_edge(0)
    # surviving old ids (1,2,3,4,5) compress to (0,1,2,3,4)
    assert smaller.edge_order == (4, 0, 1, 3, 2)
