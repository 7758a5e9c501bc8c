"""Mesoscale structure: edge traffic, divisive clustering, bisection,
similarity, and three-node pattern statistics.

The directed pattern census is cross-checked against a dyad-and-degree
invariant classifier that shares no code with the permutation table in
the package.
"""

import itertools

import numpy as np
import pytest

from graphphys import (
    DegenerateEnsembleError,
    DirectedUnsupportedError,
    DisconnectedError,
    EmptyGraphError,
    MOTIF_ALIASES,
    OutOfRangeError,
    build_graph,
    complete_graph,
    cosine_similarity_matrix,
    cycle_graph,
    edge_betweenness,
    girvan_newman,
    modularity,
    motif_census,
    motif_zscore,
    path_graph,
    spectral_bisection,
    star_graph,
)
from graphphys.communities import _double_edge_swap

from oracles import (
    classify_triad_by_invariants,
    edge_betweenness_by_paths,
    random_edge_set,
)


def _barbell():
    """Two triangles joined by a single bridge edge (2, 3)."""
    return build_graph(
        6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
    )


# ---------------------------------------------------------------------------
# edge traffic
# ---------------------------------------------------------------------------


def test_single_edge_carries_its_pair():
    assert edge_betweenness(path_graph(2)) == {(0, 1): 1.0}


def test_bridge_carries_all_cross_traffic():
    scores = edge_betweenness(_barbell())
    assert scores[(2, 3)] == pytest.approx(9.0)  # all 3 x 3 cross pairs
    assert max(scores, key=scores.get) == (2, 3)


def test_edge_betweenness_matches_path_enumeration(rng):
    for directed in (False, True):
        for _ in range(10):
            n = int(rng.integers(4, 9))
            edges = random_edge_set(rng, n, 0.4, directed=directed)
            if not edges:
                continue
            g = build_graph(n, edges, directed=directed)
            got = edge_betweenness(g)
            want = edge_betweenness_by_paths(n, edges, directed=directed)
            assert set(got) == set(want) | set(got)
            for key, val in want.items():
                assert got[key] == pytest.approx(val, abs=1e-10)


# ---------------------------------------------------------------------------
# modularity
# ---------------------------------------------------------------------------


def test_two_disjoint_triangles_split_scores_one_half():
    g = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert modularity(g, [(0, 1, 2), (3, 4, 5)]) == pytest.approx(0.5)


def test_whole_graph_as_one_group_scores_zero():
    assert modularity(_barbell(), [range(6)]) == pytest.approx(0.0)


def test_barbell_triangle_split_value():
    # inside fractions 3/7 each, degree fractions (7/14)^2 each
    want = 2 * (3 / 7 - 0.25)
    assert modularity(_barbell(), [(0, 1, 2), (3, 4, 5)]) == pytest.approx(want)
    assert want == pytest.approx(5 / 14)


def test_modularity_validates_the_partition():
    g = _barbell()
    with pytest.raises(OutOfRangeError):
        modularity(g, [(0, 1, 2)])  # nodes missing
    with pytest.raises(OutOfRangeError):
        modularity(g, [(0, 1, 2), (2, 3, 4, 5)])  # node 2 twice
    with pytest.raises(EmptyGraphError):
        modularity(build_graph(3, []), [(0, 1, 2)])
    with pytest.raises(DirectedUnsupportedError):
        modularity(build_graph(2, [(0, 1)], directed=True), [(0, 1)])


# ---------------------------------------------------------------------------
# divisive clustering
# ---------------------------------------------------------------------------


def test_divisive_clustering_cuts_the_bridge_first():
    res = girvan_newman(_barbell())
    assert res.removals[0] == (2, 3)
    assert res.best_partition == ((0, 1, 2), (3, 4, 5))
    assert res.best_modularity == pytest.approx(5 / 14)
    assert len(res.removals) == 7  # runs until no edges remain


def test_divisive_levels_are_coarsest_first_and_scored_on_the_original():
    res = girvan_newman(_barbell())
    assert res.levels[0].communities == (tuple(range(6)),)
    assert res.levels[0].modularity == pytest.approx(0.0)
    sizes = [len(lv.communities) for lv in res.levels]
    assert sizes == sorted(sizes)
    assert sizes[-1] == 6  # fully dissolved
    assert res.levels[-1].modularity < 0


def test_divisive_clustering_is_deterministic():
    a = girvan_newman(_barbell())
    b = girvan_newman(_barbell())
    assert a.removals == b.removals
    assert a.best == b.best


def test_disjoint_triangles_keep_their_split():
    g = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    res = girvan_newman(g)
    assert res.best_partition == ((0, 1, 2), (3, 4, 5))
    assert res.best_modularity == pytest.approx(0.5)


def test_divisive_clustering_rejects_edgeless_and_directed_input():
    with pytest.raises(EmptyGraphError):
        girvan_newman(build_graph(3, []))
    with pytest.raises(DirectedUnsupportedError):
        girvan_newman(build_graph(2, [(0, 1)], directed=True))


# ---------------------------------------------------------------------------
# spectral bisection
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("matrix", ["laplacian", "adjacency", "normalized_laplacian"])
def test_bisection_recovers_the_barbell_halves(matrix):
    sides = spectral_bisection(_barbell(), matrix=matrix)
    assert sorted(map(sorted, sides)) == [[0, 1, 2], [3, 4, 5]]


def test_bisection_splits_a_path_at_the_middle():
    sides = spectral_bisection(path_graph(4))
    assert sorted(map(sorted, sides)) == [[0, 1], [2, 3]]


def test_bisection_guards():
    with pytest.raises(DisconnectedError):
        spectral_bisection(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(OutOfRangeError):
        spectral_bisection(cycle_graph(4), matrix="mystery")
    with pytest.raises(DirectedUnsupportedError):
        spectral_bisection(build_graph(2, [(0, 1)], directed=True))


# ---------------------------------------------------------------------------
# structural similarity
# ---------------------------------------------------------------------------


def test_square_similarity_pairs_antipodes():
    s = cosine_similarity_matrix(cycle_graph(4))
    assert s[0, 2] == pytest.approx(1.0)
    assert s[1, 3] == pytest.approx(1.0)
    assert s[0, 1] == pytest.approx(0.0)
    assert np.allclose(np.diag(s), 1.0)


def test_star_similarity_groups_the_leaves():
    s = cosine_similarity_matrix(star_graph(4))
    for i, j in itertools.combinations(range(1, 5), 2):
        assert s[i, j] == pytest.approx(1.0)
    assert np.allclose(s[0, 1:], 0.0)


def test_similarity_handles_isolated_nodes():
    s = cosine_similarity_matrix(build_graph(3, [(0, 1)]))
    assert np.allclose(s[2], 0.0)
    assert s[0, 0] == pytest.approx(1.0)


def test_similarity_is_symmetric_with_unit_diagonal(rng):
    edges = random_edge_set(rng, 10, 0.4)
    g = build_graph(10, edges)
    s = cosine_similarity_matrix(g)
    assert np.allclose(s, s.T)
    assert np.all(s <= 1.0 + 1e-12)


# ---------------------------------------------------------------------------
# three-node patterns, undirected
# ---------------------------------------------------------------------------


def test_undirected_census_closed_forms():
    assert motif_census(complete_graph(3)).counts == {"two_path": 0, "triangle": 1}
    assert motif_census(path_graph(3)).counts == {"two_path": 1, "triangle": 0}
    assert motif_census(complete_graph(4)).counts == {"two_path": 0, "triangle": 4}
    assert motif_census(star_graph(3)).counts == {"two_path": 3, "triangle": 0}
    assert motif_census(cycle_graph(5)).counts == {"two_path": 5, "triangle": 0}


def test_undirected_census_totals_connected_triples(rng):
    edges = random_edge_set(rng, 9, 0.4)
    g = build_graph(9, edges)
    census = motif_census(g)
    arcs = {(u, v) for u, v in edges} | {(v, u) for u, v in edges}
    connected = 0
    for trip in itertools.combinations(range(9), 3):
        present = [
            (a, b) for a, b in itertools.permutations(trip, 2) if (a, b) in arcs
        ]
        locals_ = {t: i for i, t in enumerate(trip)}
        deg = [0, 0, 0]
        for a, b in present:
            deg[locals_[a]] += 1
        if all(d > 0 for d in deg):
            connected += 1
    assert census.total == connected


# ---------------------------------------------------------------------------
# three-node patterns, directed
# ---------------------------------------------------------------------------


def test_alias_lookups():
    g = build_graph(3, [(0, 1), (0, 2), (1, 2)], directed=True)
    census = motif_census(g)
    assert census.count_of("feedforward_loop") == 1
    assert census.count_of("030T") == 1
    assert census.total == 1
    with pytest.raises(OutOfRangeError):
        census.count_of("tetrahedron")


def test_chain_and_cycle_aliases():
    chain = motif_census(build_graph(3, [(0, 1), (1, 2)], directed=True))
    assert chain.count_of("three_chain") == 1
    loop = motif_census(build_graph(3, [(0, 1), (1, 2), (2, 0)], directed=True))
    assert loop.count_of("feedback_loop") == 1


def test_every_directed_class_is_recognized():
    # build each three-node pattern from the invariant classifier's naming
    patterns = {
        "021D": [(1, 0), (1, 2)],
        "021U": [(0, 1), (2, 1)],
        "021C": [(0, 1), (1, 2)],
        "111D": [(0, 1), (1, 0), (2, 0)],
        "111U": [(0, 1), (1, 0), (0, 2)],
        "030T": [(0, 1), (0, 2), (1, 2)],
        "030C": [(0, 1), (1, 2), (2, 0)],
        "201": [(0, 1), (1, 0), (0, 2), (2, 0)],
        "120D": [(0, 1), (1, 0), (2, 0), (2, 1)],
        "120U": [(0, 1), (1, 0), (0, 2), (1, 2)],
        "120C": [(0, 1), (1, 0), (0, 2), (2, 1)],
        "210": [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2)],
        "300": list(itertools.permutations(range(3), 2)),
    }
    for name, arcs in patterns.items():
        assert classify_triad_by_invariants(arcs) == name  # oracle self-check
        census = motif_census(build_graph(3, arcs, directed=True))
        assert census.counts[name] == 1, name
        assert census.total == 1


def test_directed_census_matches_invariant_classifier(rng):
    for _ in range(8):
        n = int(rng.integers(5, 9))
        edges = random_edge_set(rng, n, 0.35, directed=True)
        g = build_graph(n, edges, directed=True)
        census = motif_census(g)
        arcs = set(edges)
        want = {name: 0 for name in census.counts}
        for trip in itertools.combinations(range(n), 3):
            relabel = {t: i for i, t in enumerate(trip)}
            local = [
                (relabel[a], relabel[b])
                for a, b in itertools.permutations(trip, 2)
                if (a, b) in arcs
            ]
            touched = {x for arc in local for x in arc}
            if len(touched) < 3:
                continue
            # the pattern census counts triples whose underlying graph is
            # connected; a 2+1 split has an untouched node, caught above,
            # but two disconnected dyads cannot occur on three nodes
            want[classify_triad_by_invariants(local)] += 1
        assert census.counts == want


def test_census_rejects_parallel_edges():
    g = build_graph(3, [(0, 1), (0, 1), (1, 2)], simple=False)
    with pytest.raises(OutOfRangeError):
        motif_census(g)


# ---------------------------------------------------------------------------
# degree-preserving null model
# ---------------------------------------------------------------------------


def test_pair_swaps_preserve_degree_sequences(rng):
    for directed in (False, True):
        n = 12
        edges = random_edge_set(rng, n, 0.3, directed=directed)
        work = list(edges)
        arc_set = set(work)
        _double_edge_swap(work, arc_set, directed, rng, attempts=2000)
        assert len(work) == len(edges)
        assert len(set(work)) == len(work)  # stayed simple

        def degs(pairs):
            out = [0] * n
            inc = [0] * n
            for u, v in pairs:
                out[u] += 1
                inc[v] += 1
                if not directed:
                    out[v] += 1
                    inc[u] += 1
            return out, inc

        assert degs(work) == degs(edges)


def test_planted_pattern_is_flagged_as_overrepresented():
    # six disjoint planted feedforward triples over light background noise
    rng = np.random.default_rng(3)
    n = 18
    arcs = set()
    for t in range(6):
        a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
        arcs.update([(a, b), (a, c), (b, c)])
    while len(arcs) < 24:
        u, v = rng.integers(n, size=2)
        if u != v:
            arcs.add((int(u), int(v)))
    g = build_graph(n, sorted(arcs), directed=True)
    res = motif_zscore(g, "feedforward_loop", samples=60, seed=11)
    assert res.count == motif_census(g).count_of("feedforward_loop") == 6
    assert res.z > 2.0
    assert res.samples == 60


def test_zscore_is_reproducible_with_a_seed():
    g = build_graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)],
                    directed=True)
    a = motif_zscore(g, "030T", samples=30, seed=5)
    b = motif_zscore(g, "030T", samples=30, seed=5)
    assert a == b


def test_frozen_ensemble_raises():
    # a triangle admits no degree-preserving rewiring at all
    with pytest.raises(DegenerateEnsembleError):
        motif_zscore(complete_graph(3), "triangle", samples=10, seed=0)
