from fractions import Fraction

import pytest

from graphphys.errors import (
    BridgeOrLoopError,
    NoExternalLegsError,
    OutOfRangeError,
    TooLargeError,
)
from graphphys.feynman import (
    FeynmanGraph,
    MPoly,
    contract_internal_edge,
    delete_internal_edge,
    first_symanzik,
    first_symanzik_from_kirchhoff,
    kirchhoff_polynomial,
    modified_laplacian_expansion,
    momentum_dot,
    second_symanzik,
    spanning_trees,
    spanning_two_forests,
    symanzik_from_modified_laplacian,
)


def _poly(text_terms):
    """Build an MPoly from {(("x1",1),("x2",1)): coeff}-style dicts."""
    total = MPoly.zero()
    for exps, coeff in text_terms.items():
        total = total + MPoly.monomial(dict(exps), coeff)
    return total


def _mono(*names):
    return MPoly.monomial({name: 1 for name in names})


def _sum_of_products(*groups):
    total = MPoly.zero()
    for names in groups:
        total = total + _mono(*names)
    return total


# The master example: a box with one chord, two external legs entering at
# opposite corners of the chord.
BOX = FeynmanGraph(
    4,
    [(0, 3), (0, 1), (1, 2), (2, 3), (0, 2)],
    legs=[(1, "p1"), (3, "p2")],
)


def test_polynomial_ring_basics():
    x = MPoly.variable("x1")
    y = MPoly.variable("x2")
    p = (x + y) * (x + y) - x * x - y * y
    assert p == MPoly.monomial({"x1": 1, "x2": 1}, 2)
    assert p.evaluate({"x1": 3, "x2": 5}) == 30
    assert str(x + y) == "x1 + x2"


def test_spanning_tree_enumeration_on_box():
    trees = spanning_trees(BOX)
    assert len(trees) == 8
    for tree in trees:
        assert len(tree) == 3


def test_first_symanzik_box_golden():
    expect = _sum_of_products(
        ("x1", "x2"), ("x1", "x3"), ("x1", "x5"), ("x2", "x4"),
        ("x2", "x5"), ("x3", "x4"), ("x3", "x5"), ("x4", "x5"),
    )
    assert first_symanzik(BOX) == expect


def test_first_symanzik_homogeneity_degree_is_loop_count():
    u = first_symanzik(BOX)
    assert u.is_homogeneous()
    assert u.total_degree() == BOX.loop_count() == 2


def test_second_symanzik_box_golden():
    f = second_symanzik(BOX)
    s11 = MPoly.variable("s11")
    expect = -(
        _sum_of_products(
            ("x1", "x2", "x3"), ("x1", "x2", "x4"), ("x1", "x3", "x4"),
            ("x1", "x3", "x5"), ("x1", "x4", "x5"), ("x2", "x3", "x4"),
            ("x2", "x3", "x5"), ("x2", "x4", "x5"),
        )
        * s11
    )
    assert f == expect


def test_two_forest_enumeration_shapes():
    forests = spanning_two_forests(BOX)
    # every 2-edge subset of the box-with-chord is acyclic
    assert len(forests) == 10
    for edges, parts in forests:
        assert len(edges) == 2
        assert len(parts) == 2
        assert sum(len(side) for side in parts) == BOX.n


def test_momentum_conservation_eliminates_last_leg():
    # dot products involving the final leg are rewritten via the others
    # (legs are 1-based), so with two legs everything reduces to s11
    s11 = MPoly.variable("s11")
    assert momentum_dot(BOX, 1, 1) == s11
    assert momentum_dot(BOX, 1, 2) == -s11
    assert momentum_dot(BOX, 2, 2) == s11


def test_single_leg_momentum_vanishes():
    lone = FeynmanGraph(2, [(0, 1), (0, 1)], legs=[(0, "p1")])
    assert momentum_dot(lone, 1, 1) == MPoly.zero()
    assert second_symanzik(lone, include_masses=False) == MPoly.zero()


def test_kirchhoff_polynomial_ground_independent():
    base = kirchhoff_polynomial(BOX, ground=0)
    for ground in (1, 2, 3):
        assert kirchhoff_polynomial(BOX, ground=ground) == base


def test_kirchhoff_box_golden():
    expect = _sum_of_products(
        ("x1", "x2", "x3"), ("x1", "x2", "x4"), ("x1", "x2", "x5"),
        ("x1", "x3", "x4"), ("x1", "x3", "x5"), ("x2", "x3", "x4"),
        ("x2", "x4", "x5"), ("x3", "x4", "x5"),
    )
    assert kirchhoff_polynomial(BOX, ground=0) == expect


def test_first_symanzik_from_kirchhoff_inversion():
    assert first_symanzik_from_kirchhoff(BOX) == first_symanzik(BOX)


def test_modified_laplacian_grades():
    parts = modified_laplacian_expansion(BOX)
    w1, w2 = parts[1], parts[2]
    k = kirchhoff_polynomial(BOX, ground=0)
    z1, z2 = MPoly.variable("z1"), MPoly.variable("z2")
    assert w1 == (z1 + z2) * k
    expect_w2 = z1 * z2 * _sum_of_products(
        ("x1", "x3"), ("x1", "x4"), ("x1", "x5"), ("x2", "x3"),
        ("x2", "x4"), ("x2", "x5"), ("x3", "x5"), ("x4", "x5"),
    )
    assert w2 == expect_w2


def test_symanzik_pair_from_determinant_route():
    u, f0 = symanzik_from_modified_laplacian(BOX)
    assert u == first_symanzik(BOX)
    assert f0 == second_symanzik(BOX, include_masses=False)


def test_three_route_agreement_on_random_graphs(rng):
    import oracles

    for _ in range(25):
        n = int(rng.integers(2, 7))
        edges = oracles.random_connected_edge_set(rng, n, extra=1.5)
        if not 1 <= len(edges) <= 10:
            continue
        fg = FeynmanGraph(n, edges, legs=[(0, "p1"), (n - 1, "p2")] if n > 1 else [])
        u_direct = first_symanzik(fg)
        assert first_symanzik_from_kirchhoff(fg) == u_direct
        if fg.t:
            u_det, _ = symanzik_from_modified_laplacian(fg)
            assert u_det == u_direct


def test_deletion_contraction_identity_on_chord():
    # U(G) = U(G/e) + x_e U(G-e) for a regular (non-bridge, non-loop) edge
    chord = 4  # x5, the diagonal
    u = first_symanzik(BOX)
    u_contract = first_symanzik(contract_internal_edge(BOX, chord))
    u_delete = first_symanzik(delete_internal_edge(BOX, chord))
    x5 = MPoly.variable("x5")
    assert u == u_contract + x5 * u_delete


def test_deletion_contraction_guards():
    bridge = FeynmanGraph(3, [(0, 1), (1, 2)], legs=[(0, "p1"), (2, "p2")])
    with pytest.raises(BridgeOrLoopError):
        delete_internal_edge(bridge, 0)
    with pytest.raises(BridgeOrLoopError):
        contract_internal_edge(FeynmanGraph(1, [(0, 0)]), 0)


def test_bubble_with_masses_golden():
    bubble = FeynmanGraph(
        2, [(0, 1), (0, 1)], legs=[(0, "p1"), (1, "p2")], masses=[1, 0.5]
    )
    u = first_symanzik(bubble)
    assert u == MPoly.variable("x1") + MPoly.variable("x2")
    f = second_symanzik(bubble)
    s11 = MPoly.variable("s11")
    x1, x2 = MPoly.variable("x1"), MPoly.variable("x2")
    mass_part = (x1 + x2) * (x1 * MPoly.constant(1) + x2 * MPoly.constant(Fraction(1, 4)))
    assert f == -(x1 * x2) * s11 + mass_part


def test_massless_flag_drops_mass_terms():
    bubble = FeynmanGraph(
        2, [(0, 1), (0, 1)], legs=[(0, "p1"), (1, "p2")], masses=[1, 2]
    )
    f0 = second_symanzik(bubble, include_masses=False)
    x1, x2 = MPoly.variable("x1"), MPoly.variable("x2")
    assert f0 == -(x1 * x2) * MPoly.variable("s11")


def test_masses_are_exact_decimals():
    fg = FeynmanGraph(2, [(0, 1)], masses=[0.1])
    assert fg.masses[0] == Fraction(1, 10)


def test_no_legs_rejected_for_momentum_part():
    closed = FeynmanGraph(2, [(0, 1), (0, 1)])
    with pytest.raises(NoExternalLegsError):
        second_symanzik(closed, include_masses=False)


def test_too_many_legs_rejected():
    with pytest.raises(TooLargeError):
        FeynmanGraph(12, [], legs=[(i, f"p{i+1}") for i in range(10)])


def test_subset_cap_guard():
    # C(26, 12) edge subsets is past the enumeration budget
    edges = [(i, j) for i in range(13) for j in range(i + 1, 13)][:26]
    with pytest.raises(TooLargeError):
        spanning_trees(FeynmanGraph(13, edges))
