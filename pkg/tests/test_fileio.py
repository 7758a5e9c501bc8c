"""Edge-list document parsing, canonical printing, and result export."""

import csv
import io
import json
from fractions import Fraction

import numpy as np
import pytest

from graphphys import (
    EdgeListDocument,
    ParseError,
    Trajectory,
    build_graph,
    dump,
    dumps,
    first_symanzik,
    format_float,
    json_ready,
    load,
    loads,
    sis_integrate,
    star_graph,
    trajectory_to_csv,
    trajectory_to_json,
)

GOLDEN = """\
# a square with a tail
# nodes: 5
# directed: false
# weighted: false
# source: synthetic
0 1
1 2
2 3
3 0
3 4
"""


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def test_parse_the_golden_document():
    doc = loads(GOLDEN)
    assert doc.n == 5
    assert doc.directed is False
    assert doc.weighted is False
    assert [(u, v) for u, v, _ in doc.edges] == [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]
    assert doc.metadata == {"source": "synthetic"}
    assert doc.comments == ["a square with a tail"]
    g = doc.to_graph()
    assert g.n == 5 and g.m == 5 and not g.directed


def test_node_count_defaults_to_max_index_plus_one():
    doc = loads("0 1\n4 5\n")
    assert doc.n == 6


def test_declared_node_count_may_exceed_the_indices():
    doc = loads("# nodes: 9\n0 1\n")
    assert doc.n == 9
    assert doc.to_graph().degree_sequence().sum() == 2


def test_weighted_and_directed_flags():
    doc = loads("# directed: yes\n# weighted: true\n0 1 2.5\n1 2 0.5\n")
    assert doc.directed and doc.weighted
    g = doc.to_graph()
    assert g.directed
    assert [e.weight for e in g.edges] == [2.5, 0.5]


def test_legs_and_masses_build_a_diagram():
    text = "0 1\n1 2\nleg 0 p1\nleg 2 p2\nmass 0 0.1\n"
    doc = loads(text)
    fg = doc.to_feynman()
    assert fg.n == 3
    assert fg.masses[0] == Fraction(1, 10)  # decimal masses stay exact
    assert fg.masses[1] == 0
    poly = first_symanzik(fg)
    assert str(poly) != ""


def test_unweighted_edges_take_unit_weight():
    doc = loads("0 1\n")
    assert doc.edges == [(0, 1, 1.0)]


# ---------------------------------------------------------------------------
# parse errors carry line numbers
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("0 1\nbogus 3\n", 2, "unknown directive"),
        ("# nodes: many\n", 1, "bad node count"),
        ("# nodes: -2\n", 1, "node count"),
        ("# directed: maybe\n", 1, "true/false"),
        ("0 1\n1 two\n", 2, "bad node index"),
        ("0 1 heavy\n", 1, "bad edge weight"),
        ("0 1 2 3\n", 1, "U V"),
        ("leg 0\n", 1, "leg"),
        ("leg zero p1\n", 1, "bad leg node"),
        ("mass 0\n", 1, "mass"),
        ("mass 0 light\n", 1, "bad mass"),
        ("0 -1\n", 1, ">= 0"),
    ],
)
def test_parse_errors_name_the_line(text, lineno, fragment):
    with pytest.raises(ParseError) as err:
        loads(text)
    assert err.value.line == lineno
    assert fragment in str(err.value)


def test_declared_count_below_indices_fails():
    with pytest.raises(ParseError, match="declared 2 nodes"):
        loads("# nodes: 2\n0 3\n")


def test_mass_for_a_missing_edge_fails():
    with pytest.raises(ParseError, match="missing edge"):
        loads("0 1\nmass 5 1.0\n")


# ---------------------------------------------------------------------------
# canonical printing
# ---------------------------------------------------------------------------


def test_print_then_parse_is_identity():
    doc = loads(GOLDEN)
    text = dumps(doc)
    again = loads(text)
    assert again == doc
    assert dumps(again) == text  # canonical form is a fixed point


def test_weights_round_trip_bitwise():
    w = 0.1 + 0.2  # a float with no short decimal form
    doc = EdgeListDocument(n=2, weighted=True, edges=[(0, 1, w)])
    again = loads(dumps(doc))
    assert again.edges[0][2] == w


def test_format_float_is_lossless():
    for x in (1 / 3, 2.5e-17, 1e300, -0.0, 3.141592653589793):
        assert float(format_float(x)) == x


def test_from_graph_expands_multiplicity():
    g = build_graph(3, [(0, 1), (0, 1), (1, 2)], simple=False)
    doc = EdgeListDocument.from_graph(g, metadata={"kind": "demo"})
    assert [(u, v) for u, v, _ in doc.edges] == [(0, 1), (0, 1), (1, 2)]
    assert doc.metadata == {"kind": "demo"}
    assert not doc.weighted
    round_trip = loads(dumps(doc)).to_graph(simple=False)
    assert round_trip.m == 3


def test_from_graph_detects_weights():
    g = build_graph(2, [(0, 1, 2.5)])
    doc = EdgeListDocument.from_graph(g)
    assert doc.weighted
    assert loads(dumps(doc)).to_graph().edges[0].weight == 2.5


def test_file_round_trip(tmp_path):
    path = tmp_path / "square.edges"
    doc = EdgeListDocument.from_graph(star_graph(3))
    dump(doc, path)
    assert load(path) == doc


# ---------------------------------------------------------------------------
# structured export
# ---------------------------------------------------------------------------


def test_json_ready_normalizes_numpy_types():
    out = json_ready(
        {
            "arr": np.arange(3),
            "flag": np.bool_(True),
            "x": np.float64(0.5),
            "n": np.int64(7),
            "nested": [np.float32(2.0), {"deep": np.array([1.5])}],
            "text": "leave me",
        }
    )
    assert out == {
        "arr": [0, 1, 2],
        "flag": True,
        "x": 0.5,
        "n": 7,
        "nested": [2.0, {"deep": [1.5]}],
        "text": "leave me",
    }
    assert isinstance(out["flag"], bool)  # not squashed to 0/1
    assert json.dumps(out)  # fully serializable


def _tiny_trajectory():
    g = build_graph(3, [(0, 1), (1, 2)])
    return sis_integrate(g, [0.5, 0.0, 0.0], 0.6, 0.3, t_end=1.0, steps=4)


def test_trajectory_json_schema_and_endpoints():
    traj = _tiny_trajectory()
    payload = json.loads(trajectory_to_json(traj))
    assert payload["schema"] == "graphphys/trajectory/1"
    assert payload["model"] == "sis"
    assert payload["components"] == ["s", "x"]
    assert payload["steps"] == 4
    assert payload["t_start"] == 0.0 and payload["t_end"] == 1.0
    assert payload["initial"] == json_ready(traj.states[0])
    assert payload["final"] == json_ready(traj.states[-1])


def test_trajectory_csv_layout():
    traj = _tiny_trajectory()
    rows = list(csv.reader(io.StringIO(trajectory_to_csv(traj))))
    assert rows[0] == ["time", "node", "s", "x"]
    assert len(rows) == 1 + 5 * 3  # header + (steps+1) x nodes
    assert float(rows[1][0]) == 0.0
    assert float(rows[1][2]) == 0.5  # node 0 starts half infected: s = 0.5
    assert float(rows[1][3]) == 0.5


def test_scalar_trajectory_csv_gets_a_value_column():
    traj = Trajectory(
        model="toy",
        times=np.array([0.0, 1.0]),
        states=np.array([[1.0, 2.0], [3.0, 4.0]]),
    )
    rows = list(csv.reader(io.StringIO(trajectory_to_csv(traj))))
    assert rows[0] == ["time", "node", "value"]
    assert rows[2] == [format_float(0.0), "1", format_float(2.0)]
