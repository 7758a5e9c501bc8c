"""Plain-text edge-list documents and structured result export.

The document format is line-oriented:

* ``# key: value`` header lines carry the known directives ``nodes``,
  ``directed`` and ``weighted``; any other single-word key is kept as
  free metadata, and ``#`` lines without a key are comments.
* ``u v`` or ``u v weight`` lines declare edges (node indices from 0).
* ``leg NODE LABEL`` attaches an external leg for momentum-flow work.
* ``mass INDEX VALUE`` assigns a mass to the INDEX-th edge in file
  order.

Anything else raises :class:`ParseError` carrying the line number.
Printing then re-parsing a document reproduces it exactly; floats are
written with 17 significant digits so values round-trip bit-for-bit.

JSON result documents produced by :func:`trajectory_to_json` and the
command-line tools carry a versioned ``schema`` string so downstream
readers can detect layout changes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .errors import ParseError
from .graphs import Graph
from .feynman import FeynmanGraph

__all__ = [
    "EdgeListDocument",
    "loads",
    "dumps",
    "load",
    "dump",
    "format_float",
    "json_ready",
    "trajectory_to_json",
    "trajectory_to_csv",
]


def format_float(x):
    """Render a float with 17 significant digits (lossless round trip)."""
    return format(float(x), ".17g")


_BOOL_WORDS = {"true": True, "false": False, "yes": True, "no": False}


@dataclass
class EdgeListDocument:
    """In-memory form of an edge-list file; see the module docstring for
    the on-disk grammar."""

    n: int = 0
    directed: bool = False
    weighted: bool = False
    edges: list = field(default_factory=list)
    legs: list = field(default_factory=list)
    masses: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)
    comments: list = field(default_factory=list)

    def to_graph(self, simple=True):
        """Materialize as a :class:`graphphys.graphs.Graph`."""
        edges = (
            [(u, v, w) for u, v, w in self.edges]
            if self.weighted
            else [(u, v) for u, v, _ in self.edges]
        )
        return Graph(self.n, edges, directed=self.directed, simple=simple)

    def to_feynman(self):
        """Materialize as a diagram with external legs and edge masses
        (edges without a ``mass`` line are massless)."""
        masses = [self.masses.get(i, 0.0) for i in range(len(self.edges))]
        return FeynmanGraph(
            self.n,
            [(u, v) for u, v, _ in self.edges],
            legs=list(self.legs),
            masses=masses,
        )

    @classmethod
    def from_graph(cls, g, metadata=None):
        weighted = any(e.weight != 1.0 for e in g.edges)
        edges = []
        for e in g.edges:
            for _ in range(e.mult):
                edges.append((e.u, e.v, e.weight))
        return cls(
            n=g.n,
            directed=g.directed,
            weighted=weighted,
            edges=edges,
            metadata=dict(metadata or {}),
        )


def _parse_bool(value, lineno):
    word = value.strip().lower()
    if word not in _BOOL_WORDS:
        raise ParseError(f"expected true/false, got {value!r}", line=lineno)
    return _BOOL_WORDS[word]


def loads(text):
    """Parse an edge-list document from a string."""
    doc = EdgeListDocument()
    declared_nodes = None
    max_node = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            content = line[1:].strip()
            key, sep, value = content.partition(":")
            if sep and key and " " not in key.strip():
                key = key.strip()
                value = value.strip()
                if key == "nodes":
                    try:
                        declared_nodes = int(value)
                    except ValueError:
                        raise ParseError(f"bad node count {value!r}", line=lineno)
                    if declared_nodes < 0:
                        raise ParseError("node count must be >= 0", line=lineno)
                elif key == "directed":
                    doc.directed = _parse_bool(value, lineno)
                elif key == "weighted":
                    doc.weighted = _parse_bool(value, lineno)
                else:
                    doc.metadata[key] = value
            elif content:
                doc.comments.append(content)
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "leg":
            if len(tokens) != 3:
                raise ParseError("leg lines need: leg NODE LABEL", line=lineno)
            try:
                node = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad leg node {tokens[1]!r}", line=lineno)
            doc.legs.append((node, tokens[2]))
            max_node = max(max_node, node)
        elif head == "mass":
            if len(tokens) != 3:
                raise ParseError("mass lines need: mass EDGE-INDEX VALUE", line=lineno)
            try:
                index = int(tokens[1])
                value = float(tokens[2])
            except ValueError:
                raise ParseError(f"bad mass assignment {line!r}", line=lineno)
            doc.masses[index] = value
        else:
            try:
                u = int(tokens[0])
            except ValueError:
                raise ParseError(f"unknown directive {head!r}", line=lineno)
            if len(tokens) == 2:
                weight = 1.0
            elif len(tokens) == 3:
                try:
                    weight = float(tokens[2])
                except ValueError:
                    raise ParseError(f"bad edge weight {tokens[2]!r}", line=lineno)
            else:
                raise ParseError("edge lines need: U V [WEIGHT]", line=lineno)
            try:
                v = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad node index {tokens[1]!r}", line=lineno)
            if u < 0 or v < 0:
                raise ParseError("node indices must be >= 0", line=lineno)
            doc.edges.append((u, v, weight))
            max_node = max(max_node, u, v)
    needed = max_node + 1
    if declared_nodes is not None:
        if declared_nodes < needed:
            raise ParseError(
                f"declared {declared_nodes} nodes but indices reach {max_node}"
            )
        doc.n = declared_nodes
    else:
        doc.n = needed
    for index in doc.masses:
        if not 0 <= index < len(doc.edges):
            raise ParseError(f"mass refers to missing edge {index}")
    return doc


def dumps(doc):
    """Render a document back to text in canonical order: directives,
    metadata, comments, edges, legs, masses."""
    out = [f"# nodes: {doc.n}"]
    out.append(f"# directed: {'true' if doc.directed else 'false'}")
    out.append(f"# weighted: {'true' if doc.weighted else 'false'}")
    for key, value in doc.metadata.items():
        out.append(f"# {key}: {value}")
    for comment in doc.comments:
        out.append(f"# {comment}")
    for u, v, w in doc.edges:
        if doc.weighted:
            out.append(f"{u} {v} {format_float(w)}")
        else:
            out.append(f"{u} {v}")
    for node, label in doc.legs:
        out.append(f"leg {node} {label}")
    for index in sorted(doc.masses):
        out.append(f"mass {index} {format_float(doc.masses[index])}")
    return "\n".join(out) + "\n"


def load(path):
    """Read an edge-list document from a file path."""
    with open(path, "r", encoding="utf-8") as handle:
        return loads(handle.read())


def dump(doc, path):
    """Write an edge-list document to a file path."""
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(doc))


def json_ready(obj):
    """Recursively convert arrays, numpy scalars and floats into plain
    JSON-safe values, pinning floats at 17 significant digits."""
    import numpy as np

    if isinstance(obj, dict):
        return {str(k): json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_ready(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [json_ready(v) for v in obj.tolist()]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.floating, float)):
        return float(format_float(obj))
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    return obj


def trajectory_to_json(traj):
    """Summarize a :class:`graphphys.dynamics.Trajectory` as a JSON
    string: grid endpoints, model parameters, and initial/final states."""
    payload = {
        "schema": "graphphys/trajectory/1",
        "model": traj.model,
        "params": json_ready(traj.params),
        "components": list(traj.components),
        "t_start": json_ready(traj.times[0]),
        "t_end": json_ready(traj.times[-1]),
        "steps": int(traj.times.size - 1),
        "initial": json_ready(traj.states[0]),
        "final": json_ready(traj.states[-1]),
    }
    return json.dumps(payload, indent=2)


def trajectory_to_csv(traj):
    """Long-form CSV of a trajectory: one row per (time, node), one
    column per state component."""
    names = list(traj.components) or ["value"]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["time", "node"] + names)
    n = traj.states.shape[1]
    for i, t in enumerate(traj.times):
        for node in range(n):
            cell = traj.states[i, node]
            values = [cell] if cell.ndim == 0 else list(cell)
            writer.writerow(
                [format_float(t), node] + [format_float(v) for v in values]
            )
    return buffer.getvalue()
