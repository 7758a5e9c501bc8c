"""Command-line front end.

Seven subcommands: ``analyze``, ``polynomial``, ``generate``,
``dynamics``, ``resistance``, ``communities``, ``motifs``.  Graph inputs
are edge-list documents (see :mod:`graphphys.fileio`); ``-`` means
stdin.  ``--json`` switches any subcommand to a machine-readable
document with a versioned ``schema`` field; errors always leave as JSON
on stderr with a nonzero exit status.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import fileio
from .errors import GraphPhysError, OutOfRangeError
from . import graphs as G
from . import centrality as C
from . import communities as CO
from . import dynamics as DY
from . import ensembles as EN
from . import feynman as FY
from . import resistance as RS
from . import spectral as SP
from . import statmech as SM
from . import tutte as TU

__all__ = ["main"]


def _read_document(path):
    if path == "-":
        return fileio.loads(sys.stdin.read())
    return fileio.load(path)


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(payload, out):
    _emit(json.dumps(fileio.json_ready(payload), indent=2), out)


def _fail(exc):
    payload = {
        "schema": "graphphys/error/1",
        "error": type(exc).__name__,
        "message": str(exc),
    }
    sys.stderr.write(json.dumps(payload) + "\n")
    return 1


# --- analyze --------------------------------------------------------------


def _cmd_analyze(args):
    doc = _read_document(args.input)
    g = doc.to_graph(simple=not args.multi)
    report = {
        "schema": "graphphys/analyze/1",
        "nodes": g.n,
        "edges": g.m,
        "directed": g.directed,
    }
    comps = G.connected_components(g)
    report["components"] = len(comps)
    degrees = g.degree_sequence()
    if g.n:
        report["degree"] = {
            "min": int(degrees.min()),
            "mean": float(degrees.mean()),
            "max": int(degrees.max()),
        }
    if not g.directed and g.n:
        cl = G.clustering(g)
        report["clustering"] = {
            "average": cl.average,
            "transitivity": cl.transitivity,
            "triangles": cl.triangles,
        }
        report["bipartite"] = G.bipartition(g) is not None
        girth = G.girth(g)
        report["girth"] = None if girth is G.ACYCLIC else girth
        if len(comps) == 1:
            report["average_path_length"] = G.average_path_length(g)
            report["diameter"] = G.diameter(g)
            spec = SP.adjacency_spectrum(g)
            report["top_eigenvalues"] = list(spec.values[: min(5, g.n)])
            thermo = SM.thermodynamics(g, args.beta)
            report["spectral_thermodynamics"] = {
                "beta": args.beta,
                "partition": thermo.partition,
                "entropy": thermo.entropy,
                "internal_energy": thermo.internal_energy,
            }
    else:
        report["strongly_connected"] = G.is_connected(g, strong=True) if g.n else True
    if args.centrality:
        table = {}
        for name in args.centrality:
            table[name] = list(_centrality_by_name(g, name).scores)
        report["centrality"] = table
    if args.json:
        _emit_json(report, args.out)
        return 0
    lines = [f"nodes: {report['nodes']}", f"edges: {report['edges']}"]
    lines.append(f"directed: {report['directed']}")
    lines.append(f"components: {report['components']}")
    if "degree" in report:
        d = report["degree"]
        lines.append(f"degree: min {d['min']}  mean {d['mean']:.4g}  max {d['max']}")
    if "clustering" in report:
        c = report["clustering"]
        lines.append(
            f"clustering: average {c['average']:.6g}  "
            f"transitivity {c['transitivity']:.6g}  triangles {c['triangles']}"
        )
    if report.get("girth") is not None:
        lines.append(f"girth: {report['girth']}")
    if "bipartite" in report:
        lines.append(f"bipartite: {report['bipartite']}")
    if "average_path_length" in report:
        lines.append(f"average path length: {report['average_path_length']:.6g}")
        lines.append(f"diameter: {report['diameter']}")
    if "top_eigenvalues" in report:
        tops = "  ".join(f"{x:.6g}" for x in report["top_eigenvalues"])
        lines.append(f"top eigenvalues: {tops}")
    if "spectral_thermodynamics" in report:
        t = report["spectral_thermodynamics"]
        lines.append(
            f"spectral thermodynamics (beta={t['beta']:g}): "
            f"Z {t['partition']:.6g}  S {t['entropy']:.6g}  H {t['internal_energy']:.6g}"
        )
    if "centrality" in report:
        for name, scores in report["centrality"].items():
            tops = sorted(range(len(scores)), key=lambda i: -scores[i])[:5]
            shown = "  ".join(f"{i}:{scores[i]:.4g}" for i in tops)
            lines.append(f"{name} centrality (top): {shown}")
    _emit("\n".join(lines), args.out)
    return 0


def _centrality_by_name(g, name):
    if name == "degree":
        return C.degree_centrality(g)
    if name == "closeness":
        return C.closeness_centrality(g)
    if name == "betweenness":
        return C.betweenness_centrality(g)
    if name == "eigenvector":
        return C.eigenvector_centrality(g)
    if name == "pagerank":
        return C.pagerank(g)
    if name == "subgraph":
        return C.subgraph_centrality(g)
    raise OutOfRangeError(f"unknown centrality {name!r}")


# --- polynomial -----------------------------------------------------------


def _cmd_polynomial(args):
    doc = _read_document(args.input)
    payload = {"schema": "graphphys/polynomial/1", "kind": args.kind}
    if args.kind in ("tutte", "chromatic", "potts"):
        g = doc.to_graph(simple=False)
        mg = TU.multigraph_from_graph(g)
        if args.kind == "tutte":
            evals = TU.tutte_evaluations(mg)
            poly = evals.pop("polynomial")
            payload["polynomial"] = str(poly)
            payload["evaluations"] = evals
            text = [f"tutte: {poly}"] + [f"  {k}: {v}" for k, v in evals.items()]
        elif args.kind == "chromatic":
            poly = TU.chromatic_polynomial(mg)
            payload["polynomial"] = str(poly)
            payload["values"] = {str(q): int(poly(q)) for q in range(1, 6)}
            text = [f"chromatic: {poly}"] + [
                f"  q={q}: {v}" for q, v in payload["values"].items()
            ]
        else:
            if args.q is None:
                raise OutOfRangeError("potts needs --q states")
            z = TU.potts_partition(mg, args.q, convention=args.convention)
            payload["q"] = args.q
            payload["convention"] = args.convention
            payload["polynomial"] = str(z)
            text = [f"potts (q={args.q}, {args.convention}): {z}"]
            if args.coupling is not None:
                payload["coupling"] = args.coupling
                payload["value"] = z.evaluate(args.coupling)
                text.append(f"  Z(K={args.coupling:g}) = {payload['value']:.12g}")
    elif args.kind in ("kirchhoff", "first-symanzik", "second-symanzik"):
        fg = doc.to_feynman()
        if args.kind == "kirchhoff":
            poly = FY.kirchhoff_polynomial(fg, ground=args.ground)
            payload["ground"] = args.ground
        elif args.kind == "first-symanzik":
            poly = FY.first_symanzik(fg)
        else:
            poly = FY.second_symanzik(fg, include_masses=not args.massless)
        payload["polynomial"] = str(poly)
        payload["loops"] = fg.loop_count()
        text = [f"{args.kind}: {poly}", f"  loops: {payload['loops']}"]
    else:
        raise OutOfRangeError(f"unknown kind {args.kind!r}")
    if args.json:
        _emit_json(payload, args.out)
    else:
        _emit("\n".join(text), args.out)
    return 0


# --- generate -------------------------------------------------------------


def _cmd_generate(args):
    meta = {"generator": args.kind}
    if args.seed is not None:
        meta["seed"] = str(args.seed)
    if args.kind == "er":
        if args.p is None:
            raise OutOfRangeError("er needs --p")
        g = EN.erdos_renyi(args.n, args.p, args.seed)
        meta["p"] = f"{args.p:g}"
    elif args.kind == "ws":
        if args.p is None or args.k is None:
            raise OutOfRangeError("ws needs --k and --p")
        g = EN.watts_strogatz(args.n, args.k, args.p, args.seed)
        meta["k"] = str(args.k)
        meta["p"] = f"{args.p:g}"
    elif args.kind == "ba":
        if args.d is None:
            raise OutOfRangeError("ba needs --d")
        g = EN.barabasi_albert(
            args.n, args.d, args.seed, variant=args.variant, simplify=args.simplify
        )
        meta["d"] = str(args.d)
        meta["variant"] = args.variant
        if isinstance(g, TU.Multigraph):
            g = _multigraph_to_document_graph(g)
    elif args.kind == "path":
        g = G.path_graph(args.n)
    elif args.kind == "cycle":
        g = G.cycle_graph(args.n)
    elif args.kind == "complete":
        g = G.complete_graph(args.n)
    elif args.kind == "star":
        g = G.star_graph(args.n)
    else:
        raise OutOfRangeError(f"unknown generator {args.kind!r}")
    doc = fileio.EdgeListDocument.from_graph(g, metadata=meta)
    _emit(fileio.dumps(doc), args.out)
    return 0


def _multigraph_to_document_graph(mg):
    """Collapse a multigraph for the simple-graph document format,
    dropping loops and merging parallels into multiplicities."""
    merged = {}
    for u, v in mg.edges:
        if u == v:
            continue
        merged[(u, v)] = merged.get((u, v), 0) + 1
    edges = [(u, v, 1.0, k) for (u, v), k in merged.items()]
    return G.Graph(mg.n, edges, simple=False)


# --- dynamics -------------------------------------------------------------


def _parse_float_list(text, n, what):
    values = [float(tok) for tok in text.split(",") if tok.strip()]
    if len(values) != n:
        raise OutOfRangeError(f"{what} needs {n} comma-separated values")
    return np.asarray(values)


def _cmd_dynamics(args):
    doc = _read_document(args.input)
    g = doc.to_graph()
    if args.model in ("consensus", "consensus-discrete"):
        if args.phi:
            phi0 = _parse_float_list(args.phi, g.n, "--phi")
        else:
            phi0 = np.random.default_rng(args.seed).random(g.n)
        if args.model == "consensus":
            traj = DY.consensus_continuous(g, phi0, args.t_end, steps=args.steps)
        else:
            traj = DY.consensus_discrete(g, phi0, args.epsilon, args.steps)
    elif args.model in ("sir", "sis"):
        infected = np.zeros(g.n)
        for tok in args.infected.split(","):
            infected[int(tok)] = args.infected_level
        if args.model == "sir":
            traj = DY.sir_integrate(
                g, infected, args.infection, args.recovery, args.t_end, steps=args.steps
            )
        else:
            traj = DY.sis_integrate(
                g, infected, args.infection, args.recovery, args.t_end, steps=args.steps
            )
    else:
        raise OutOfRangeError(f"unknown model {args.model!r}")
    if args.format == "csv":
        _emit(fileio.trajectory_to_csv(traj), args.out)
    else:
        _emit(fileio.trajectory_to_json(traj), args.out)
    return 0


# --- resistance -----------------------------------------------------------


def _parse_pairs(text):
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        left, sep, right = chunk.partition("-")
        if not sep:
            raise OutOfRangeError(f"pairs look like 0-3, got {chunk!r}")
        pairs.append((int(left), int(right)))
    return pairs


def _cmd_resistance(args):
    doc = _read_document(args.input)
    g = doc.to_graph()
    payload = {"schema": "graphphys/resistance/1"}
    text = []
    if args.pairs:
        rows = []
        for u, v in _parse_pairs(args.pairs):
            omega = RS.resistance_distance(g, u, v, method=args.method)
            rows.append(
                {"u": u, "v": v, "resistance": omega, "commute_time": 2.0 * _total_weight(g) * omega}
            )
            text.append(
                f"{u} -- {v}: resistance {omega:.10g}   "
                f"commute time {rows[-1]['commute_time']:.10g}"
            )
        payload["pairs"] = rows
    if args.matrix or not args.pairs:
        omega = RS.resistance_matrix(g)
        payload["matrix"] = omega
        header = "resistance matrix:" if not text else "\nresistance matrix:"
        text.append(header)
        for row in omega:
            text.append("  " + "  ".join(f"{x:10.6g}" for x in row))
    if args.json:
        _emit_json(payload, args.out)
    else:
        _emit("\n".join(text), args.out)
    return 0


def _total_weight(g):
    return sum(e.weight * e.mult for e in g.edges)


# --- communities ----------------------------------------------------------


def _cmd_communities(args):
    doc = _read_document(args.input)
    g = doc.to_graph()
    payload = {"schema": "graphphys/communities/1", "method": args.method}
    if args.method == "girvan-newman":
        result = CO.girvan_newman(g)
        payload["best_partition"] = [list(c) for c in result.best_partition]
        payload["best_modularity"] = result.best_modularity
        payload["removals"] = [list(e) for e in result.removals]
        payload["levels"] = [
            {"communities": [list(c) for c in lv.communities], "modularity": lv.modularity}
            for lv in result.levels
        ]
        text = [f"best modularity: {result.best_modularity:.6g}"]
        for i, comm in enumerate(result.best_partition):
            text.append(f"  community {i}: {' '.join(map(str, comm))}")
        text.append(f"removal order: {' '.join(f'{u}-{v}' for u, v in result.removals)}")
    elif args.method == "bisection":
        pos, neg = CO.spectral_bisection(g, matrix=args.matrix_kind)
        q = CO.modularity(g, (pos, neg)) if pos and neg else None
        payload["parts"] = [list(pos), list(neg)]
        payload["matrix"] = args.matrix_kind
        payload["modularity"] = q
        text = [
            f"bisection ({args.matrix_kind}):",
            f"  side A: {' '.join(map(str, pos))}",
            f"  side B: {' '.join(map(str, neg))}",
        ]
        if q is not None:
            text.append(f"  modularity: {q:.6g}")
    else:
        raise OutOfRangeError(f"unknown method {args.method!r}")
    if args.json:
        _emit_json(payload, args.out)
    else:
        _emit("\n".join(text), args.out)
    return 0


# --- motifs ---------------------------------------------------------------


def _cmd_motifs(args):
    doc = _read_document(args.input)
    g = doc.to_graph()
    census = CO.motif_census(g)
    payload = {
        "schema": "graphphys/motifs/1",
        "directed": census.directed,
        "counts": dict(census.counts),
    }
    text = ["three-node census:"]
    for name, count in census.counts.items():
        if count or not census.directed:
            text.append(f"  {name}: {count}")
    if args.zscore:
        score = CO.motif_zscore(
            g,
            args.zscore,
            samples=args.samples,
            seed=args.seed,
            swaps_per_edge=args.swaps,
        )
        payload["zscore"] = {
            "motif": score.motif,
            "count": score.count,
            "mean": score.mean,
            "std": score.std,
            "z": score.z,
            "samples": score.samples,
        }
        text.append(
            f"z-score [{score.motif}]: {score.z:.4g} "
            f"(count {score.count}, ensemble {score.mean:.4g} +/- {score.std:.4g})"
        )
    if args.json:
        _emit_json(payload, args.out)
    else:
        _emit("\n".join(text), args.out)
    return 0


# --- parser ---------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="graphphys",
        description="Graph analysis toolkit: structure, polynomials, spectra, dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", help="write output to this file")

    p = sub.add_parser("analyze", help="structural and spectral summary")
    add_common(p)
    p.add_argument("--beta", type=float, default=1.0, help="inverse temperature")
    p.add_argument("--multi", action="store_true", help="allow parallel edges")
    p.add_argument(
        "--centrality",
        action="append",
        choices=["degree", "closeness", "betweenness", "eigenvector", "pagerank", "subgraph"],
        help="include a centrality table (repeatable)",
    )
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("polynomial", help="graph polynomials and diagram integrands")
    add_common(p)
    p.add_argument(
        "--kind",
        required=True,
        choices=[
            "tutte",
            "chromatic",
            "potts",
            "kirchhoff",
            "first-symanzik",
            "second-symanzik",
        ],
    )
    p.add_argument("--q", type=int, help="state count for potts")
    p.add_argument("--coupling", type=float, help="evaluate potts at this coupling")
    p.add_argument(
        "--convention",
        choices=["reward", "penalty"],
        default="reward",
        help="potts weight convention",
    )
    p.add_argument("--ground", type=int, default=0, help="grounded node for kirchhoff")
    p.add_argument("--massless", action="store_true", help="drop mass terms")
    p.set_defaults(func=_cmd_polynomial)

    p = sub.add_parser("generate", help="sample or construct a graph")
    add_common(p, needs_input=False)
    p.add_argument("kind", choices=["er", "ws", "ba", "path", "cycle", "complete", "star"])
    p.add_argument("--n", type=int, required=True, help="node count")
    p.add_argument("--p", type=float, help="edge or rewiring probability")
    p.add_argument("--k", type=int, help="ring coordination number (ws)")
    p.add_argument("--d", type=int, help="edges per new node (ba)")
    p.add_argument("--variant", choices=["growth", "contracted"], default="growth")
    p.add_argument("--simplify", action="store_true", help="collapse loops/parallels (ba)")
    p.add_argument("--seed", type=int, help="random seed")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("dynamics", help="run a process and export the trajectory")
    add_common(p)
    p.add_argument(
        "--model",
        required=True,
        choices=["consensus", "consensus-discrete", "sir", "sis"],
    )
    p.add_argument("--t-end", type=float, default=10.0)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--epsilon", type=float, default=0.1, help="averaging weight")
    p.add_argument("--phi", help="comma-separated initial values (consensus)")
    p.add_argument("--infection", type=float, default=1.0)
    p.add_argument("--recovery", type=float, default=0.5)
    p.add_argument("--infected", default="0", help="comma-separated seed nodes")
    p.add_argument("--infected-level", type=float, default=1.0)
    p.add_argument("--seed", type=int, help="seed for random initial state")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_dynamics)

    p = sub.add_parser("resistance", help="effective resistance between nodes")
    add_common(p)
    p.add_argument("--pairs", help="comma-separated node pairs like 0-3,1-2")
    p.add_argument("--matrix", action="store_true", help="print the full matrix")
    p.add_argument(
        "--method",
        choices=["pseudoinverse", "determinant", "spectral"],
        default="pseudoinverse",
    )
    p.set_defaults(func=_cmd_resistance)

    p = sub.add_parser("communities", help="divisive or spectral partitioning")
    add_common(p)
    p.add_argument(
        "--method", choices=["girvan-newman", "bisection"], default="girvan-newman"
    )
    p.add_argument(
        "--matrix-kind",
        choices=["laplacian", "adjacency", "normalized_laplacian"],
        default="laplacian",
    )
    p.set_defaults(func=_cmd_communities)

    p = sub.add_parser("motifs", help="three-node census and null-model z-scores")
    add_common(p)
    p.add_argument("--zscore", help="motif name or code to score")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--swaps", type=int, default=100, help="swap attempts per edge")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_motifs)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphPhysError as exc:
        return _fail(exc)
    except (ValueError, OSError) as exc:
        return _fail(exc)


if __name__ == "__main__":
    sys.exit(main())
