"""Command-line front end: one binary, one subcommand per operation family.

Exit codes: 0 on success, 1 when a verification fails (a certificate that
does not check out), 2 on usage or parse errors. Graph inputs may be a file
path or an inline graph6 string; file contents starting with a digit are
read as the edge-list format, anything else as graph6.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import __version__
from .coloring import (
    EdgeColoring,
    parse_coloring_certificate,
    verify_mvx_coloring,
    verify_mx_coloring,
    write_coloring_certificate,
)
from .graphs import (
    BudgetError,
    Graph,
    Graph6Error,
    enumerate_connected_graphs,
    parse_graph,
    to_graph6,
)
from .mvx import diameter_upper_bound, mvx_exact, mvx_via_cut_vertex
from .mx import construct_extremal_mx, mx_exact_bruteforce, mx_k_formula
from .reduction import (
    DominationCertificate,
    build_gadget,
    decide_ds_via_mvx,
    lift_dominating_set,
    minimum_dominating_set,
    write_domination_certificates,
)
from .survey import (
    enumerate_coconnected,
    locate_F1,
    survey_bounds,
    survey_csv_text,
    write_survey_csv,
)


@dataclass
class RunConfig:
    command: str
    graph_source: str | None = None
    k: int | None = None
    n: int | None = None
    exact: bool = False
    cut_vertex: bool = False
    bound: bool = False
    witness: str | None = None
    coloring: str | None = None
    emit_gadget: str | None = None
    certificates: str | None = None
    csv: str | None = None
    find_f1: bool = False
    include_n8: bool = False
    coconnected: bool = False
    all_graphs: bool = False
    out: str | None = None
    jobs: int = 1
    max_edges: int | None = None
    max_vertices: int | None = None
    verbose: bool = False


def _load_graph(source: str) -> Graph:
    if os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
    else:
        text = source
    return parse_graph(text)


def _info(config: RunConfig, message: str) -> None:
    if config.verbose:
        print(message, file=sys.stderr)


def _cmd_mx(config: RunConfig) -> int:
    g = _load_graph(config.graph_source)
    k = config.k
    if config.exact or k == 2:
        if not config.exact:
            raise ValueError("the closed form covers k >= 3 only; pass --exact for k=2")
        kwargs = {} if config.max_edges is None else {"max_edges": config.max_edges}
        result = mx_exact_bruteforce(g, k, **kwargs)
        value, witness = result.value, result.witness
    else:
        value = mx_k_formula(g, k)
        witness = construct_extremal_mx(g)
    print(value)
    if config.witness:
        with open(config.witness, "w") as fh:
            fh.write(write_coloring_certificate(witness))
        _info(config, f"witness written to {config.witness}")
    return 0


def _cmd_mvx(config: RunConfig) -> int:
    g = _load_graph(config.graph_source)
    k = config.k
    if config.bound:
        print(diameter_upper_bound(g))
        return 0
    if config.cut_vertex:
        result = mvx_via_cut_vertex(g, k)
    else:
        kwargs = {} if config.max_vertices is None else {"max_vertices": config.max_vertices}
        result = mvx_exact(g, k, **kwargs)
    print(result.value)
    if config.witness and result.witness is not None:
        with open(config.witness, "w") as fh:
            fh.write(write_coloring_certificate(result.witness))
        _info(config, f"witness written to {config.witness}")
    return 0


def _cmd_reduce(config: RunConfig) -> int:
    g = _load_graph(config.graph_source)
    K = config.k
    answer = decide_ds_via_mvx(g, K)
    print("yes" if answer else "no")
    gm = build_gadget(g)
    if config.emit_gadget:
        with open(config.emit_gadget, "w") as fh:
            fh.write(to_graph6(gm.gadget) + "\n")
        _info(config, f"gadget written to {config.emit_gadget}")
    if config.certificates:
        dom = DominationCertificate(minimum_dominating_set(g), "dominating")
        lifted = lift_dominating_set(gm, dom)
        with open(config.certificates, "w") as fh:
            fh.write(write_domination_certificates([dom, lifted]))
        _info(config, f"certificates written to {config.certificates}")
    return 0


def _cmd_gadget(config: RunConfig) -> int:
    g = _load_graph(config.graph_source)
    gm = build_gadget(g)
    print(f"graph6: {to_graph6(gm.gadget)}")
    print(f"x: {gm.x}")
    print(f"y: {gm.y}")
    print("u:", " ".join(str(gm.u_index[i]) for i in range(g.n)))
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(to_graph6(gm.gadget) + "\n")
    return 0


def _cmd_survey(config: RunConfig) -> int:
    if config.find_f1:
        for g in locate_F1():
            print(to_graph6(g))
        return 0
    records = survey_bounds(config.n, include_n8=config.include_n8, jobs=config.jobs)
    if config.k is not None:
        records = [r for r in records if r.k == config.k]
    if config.csv:
        write_survey_csv(records, config.csv)
        print(f"wrote {len(records)} records to {config.csv}")
    else:
        sys.stdout.write(survey_csv_text(records))
    failures = sum(1 for r in records if r.verdict == "fail")
    return 1 if failures else 0


def _cmd_verify(config: RunConfig) -> int:
    with open(config.coloring) as fh:
        cert = parse_coloring_certificate(fh.read())
    if isinstance(cert, EdgeColoring):
        ok = verify_mx_coloring(cert, config.k)
    else:
        ok = verify_mvx_coloring(cert, config.k)
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def _cmd_enumerate(config: RunConfig) -> int:
    n = config.n
    if config.coconnected:
        graphs = enumerate_coconnected(n)
    elif config.all_graphs:
        from .graphs import enumerate_graphs

        graphs = enumerate_graphs(n)
    else:
        graphs = enumerate_connected_graphs(n)
    for g in graphs:
        print(to_graph6(g))
    return 0


_DISPATCH = {
    "mx": _cmd_mx,
    "mvx": _cmd_mvx,
    "reduce": _cmd_reduce,
    "gadget": _cmd_gadget,
    "survey": _cmd_survey,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
}


def run(config: RunConfig) -> int:
    """Dispatch a parsed configuration; returns the process exit status."""
    return _DISPATCH[config.command](config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoindex",
        description="Monochromatic connectivity indices of small graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mx", help="edge index of a graph at k")
    p.add_argument("--graph", required=True, help="path or inline graph6")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="partition search instead of the closed form")
    p.add_argument("--witness", help="write the witness coloring certificate here")
    p.add_argument("--max-edges", type=int, help="override the partition-search edge budget")
    p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("mvx", help="vertex index of a graph at k")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact partition search (default)")
    mode.add_argument("--cut-vertex", action="store_true", help="fast path for cut-vertex graphs")
    mode.add_argument("--bound", action="store_true", help="print the diameter upper bound")
    p.add_argument("--witness", help="write the witness coloring certificate here")
    p.add_argument("--max-vertices", type=int, help="override the partition-search vertex budget")
    p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("reduce", help="dominating-set decision through the gadget")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True, help="dominating-set size threshold K")
    p.add_argument("--emit-gadget", help="write the gadget graph6 here")
    p.add_argument("--certificates", help="write dominating/lifted certificates here")
    p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("gadget", help="print the reduction gadget and its vertex map")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", help="also write the gadget graph6 here")

    p = sub.add_parser("survey", help="complement-pair bound survey")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="restrict records to one k")
    p.add_argument("--csv", help="write records here instead of stdout")
    p.add_argument("--find-f1", action="store_true", help="print the located extremal pair")
    p.add_argument("--include-n8", action="store_true", help="allow the slow n=8 survey")
    p.add_argument("--threads", dest="jobs", type=int, default=1,
                   help="worker processes for the index search; output order is unaffected")

    p = sub.add_parser("verify", help="check a coloring certificate at k")
    p.add_argument("--coloring", required=True, help="certificate file")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("enumerate", help="list small graphs as graph6, one per line")
    p.add_argument("--n", type=int, required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--coconnected", action="store_true", help="graph and complement connected")
    kind.add_argument("--all", dest="all_graphs", action="store_true", help="drop the connectivity filter")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {f: getattr(args, f) for f in vars(args) if f in RunConfig.__dataclass_fields__}
    config = RunConfig(command=args.command, **{k: v for k, v in fields.items() if k != "command"})
    if getattr(args, "graph", None) is not None:
        config.graph_source = args.graph
    return config


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = config_from_args(args)
    try:
        return run(config)
    except (Graph6Error, BudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
