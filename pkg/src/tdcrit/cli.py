"""Command-line front end. Every command prints one JSON object per line.

Exit codes: 0 success, 2 parse/input error, 3 capacity error,
4 spec-validation or precondition failure, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .canon import canonical_form
from .constructions import (
    ConstructionSpec,
    build_family,
    generate_S_family,
    verify_construction,
)
from .criticality import KINDS, classify, conjecture_stress, find_critical_graphs
from .exceptions import CapacityError, DomainError, GraphInputError, SpecValidationError
from .graph6 import emit_graph6, parse_graph6
from .solver import is_feasible_ranking, td, tree_depth
from .uniqueness import (
    check_top_set_characterization,
    decomposition_optimum,
    is_1_unique_graph,
    is_1_unique_vertex,
    is_t_unique_vertex,
    quotient_graph,
    star_clique_transform,
    uniqueness_profile,
)


def _emit(record, out):
    out.write(json.dumps(record, separators=(",", ":")) + "\n")


def _int_list(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise GraphInputError(f"expected comma-separated integers, got {text!r}") from None


def _graphs(args, stdin):
    if args.graph is not None and args.graph != "-":
        yield args.graph.strip(), parse_graph6(args.graph)
        return
    if args.file:
        with open(args.file, encoding="ascii") as fh:
            lines = fh.readlines()
    else:
        lines = stdin.readlines()
    for line in lines:
        if line.strip():
            yield line.strip(), parse_graph6(line)


# -- commands ---------------------------------------------------------------

def cmd_td(args, out, stdin):
    for text, G in _graphs(args, stdin):
        rec = {"command": "td", "graph6": text}
        res = tree_depth(G, cap=args.cap)
        if res is None:
            rec["td"] = None
            rec["exceeds_cap"] = args.cap
        else:
            rec["td"] = res.value
            if args.witness:
                rec["witness"] = list(res.witness)
        _emit(rec, out)


def cmd_rank(args, out, stdin):
    for text, G in _graphs(args, stdin):
        rec = {"command": "rank", "graph6": text}
        if args.labels is not None:
            labels = _int_list(args.labels)
            rec["labels"] = labels
            rec["feasible"] = is_feasible_ranking(G, labels)
            k = td(G)
            rec["optimal"] = rec["feasible"] and max(labels, default=0) == k
        else:
            res = tree_depth(G)
            rec["td"] = res.value
            rec["ranking"] = list(res.witness)
        _emit(rec, out)


def cmd_classify(args, out, stdin):
    for text, G in _graphs(args, stdin):
        rep = classify(G)
        rec = {"command": "classify", "graph6": text}
        rec.update(rep.flags())
        if args.witness:
            w = rep.failing_witness
            rec["failing_witness"] = None if w is None else [w[0], w[1]]
        _emit(rec, out)


def cmd_unique(args, out, stdin):
    for text, G in _graphs(args, stdin):
        rec = {"command": "unique", "graph6": text}
        if args.t is not None:
            vertices = range(G.n) if args.vertex is None else [args.vertex]
            if args.t == 1:
                flags = [is_1_unique_vertex(G, v) for v in vertices]
            else:
                flags = [is_t_unique_vertex(G, v, args.t) for v in vertices]
            rec["t"] = args.t
            rec["vertices"] = list(vertices)
            rec["unique"] = flags
        else:
            prof = uniqueness_profile(G)
            rec["td"] = prof.td
            rec["min_t"] = list(prof.min_t)
            rec["graph_min_t"] = prof.graph_min_t
            rec["one_unique"] = prof.one_unique
        _emit(rec, out)


def cmd_transform(args, out, stdin):
    for text, G in _graphs(args, stdin):
        rec = {"command": "transform", "graph6": text}
        if args.star_clique is not None:
            H = star_clique_transform(G, args.star_clique)
            rec["star_clique"] = args.star_clique
        else:
            S = _int_list(args.quotient)
            H = quotient_graph(G, S)
            rec["quotient"] = S
        rec["result"] = emit_graph6(H)
        rec["td"] = td(H)
        _emit(rec, out)


def cmd_decompose(args, out, stdin):
    for text, G in _graphs(args, stdin):
        S, value = decomposition_optimum(G)
        rec = {"command": "decompose", "graph6": text, "subset": sorted(S),
               "value": value, "td": td(G)}
        if args.top_set is not None:
            T = _int_list(args.top_set)
            rec["top_set"] = T
            rec["top_set_agrees"] = check_top_set_characterization(G, T)
        _emit(rec, out)


def cmd_enumerate(args, out, stdin):
    graphs = find_critical_graphs(args.k, args.nmax, args.kind)
    graphs.sort(key=canonical_form)
    for G in graphs:
        rec = {"command": "enumerate", "graph6": emit_graph6(G), "k": args.k,
               "kind": args.kind, "order": G.n}
        if args.stress_conjectures:
            rec["max_degree"] = G.max_degree()
            rec["order_bound_ok"] = G.n <= 2 ** (args.k - 1)
            rec["degree_bound_ok"] = G.max_degree() <= args.k - 1
            rec["one_unique"] = is_1_unique_graph(G)
        _emit(rec, out)


def cmd_stress(args, out, stdin):
    rep = conjecture_stress(args.k, args.nmax)
    for r in sorted(rep.records, key=lambda r: r.graph6):
        _emit({"command": "stress", "graph6": r.graph6, "order": r.order,
               "max_degree": r.max_degree, "one_unique": r.one_unique,
               "order_bound_ok": r.order_bound_ok, "degree_bound_ok": r.degree_bound_ok,
               "counterexample": r.counterexample}, out)
    _emit({"command": "stress", "summary": True, "k": rep.k, "n_max": rep.n_max,
           "critical_graphs": len(rep.records),
           "counterexamples": [r.graph6 for r in rep.counterexamples],
           "induced_critical_orders": list(rep.induced_critical_orders),
           "induced_order_bound_ok": rep.induced_order_bound_ok}, out)


def _parse_params(text):
    params = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        if "=" not in item:
            raise GraphInputError(f"parameter {item!r} is not key=value")
        key, value = item.split("=", 1)
        key = key.strip()
        if key == "partition":
            params[key] = tuple(int(x) for x in value.replace("-", "+").split("+"))
        else:
            try:
                params[key] = int(value)
            except ValueError:
                raise GraphInputError(f"parameter {key} must be an integer, got {value!r}") from None
    return params


def _parse_attach(text):
    g6, sep, w = text.rpartition(":")
    if not sep:
        raise GraphInputError(f"--attach expects GRAPH6:VERTEX, got {text!r}")
    try:
        vertex = int(w)
    except ValueError:
        raise GraphInputError(f"attachment vertex must be an integer, got {w!r}") from None
    return parse_graph6(g6), vertex


def cmd_construct(args, out, stdin):
    if args.family:
        G = build_family(args.family, _parse_params(args.params or ""))
        rep = classify(G)
        rec = {"command": "construct", "family": args.family, "params": args.params or "",
               "graph6": emit_graph6(G), "order": G.n}
        rec.update(rep.flags())
        _emit(rec, out)
        return
    if args.s_family is not None:
        base = [parse_graph6(b) for b in args.base or []]
        members = list(generate_S_family(args.s_family, base, args.order_cap))
        members.sort(key=lambda m: canonical_form(m.graph))
        for m in members:
            _emit({"command": "construct", "s_family": args.s_family,
                   "graph6": emit_graph6(m.graph), "order": m.graph.n,
                   "tree": m.tree.to_dict()}, out)
        return
    if not args.host:
        raise GraphInputError("construct needs --host with --attach, --family, or --s-family")
    host = parse_graph6(args.host)
    spec = ConstructionSpec(host, [_parse_attach(a) for a in args.attach or []])
    rep = verify_construction(spec)
    rec = {"command": "construct", "host": args.host, "attach": list(args.attach or [])}
    rec.update(rep.to_dict())
    _emit(rec, out)
    if not rep.ok:
        raise SpecValidationError(rep.problems)


# -- parser -----------------------------------------------------------------

def _add_input(p):
    p.add_argument("graph", nargs="?", help="graph6 string ('-' or omitted: read stdin)")
    p.add_argument("--file", help="file with one graph6 per line")


def build_parser():
    parser = argparse.ArgumentParser(prog="tdcrit", description="Tree-depth, uniqueness and critical graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("td", help="exact tree-depth")
    _add_input(p)
    p.add_argument("--witness", action="store_true", help="include an optimal ranking")
    p.add_argument("--cap", type=int, help="stop once td is proven to exceed CAP")
    p.set_defaults(func=cmd_td)

    p = sub.add_parser("rank", help="optimal ranking, or check --labels")
    _add_input(p)
    p.add_argument("--labels", help="comma-separated labels in vertex order")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("classify", help="criticality flags")
    _add_input(p)
    p.add_argument("--witness", action="store_true", help="include the failing one-step minor")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("unique", help="t-uniqueness profile or per-vertex flags")
    _add_input(p)
    p.add_argument("--t", type=int)
    p.add_argument("--vertex", type=int)
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("transform", help="star-clique transform or quotient graph")
    _add_input(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--star-clique", type=int, metavar="V")
    g.add_argument("--quotient", metavar="S", help="comma-separated vertex set")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("decompose", help="minimize td(G<S>) + td(G-S)")
    _add_input(p)
    p.add_argument("--top-set", metavar="T", help="also check the top-set characterization for T")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", help="critical graphs of given tree-depth")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="minor")
    p.add_argument("--stress-conjectures", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("construct", help="adjoin, explicit families, or the S_k family")
    p.add_argument("--host")
    p.add_argument("--attach", action="append", metavar="GRAPH6:W")
    p.add_argument("--family", choices=("Q", "R", "Gk"))
    p.add_argument("--params", help="e.g. k=4,t=1 or k=4,s=3,partition=2+1")
    p.add_argument("--s-family", type=int, metavar="K")
    p.add_argument("--base", action="append", metavar="GRAPH6")
    p.add_argument("--order-cap", type=int, default=16)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("stress", help="check the order/degree/1-uniqueness conjectures")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_stress)
    return parser


def main(argv=None, out=None, stdin=None):
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out, stdin)
    except GraphInputError as exc:
        print(f"tdcrit: input error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"tdcrit: capacity error: {exc}", file=sys.stderr)
        return 3
    except (SpecValidationError, DomainError) as exc:
        print(f"tdcrit: validation failed: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
