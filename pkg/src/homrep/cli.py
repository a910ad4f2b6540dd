"""Command-line front end.

Subcommands: info (structure report), rep (matrices, kernel, faithful
flag), classify (verdict with scripting-friendly exit code), verify
(exhaustive small-graph cross-check), gen (decorated-cycle generator).

Exit codes: 0 success / faithful, 2 input error, 3 not faithful
(classify only), 4 automorphism cap exceeded, 5 verification
disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from .autgroup import DEFAULT_CAP
from .blocks import (
    block_decomposition,
    block_tree,
    is_periodic_unicyclic,
    pendant_trees,
)
from .classify import classify
from .cycles import betti, random_spanning_tree_basis, spanning_tree_basis
from .errors import CapacityError, DisconnectedGraphError, GraphParseError
from .families import RootedTreeSpec, build_periodic_unicyclic, named_family
from .graphs import Graph, format_edge_list, parse_edge_list, parse_graph6, require_connected
from .matrices import matrix_mod_p
from .rep import representation
from .verify import verify_corpus

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_FAITHFUL = 3
EXIT_CAPACITY = 4
EXIT_DISAGREEMENT = 5


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH",
                     help="edge-list file ('-' reads stdin)")
    src.add_argument("--family", nargs=2, metavar=("NAME", "SIZE"),
                     help="named family: cycle | complete | star | path | bowtie")
    src.add_argument("--g6", metavar="STRING", help="graph6-encoded graph")


def _add_tree_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tree", choices=("det", "rand"), default="det",
                   help="spanning tree: deterministic BFS or seeded random DFS")
    p.add_argument("--seed", type=int, default=1,
                   help="seed for --tree rand (default 1)")


def _load_graph(args) -> Graph:
    if args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input) as fh:
                    text = fh.read()
            except OSError as exc:
                raise GraphParseError(f"cannot read {args.input}: {exc}") from None
        return parse_edge_list(text)
    if args.family is not None:
        name, size = args.family
        try:
            size = int(size)
        except ValueError:
            raise ValueError(f"family size must be an integer, got {size!r}") from None
        return named_family(name, size)
    return parse_graph6(args.g6)


def _basis(args, g: Graph):
    if args.tree == "rand":
        return random_spanning_tree_basis(g, args.seed)
    return spanning_tree_basis(g)


def cmd_info(args) -> int:
    g = _load_graph(args)
    require_connected(g)
    beta = betti(g)
    d = block_decomposition(g)
    trees = pendant_trees(g) if beta >= 1 else ()
    periodic, period = is_periodic_unicyclic(g)
    bt = block_tree(d) if d.blocks else None
    if args.json:
        out = {
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "betti": beta,
            "blocks": [sorted(b) for b in d.blocks],
            "cutvertices": sorted(d.cutvertices),
            "bridges": [list(e) for e in sorted(d.bridges)],
            "block_tree": bt.to_json() if bt else None,
            "pendant_trees": [
                {"root": t.root, "vertices": sorted(t.vertices),
                 "edges": [list(e) for e in t.edges]}
                for t in trees],
            "unicyclic": beta == 1,
            "periodic": periodic,
            "period": period,
        }
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"vertices: {g.n}")
    print(f"edges: {g.num_edges}")
    print(f"betti: {beta}")
    for i, b in enumerate(d.blocks):
        kind = "bridge" if len(b) == 2 else "block"
        print(f"{kind} {i}: {{{', '.join(map(str, sorted(b)))}}}")
    print(f"cutvertices: {sorted(d.cutvertices) if d.cutvertices else 'none'}")
    if bt is not None:
        centre = bt.nodes[bt.centre]
        desc = (f"block {sorted(centre.members)}" if centre.kind == "block"
                else f"cutvertex {centre.vertex}")
        print(f"block tree: {len(bt.nodes)} nodes, centre = {desc}")
    for t in trees:
        print(f"pendant tree at {t.root}: vertices {sorted(t.vertices)}")
    if beta == 1:
        status = f"yes, period {period}" if periodic else "no"
        print(f"unicyclic: yes; periodic: {status}")
    return EXIT_OK


def cmd_rep(args) -> int:
    g = _load_graph(args)
    require_connected(g)
    b = _basis(args, g)
    report = representation(g, b, cap=args.cap)
    kernel_set = set(report.kernel)
    shown = report.kernel if args.kernel_only else list(report.matrices)
    if args.json:
        out = {
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "tree_mode": args.tree,
            "seed": args.seed if args.tree == "rand" else None,
            "basis": {
                "root": b.root,
                "tree_edges": [list(e) for e in sorted(b.tree_edges)],
                "cotree": [list(d) for d in b.cotree],
            },
            "betti": b.beta,
            "group_order": report.group_order,
            "matrices": [
                {"perm": list(f.perm), "matrix": report.matrices[f].to_json()}
                for f in shown],
            "kernel": [list(f.perm) for f in report.kernel],
            "faithful": report.faithful,
        }
        if args.mod_p:
            out["mod_p"] = {
                "p": args.mod_p,
                "matrices": [
                    {"perm": list(f.perm),
                     "matrix": matrix_mod_p(report.matrices[f], args.mod_p).to_json()}
                    for f in shown],
            }
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"tree mode: {args.tree}"
          + (f" (seed {args.seed})" if args.tree == "rand" else ""))
    print(f"tree edges: {sorted(b.tree_edges)}")
    print(f"cotree darts: {[tuple(d) for d in b.cotree]}")
    print(f"betti: {b.beta}")
    print(f"group order: {report.group_order}")
    for f in shown:
        tag = " (kernel)" if f in kernel_set else ""
        print(f"automorphism {list(f.perm)}{tag}")
        m = report.matrices[f]
        if m.dim:
            print(m.render_text())
        else:
            print("(empty 0x0 matrix)")
        if args.mod_p:
            print(f"mod {args.mod_p}:")
            print(matrix_mod_p(m, args.mod_p).render_text() or "(empty)")
    print(f"kernel size: {len(report.kernel)}")
    print(f"faithful: {report.faithful}")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load_graph(args)
    verdict = classify(g)
    if args.json:
        print(json.dumps(verdict.to_json(), indent=2))
    elif verdict.faithful:
        print("faithful")
    else:
        print(f"not faithful: {verdict.describe()}")
    return EXIT_OK if verdict.faithful else EXIT_NOT_FAITHFUL


def cmd_verify(args) -> int:
    seeds = tuple(int(tok) for tok in args.seeds.split(",") if tok.strip())
    shown = {"n": None, "count": 0}

    def progress(n, count):
        if not args.json and (count % 2000 == 0 or count == 1 and n != shown["n"]):
            shown["n"] = n
            print(f"n={n}: {count} graphs checked ...", flush=True)

    if not args.json:
        print(f"tree seeds: {list(seeds)}; pair sample: {args.sample}")
    summary = verify_corpus(args.n_max, seeds=seeds, pair_sample=args.sample,
                            cap=args.cap, fail_fast=True, progress=progress)
    if args.json:
        out = {
            "n_max": summary.n_max,
            "seeds": list(seeds),
            "pair_sample": args.sample,
            "graphs": summary.per_n,
            "criteria": {
                name: {"checked": r.checked, "violations": r.violations}
                for name, r in summary.criteria.items()},
            "mod2_kernel_exceeds_integer_kernel": {
                "count": summary.mod2_extra_count,
                "examples": summary.mod2_extra_examples[:5]},
            "ok": summary.ok,
            "failure": (
                {"criterion": summary.failure.criterion,
                 "detail": summary.failure.detail,
                 "graph": summary.failure.graph_text}
                if summary.failure else None),
        }
        print(json.dumps(out, indent=2))
    else:
        for n, count in summary.per_n.items():
            print(f"n={n}: {count} graphs")
        for name, r in summary.criteria.items():
            print(f"{name}: {r.checked} checks, {r.violations} violations")
        print(f"mod-2 kernel strictly larger than integer kernel on "
              f"{summary.mod2_extra_count} graphs (reported, not asserted)")
        if summary.failure:
            print("DISAGREEMENT FOUND")
            print(f"criterion: {summary.failure.criterion}")
            print(f"detail: {summary.failure.detail}")
            print("reproducer edge list:")
            print(summary.failure.graph_text, end="")
    return EXIT_OK if summary.ok else EXIT_DISAGREEMENT


def cmd_gen(args) -> int:
    specs = [RootedTreeSpec.parse(s) for s in args.spec]
    g, rho = build_periodic_unicyclic(args.n, args.k, specs)
    if args.json:
        out = {
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "rho": list(rho.perm),
            "order": rho.order(),
        }
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(format_edge_list(g), end="")
    print(f"# rho: {' '.join(map(str, rho.perm))}")
    print(f"# order: {rho.order()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homrep",
        description="Matrix action of graph automorphisms on the cycle space")
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="structure report: blocks, cycles, pendant trees")
    _add_input_flags(p_info)
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(func=cmd_info)

    p_rep = sub.add_parser("rep", help="matrices, kernel and faithfulness")
    _add_input_flags(p_rep)
    _add_tree_flags(p_rep)
    p_rep.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="abort if the group order exceeds this")
    p_rep.add_argument("--mod-p", type=int, default=None, metavar="P",
                       help="also print matrices reduced modulo the prime P")
    p_rep.add_argument("--kernel-only", action="store_true",
                       help="print matrices only for kernel elements")
    p_rep.add_argument("--json", action="store_true")
    p_rep.set_defaults(func=cmd_rep)

    p_cls = sub.add_parser("classify", help="faithfulness verdict (exit 3 when not faithful)")
    _add_input_flags(p_cls)
    p_cls.add_argument("--json", action="store_true")
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="exhaustive cross-check on all small graphs")
    p_ver.add_argument("--n-max", type=int, default=6,
                       help="largest vertex count to enumerate (2..6, default 6)")
    p_ver.add_argument("--sample", type=int, default=200,
                       help="pairs sampled per graph for the n=6 homomorphism check")
    p_ver.add_argument("--seeds", default="1,2,3,4,5",
                       help="comma-separated seeds for the random-tree kernels")
    p_ver.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a decorated cycle with its rotation")
    p_gen.add_argument("n", type=int, help="cycle length")
    p_gen.add_argument("k", type=int, help="period (divides n, smaller than n)")
    p_gen.add_argument("spec", nargs="+",
                       help="k rooted trees as parent lists, e.g. \"[-1,0,0,1]\"")
    p_gen.add_argument("--json", action="store_true")
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, DisconnectedGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
