"""Command line entry point.

Every subcommand is deterministic for fixed inputs, flags and seed, and
has a ``--format json`` mode whose output validates against the schemas
shipped in ``gropecalc/schemas``.  Exit codes: 0 success, 1 domain
error, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import clasper as cl
from . import diagram_space as ds
from . import graphs as gr
from . import ihx as ix
from . import lie_bridge as mg
from . import refinement as rf
from . import trees as tr

DOMAIN_ERRORS = (
    tr.TreeError,
    gr.GraphError,
    cl.ClasperError,
    ix.IhxError,
    ds.DiagramSpaceError,
    mg.MagnusError,
    rf.RefineError,
)
PARSE_ERRORS = (tr.TreeParseError, gr.GraphParseError)


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _load_graph(args) -> gr.UnitrivalentGraph:
    if args.graph:
        with open(args.graph, "r", encoding="utf-8") as fh:
            return gr.parse_graph(fh.read())
    return gr.tree_to_graph(tr.parse_tree(args.tree))


def cmd_degree(args):
    g = _load_graph(args)
    v, l, d = gr.vassiliev_degree(g), gr.loop_degree(g), gr.grope_degree(g)
    _emit(args, {"vassiliev": v, "loop": l, "grope": d}, f"v={v} loop={l} grope={d}")
    return 0


def cmd_class(args):
    t = tr.parse_tree(args.tree)
    c = tr.class_of(t)
    _emit(args, {"class": c}, f"class={c}")
    return 0


def cmd_gen(args):
    if (args.half is None) == (args.symmetric is None):
        raise tr.TreeError("pass exactly one of --half/--symmetric")
    t = tr.gen_half(args.half) if args.half is not None else tr.gen_symmetric(args.symmetric)
    s = tr.print_tree(t)
    _emit(args, {"tree": s}, s)
    return 0


def cmd_refine(args):
    t = tr.parse_tree(args.tree)
    out = rf.refine(t)
    strs = [tr.print_tree(x) for x in out]
    _emit(args, {"outputs": strs}, "\n".join(strs))
    return 0


def cmd_ihx_reduce(args):
    t = tr.parse_tree(args.tree)
    out, trace = ix.ihx_reduce_trace(t)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for rec in trace:
                fh.write(
                    json.dumps(
                        {
                            "step": rec["step"],
                            "tree": tr.print_tree(rec["tree"]),
                            "edge": rec["edge"],
                            "results": [
                                {"sign": s, "tree": tr.print_tree(x)}
                                for s, x in rec["results"]
                            ],
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )
    items = [{"sign": st.sign, "tree": tr.print_tree(st.tree)} for st in out]
    text = "\n".join(f"{'+' if it['sign'] > 0 else '-'}1 {it['tree']}" for it in items)
    _emit(args, {"outputs": items}, text)
    return 0


def cmd_clean(args):
    with open(args.state, "r", encoding="utf-8") as fh:
        initial = cl.parse_clasper_state(fh.read())
    runs = []
    trace_lines = []
    for run_index in range(args.runs):
        policy = cl.InterferencePolicy(
            mode=args.policy, bound=args.bound, seed=args.seed + run_index
        )
        terminal, remainder, trace = cl.cleanup(
            initial, policy, strategy=args.strategy, max_degree=args.max_degree
        )
        ok = cl.verify_trace(trace)
        runs.append(
            {
                "run": run_index,
                "seed": policy.seed,
                "steps": len(trace),
                "verified": ok,
                "terminal": [cl.print_clasper_state(s) for s in terminal],
                "remainder": [cl.print_clasper_state(s) for s in remainder],
            }
        )
        for rec in trace:
            line = dict(rec)
            line["run"] = run_index
            trace_lines.append(line)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for line in trace_lines:
                fh.write(json.dumps(line, sort_keys=True) + "\n")
    text = "\n".join(
        f"run {r['run']}: steps={r['steps']} terminal={len(r['terminal'])} "
        f"remainder={len(r['remainder'])} verified={str(r['verified']).lower()}"
        for r in runs
    )
    _emit(args, {"runs": runs}, text)
    return 0 if all(r["verified"] for r in runs) else 1


def cmd_verify_trace(args):
    with open(args.trace, "r", encoding="utf-8") as fh:
        trace = [json.loads(ln) for ln in fh if ln.strip()]
    ok = cl.verify_trace(trace)
    _emit(args, {"ok": ok}, "ok" if ok else "violation")
    return 0 if ok else 1


def cmd_space(args):
    p = ds.build_presentation(args.klass)
    q = ds.quotient(p)
    payload = {
        "class": args.klass,
        "generators": len(p.generators),
        "invariant_factors": q.invariant_factors,
        "free_rank": q.free_rank,
        "group": q.group_description(),
    }
    text = (
        f"class={args.klass} generators={len(p.generators)} "
        f"invariant_factors={q.invariant_factors} free_rank={q.free_rank}"
    )
    if args.dump:
        payload["presentation"] = p.dump()
        text += "\n" + p.dump().rstrip("\n")
    _emit(args, payload, text)
    return 0


def cmd_span_check(args):
    ok = ds.span_check(args.klass)
    _emit(args, {"class": args.klass, "span": ok}, "true" if ok else "false")
    return 0


def cmd_bracket(args):
    t = tr.parse_tree(args.tree)
    labels = args.labels.split(",") if args.labels else None
    word = mg.tree_to_bracket(t, labels)
    word_str = "".join(s if e > 0 else s + "'" for s, e in word)
    n = args.truncate or tr.class_of(t)
    deg = mg.lcs_degree(word, n)
    deg_str = str(deg) if deg is not None else f">={n + 1}"
    _emit(
        args,
        {"word": word_str, "lcs_degree": deg if deg is not None else None, "truncation": n},
        f"word={word_str} lcs_degree={deg_str}",
    )
    return 0


def cmd_enumerate(args):
    if (args.trees is None) == (args.graphs is None):
        raise tr.TreeError("pass exactly one of --trees/--graphs")
    if args.trees is not None:
        items = [tr.print_tree(t) for t in tr.enumerate_trees(args.trees)]
    else:
        gs = gr.enumerate_graphs(args.graphs, args.max_vertices)
        items = [gr.print_graph(g).rstrip("\n") for g in gs]
    _emit(args, {"count": len(items), "items": items}, "\n\n".join(items))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gropecalc")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=["text", "json"], default="text")
        return p

    p = add("degree", cmd_degree, help="degrees of a unitrivalent graph")
    p.add_argument("--graph", help="graph file")
    p.add_argument("--tree", help="tree string (converted to its rooted graph)")

    p = add("class", cmd_class, help="grope class of a tree")
    p.add_argument("--tree", required=True)

    p = add("gen", cmd_gen, help="generate a half-grope or symmetric tree")
    p.add_argument("--half", type=int)
    p.add_argument("--symmetric", type=int)

    p = add("refine", cmd_refine, help="push boxes down to genus-one trees")
    p.add_argument("--tree", required=True)

    p = add("ihx-reduce", cmd_ihx_reduce, help="rewrite a tree into caterpillars")
    p.add_argument("--tree", required=True)
    p.add_argument("--trace", help="write the rewrite trace (JSON lines)")

    p = add("clean", cmd_clean, help="run the clasper cleanup simulator")
    p.add_argument("--state", required=True, help="clasper state file")
    p.add_argument("--policy", choices=["zero", "adversarial"], default="zero")
    p.add_argument("--bound", type=int, default=0)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=0)
    p.add_argument("--strategy", choices=["fifo", "lifo", "random"], default="fifo")
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--trace", help="write the move trace (JSON lines)")

    p = add("verify-trace", cmd_verify_trace, help="check a cleanup trace")
    p.add_argument("--trace", required=True)

    p = add("space", cmd_space, help="diagram-space quotient of a class")
    p.add_argument("--class", dest="klass", type=int, required=True)
    p.add_argument("--dump", action="store_true", help="include the presentation")

    p = add("span-check", cmd_span_check, help="do caterpillars generate the quotient")
    p.add_argument("--class", dest="klass", type=int, required=True)

    p = add("bracket", cmd_bracket, help="commutator word and Magnus depth")
    p.add_argument("--tree", required=True)
    p.add_argument("--labels", help="comma-separated tip labels")
    p.add_argument("--truncate", type=int)

    p = add("enumerate", cmd_enumerate, help="enumerate trees or graphs")
    p.add_argument("--trees", type=int, help="class of trees to enumerate")
    p.add_argument("--graphs", type=int, help="grope degree of graphs")
    p.add_argument("--max-vertices", type=int, default=10)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except PARSE_ERRORS as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
