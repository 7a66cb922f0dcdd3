"""Command-line front end.

Subcommands: check, embed-max, embed-sum, embed-minres, embed-2d, render,
gen, bench.  Exit codes: 0 success / embedding exists, 1 no embedding (a
machine-readable reason goes to stdout), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .embedding import (
    BookEmbedding,
    is_one_page,
    validate_max,
    validate_minres_supporting,
    validate_sum,
)
from .errors import BookEmbedError
from .exact import parse_rational
from .graph import parse_graph, serialize_graph
from .maxdraw import _per_component, embed_max
from .minres import minres_be_drawer
from .oracle import random_outerplanar
from .render import RenderSpec, render_arcs, render_rects
from .sumdraw import embed_sum
from .twodim import TwoDimEmbedding, minres_construct, twodim_general


def _read_text(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_graph(args):
    return parse_graph(_read_text(args.input), format=args.format)


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _threads(args):
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("BOOKEMBED_THREADS")
    return max(1, int(env)) if env else 1


_VALIDATORS = {
    "one-page": lambda g, L: None if is_one_page(g, L) else {"crossing": True},
    "max": validate_max,
    "sum": validate_sum,
    "minres": validate_minres_supporting,
}


def _cmd_check(args):
    g = _load_graph(args)
    order_text = args.order
    if order_text.startswith("@"):
        order_text = _read_text(order_text[1:])
    elif order_text == "-":
        order_text = sys.stdin.read()
    embedding = BookEmbedding.from_json(order_text, g)
    if args.embedding_class != "one-page" and not is_one_page(g, embedding):
        _emit(args, json.dumps({"ok": False, "reason": "not a 1-page embedding"}) + "\n")
        return 1
    verdict = _VALIDATORS[args.embedding_class](g, embedding)
    if verdict is None:
        _emit(args, json.dumps({"ok": True}) + "\n")
        return 0
    record = (
        verdict.to_json(g, embedding) if hasattr(verdict, "to_json") else verdict
    )
    _emit(args, json.dumps({"ok": False, "violation": record}) + "\n")
    return 1


def _cmd_embed(args, driver, class_name):
    g = _load_graph(args)
    result = driver(g)
    if isinstance(result, BookEmbedding):
        _emit(args, result.to_json(g) + "\n")
        return 0
    reason = getattr(result, "detail", "") or "no embedding exists"
    doc = {"exists": False, "class": class_name, "reason": reason}
    if result is not None and hasattr(result, "condition"):
        doc["failure_condition"] = result.condition
    _emit(args, json.dumps(doc) + "\n")
    return 1


def _cmd_embed_minres(args):
    g = _load_graph(args)
    threads = _threads(args)
    result = _per_component(g, lambda sub: minres_be_drawer(sub, threads=threads))
    if isinstance(result, BookEmbedding):
        _emit(args, result.to_json(g) + "\n")
        return 0
    _emit(
        args,
        json.dumps(
            {"exists": False, "class": "minres", "reason": "no supporting embedding"}
        )
        + "\n",
    )
    return 1


def _cmd_embed_2d(args):
    g = _load_graph(args)
    if args.minres:
        threads = _threads(args)
        result = _per_component(g, lambda sub: minres_be_drawer(sub, threads=threads))
        if not isinstance(result, BookEmbedding):
            _emit(
                args,
                json.dumps({"exists": False, "reason": "no supporting embedding"})
                + "\n",
            )
            return 1
        emb2d = minres_construct(g, result)
    else:
        eps = parse_rational(args.eps)
        length = parse_rational(args.box_width) if args.box_width else None
        emb2d = twodim_general(g, eps=eps, length=length)
    _emit(args, emb2d.to_json(g) + "\n")
    return 0


def _cmd_render(args):
    spec = RenderSpec(
        style=args.style,
        scale=args.scale,
        labels=not args.no_labels,
        weight_labels=args.weight_labels,
    )
    text = _read_text(args.input)
    doc = json.loads(text)
    if isinstance(doc, dict) and "vertices" in doc and "edges" in doc:
        g, emb2d = TwoDimEmbedding.from_json(text)
        if spec.style == "arc":
            _emit(args, render_arcs(g, emb2d.support, spec))
        else:
            _emit(args, render_rects(g, emb2d, spec))
        return 0
    if spec.style != "arc":
        raise BookEmbedError("rect/disk rendering needs a 2-D embedding document")
    if not args.graph:
        raise BookEmbedError("arc rendering from a bare order needs --graph")
    g = parse_graph(_read_text(args.graph), format=args.format)
    embedding = BookEmbedding(g.resolve(v) for v in doc)
    _emit(args, render_arcs(g, embedding, spec))
    return 0


def _cmd_gen(args):
    g = random_outerplanar(
        args.n,
        (args.wmin, args.wmax),
        seed=args.seed,
        biconnected=args.biconnected,
    )
    _emit(args, serialize_graph(g) + "\n")
    return 0


def _bench_once(algo, n, seed, impl):
    if algo in ("max", "sum", "minres", "2d"):
        # a wide weight range avoids maximum-weight ties that would let the
        # drawers exit before doing size-dependent work
        g = random_outerplanar(n, (1, 10**9), seed=seed, biconnected=True)
        start = time.perf_counter()
        if algo == "max":
            embed_max(g)
        elif algo == "sum":
            embed_sum(g)
        elif algo == "minres":
            minres_be_drawer(g)
        else:
            twodim_general(g, eps=Fraction(1))
        return time.perf_counter() - start
    # oracle benches: n = number of random 8-vertex instances to sweep
    cls = algo.split("-", 1)[1]
    instances = [
        random_outerplanar(8, (1, 6), seed=seed + i, biconnected=False)
        for i in range(n)
    ]
    from . import oracle as oracle_mod
    from ._fast import kernel

    chosen = kernel(impl)
    start = time.perf_counter()
    for g in instances:
        eu = [u for u, _, _ in g.edges]
        ev = [v for _, v, _ in g.edges]
        wnum, wden = oracle_mod._scaled_weights(g)
        chosen.class_sweep(
            g.n, eu, ev, wnum, wden, oracle_mod._CLASS_CODES[cls], 1, True
        )
    return time.perf_counter() - start


def _cmd_bench(args):
    sizes = [int(s) for s in args.sizes.split(",") if s]
    impls = ["native", "pure"] if args.impl == "both" else [args.impl]
    rows = ["algo,n,seconds"]
    for impl in impls:
        label = args.algo if len(impls) == 1 else f"{args.algo}[{impl}]"
        for n in sizes:
            seconds = _bench_once(args.algo, n, args.seed, impl)
            rows.append(f"{label},{n},{seconds:.6f}")
    _emit(args, "\n".join(rows) + "\n")
    return 0


def _add_io(parser, with_output=True):
    parser.add_argument("input", nargs="?", default="-", help="graph file or - for stdin")
    parser.add_argument(
        "--format", choices=("json", "edge-list"), default="json",
        help="input graph format",
    )
    if with_output:
        parser.add_argument("--output", help="write result here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bookembed",
        description=(
            "Constrained 1-page and two-dimensional book embeddings of "
            "weighted outerplanar graphs.  Disconnected inputs are embedded "
            "per component and concatenated."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a vertex order against a class")
    p.add_argument(
        "embedding_class", choices=("one-page", "max", "sum", "minres"),
    )
    p.add_argument(
        "--order", required=True,
        help="JSON array of vertex ids, @file, or - for stdin",
    )
    _add_io(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("embed-max", help="max-constrained 1-page embedding")
    _add_io(p)
    p.set_defaults(func=lambda a: _cmd_embed(a, embed_max, "max"))

    p = sub.add_parser("embed-sum", help="sum-constrained 1-page embedding")
    _add_io(p)
    p.set_defaults(func=lambda a: _cmd_embed(a, embed_sum, "sum"))

    p = sub.add_parser("embed-minres", help="resolution-supporting 1-page embedding")
    _add_io(p)
    p.add_argument("--threads", type=int, help="parallel anchor runs")
    p.set_defaults(func=_cmd_embed_minres)

    p = sub.add_parser("embed-2d", help="two-dimensional book embedding (JSON)")
    _add_io(p)
    p.add_argument("--eps", default="1", help="area slack for the augmentation")
    p.add_argument("--L", dest="box_width", help="box width (rational)")
    p.add_argument(
        "--minres", action="store_true",
        help="build the unit-resolution drawing instead",
    )
    p.add_argument("--threads", type=int, help="parallel anchor runs (with --minres)")
    p.set_defaults(func=_cmd_embed_2d)

    p = sub.add_parser("render", help="render an embedding as SVG")
    _add_io(p)
    p.add_argument("--style", choices=("arc", "rect", "disk"), default="rect")
    p.add_argument("--scale", type=float, default=40.0)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--weight-labels", action="store_true")
    p.add_argument("--graph", help="graph file (for arc style over a bare order)")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("gen", help="seeded random outerplanar graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--biconnected", action="store_true")
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=20)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="timing CSV over instance sizes")
    p.add_argument(
        "--algo", required=True,
        choices=("max", "sum", "minres", "2d", "oracle-max", "oracle-sum",
                 "oracle-minres-supporting"),
    )
    p.add_argument("--sizes", required=True, help="comma-separated sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--impl", choices=("auto", "native", "pure", "both"), default="auto",
        help="kernel used by the oracle benches",
    )
    p.add_argument("--output")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BookEmbedError as exc:
        print(f"bookembed: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"bookembed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
