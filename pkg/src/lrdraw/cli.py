"""Command-line interface: generate trees, compute widths, render
drawings to SVG/JSON, enumerate the width frontier, and verify.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .drawing import GridDrawing, drawing_from_json
from .lr_opt import (
    brute_force_min_width,
    min_width,
    optimal_lr_drawing,
    rep_sequence,
)
from .outerplanar import (
    OuterplanarGraph,
    assemble_outerplanar_drawing,
    dual_tree,
    parse_graph,
    triangulate,
)
from .star_strong import strong_bell, strong_flat
from .star_weak import bell_like_drawing, flat_drawing
from .tree_model import (
    Tree,
    complete_tree,
    parse_tree,
    path_tree,
    random_tree,
    serialize_tree,
)
from .verify import (
    is_bell_like,
    is_flat,
    is_lr_drawing,
    is_outerplanar_drawing,
    is_star_shaped,
)
from .worst_case import (
    checkpoint_load,
    fit_power_law,
    lower_bound_tree,
    min_nodes_table,
)

SCALE = 24
RADIUS = 5


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _svg(d: GridDrawing, edges, closures=None) -> str:
    pts = dict(d.points)
    allpts = list(pts.values()) + (list(d.apexes) if d.apexes else [])
    x0 = min(p[0] for p in allpts)
    y1 = max(p[1] for p in allpts)

    def at(p):
        return (p[0] - x0 + 1) * SCALE, (y1 - p[1] + 1) * SCALE

    w = (max(p[0] for p in allpts) - x0 + 2) * SCALE
    h = (y1 - min(p[1] for p in allpts) + 2) * SCALE
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        'width="%d" height="%d" viewBox="0 0 %d %d">' % (w, h, w, h)
    ]
    for dash, pairs in ((False, edges), (True, closures or [])):
        style = ' stroke-dasharray="4 3"' if dash else ""
        for a, b in pairs:
            (xa, ya), (xb, yb) = at(pts[a]), at(pts[b])
            out.append(
                '<line x1="%d" y1="%d" x2="%d" y2="%d" '
                'stroke="black" stroke-width="1.5"%s/>' % (xa, ya, xb, yb, style)
            )
    for v, p in sorted(pts.items()):
        x, y = at(p)
        out.append('<circle cx="%d" cy="%d" r="%d" fill="black"/>' % (x, y, RADIUS))
    if d.apexes:
        for p in d.apexes:
            x, y = at(p)
            out.append(
                '<rect x="%d" y="%d" width="%d" height="%d" fill="black"/>'
                % (x - RADIUS, y - RADIUS, 2 * RADIUS, 2 * RADIUS)
            )
    out.append("</svg>")
    return "\n".join(out)


def _tree_edges(t: Tree) -> list:
    return [
        (v, c)
        for v in range(t.n)
        for c in (t.left[v], t.right[v])
        if c is not None
    ]


_ALGOS = {
    "lr-opt": optimal_lr_drawing,
    "bell": bell_like_drawing,
    "flat": flat_drawing,
    "strong-flat": strong_flat,
    "strong-bell": strong_bell,
}


def _check_tree_drawing(algo: str, t: Tree, d: GridDrawing):
    if algo == "lr-opt":
        return is_lr_drawing(t, d)
    rep = is_star_shaped(t, d)
    if rep.ok:
        kind = is_bell_like(t, d) if algo.endswith("bell") else is_flat(t, d)
        rep.merge(kind)
    return rep


def _cmd_gen(args) -> int:
    if args.kind in ("complete", "lower-bound"):
        if args.h is None:
            raise ValueError("--h is required for kind %s" % args.kind)
        t = complete_tree(args.h) if args.kind == "complete" else lower_bound_tree(args.h)
    else:
        if args.n is None:
            raise ValueError("--n is required for kind %s" % args.kind)
        if args.kind == "random":
            t = random_tree(args.n, args.seed)
        else:
            t = path_tree(args.n, args.dirs)
    print(serialize_tree(t))
    return 0


def _cmd_repseq(args) -> int:
    seq = rep_sequence(parse_tree(_read(args.file)))
    print(json.dumps({"sequence": list(seq), "min_width": min_width(seq)}))
    return 0


def _cmd_width(args) -> int:
    t = parse_tree(_read(args.file))
    w = min_width(rep_sequence(t))
    if args.brute_force:
        bw = brute_force_min_width(t)
        if bw != w:
            print("oracle mismatch: dp=%d brute=%d" % (w, bw), file=sys.stderr)
            return 1
    print(w)
    return 0


def _cmd_draw(args) -> int:
    t = parse_tree(_read(args.file))
    d = _ALGOS[args.algo](t)
    if args.verify:
        rep = _check_tree_drawing(args.algo, t, d)
        if not rep.ok:
            print(rep.to_json(), file=sys.stderr)
            return 1
    if args.svg:
        _write(args.svg, _svg(d, _tree_edges(t)))
    if args.json:
        _write(args.json, d.to_json())
    if not args.svg and not args.json:
        print(d.to_json())
    return 0


def _cmd_frontier(args) -> int:
    resume = None
    if args.checkpoint:
        try:
            resume = checkpoint_load(args.checkpoint)
        except FileNotFoundError:
            resume = None
    table = min_nodes_table(args.max_n, checkpoint=args.checkpoint, resume_from=resume)
    lines = ["w,n"] + ["%d,%d" % row for row in table]
    fit = None
    if args.fit:
        fit = fit_power_law(table)
        lines.append("# fit: w = %.6g * n**%.6g + %.6g" % fit)
    _write(args.csv, "\n".join(lines) + "\n")
    if args.plot:
        _plot_frontier(table, fit, args.plot)
    return 0


def _plot_frontier(table, fit, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ws = [w for w, _ in table]
    ns = [n for _, n in table]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, ws, "o", label="least n needing width w")
    if fit is not None:
        a, b, c = fit
        xs = [min(ns) + i * (max(ns) - min(ns)) / 200.0 for i in range(201)]
        ax.plot(xs, [a * x**b + c for x in xs], "-", label="a*n^b + c fit")
    ax.set_xlabel("n")
    ax.set_ylabel("w")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _root_edge(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("--root-edge must be U,V")
    return int(parts[0]), int(parts[1])


def _cmd_dual(args) -> int:
    g = parse_graph(_read(args.graph))
    dm = dual_tree(g, _root_edge(args.root_edge))
    doc = {
        "tree": serialize_tree(dm.tree),
        "gamma": list(dm.gamma),
        "root_edge": list(dm.root_edge),
    }
    if args.json:
        _write(args.json, json.dumps(doc))
    else:
        print(doc["tree"])
        print(json.dumps({"gamma": doc["gamma"], "root_edge": doc["root_edge"]}))
    return 0


def _cmd_outerdraw(args) -> int:
    g = parse_graph(_read(args.graph))
    gm = triangulate(g)
    dm = dual_tree(gm, _root_edge(args.root_edge))
    star = strong_flat(dm.tree)
    d = assemble_outerplanar_drawing(dm, star)
    if args.verify:
        rep = is_outerplanar_drawing(gm, d)
        if not rep.ok:
            print(rep.to_json(), file=sys.stderr)
            return 1
    if args.svg:
        edges = [(a, b) for a, b in gm.edges()]
        _write(args.svg, _svg(d, edges))
    if args.json:
        _write(args.json, d.to_json())
    if not args.svg and not args.json:
        print(d.to_json())
    return 0


def _cmd_verify(args) -> int:
    d = drawing_from_json(_read(args.drawing))
    if args.kind == "outerplanar":
        rep = is_outerplanar_drawing(parse_graph(_read(args.input)), d)
    else:
        t = parse_tree(_read(args.input))
        if args.kind == "lr":
            rep = is_lr_drawing(t, d)
        elif args.kind == "star":
            rep = is_star_shaped(t, d)
        elif args.kind == "bell":
            rep = is_star_shaped(t, d)
            if rep.ok:
                rep.merge(is_bell_like(t, d))
        else:
            rep = is_star_shaped(t, d)
            if rep.ok:
                rep.merge(is_flat(t, d))
    print(rep.to_json())
    return 0 if rep.ok else 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lrdraw", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a tree in grammar text form")
    g.add_argument("--kind", required=True,
                   choices=["complete", "random", "path", "lower-bound"])
    g.add_argument("--h", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--dirs", default="", help="direction string for path trees")
    g.set_defaults(fn=_cmd_gen)

    r = sub.add_parser("repseq", help="representation sequence and min width")
    r.add_argument("file")
    r.set_defaults(fn=_cmd_repseq)

    w = sub.add_parser("width", help="minimum LR-drawing width")
    w.add_argument("file")
    w.add_argument("--brute-force", action="store_true")
    w.set_defaults(fn=_cmd_width)

    d = sub.add_parser("draw", help="draw a tree")
    d.add_argument("file")
    d.add_argument("--algo", required=True, choices=sorted(_ALGOS))
    d.add_argument("--svg")
    d.add_argument("--json")
    d.add_argument("--verify", action="store_true")
    d.set_defaults(fn=_cmd_draw)

    f = sub.add_parser("frontier", help="width/size frontier table")
    f.add_argument("--max-n", type=int, required=True)
    f.add_argument("--csv", required=True)
    f.add_argument("--checkpoint")
    f.add_argument("--fit", action="store_true")
    f.add_argument("--plot", help="also render the table as a figure")
    f.set_defaults(fn=_cmd_frontier)

    du = sub.add_parser("dual", help="dual tree of a maximal outerplanar graph")
    du.add_argument("graph")
    du.add_argument("--root-edge", default="0,1")
    du.add_argument("--json")
    du.set_defaults(fn=_cmd_dual)

    o = sub.add_parser("outerdraw", help="outerplanar drawing pipeline")
    o.add_argument("graph")
    o.add_argument("--root-edge", default="0,1")
    o.add_argument("--svg")
    o.add_argument("--json")
    o.add_argument("--verify", action="store_true")
    o.set_defaults(fn=_cmd_outerdraw)

    v = sub.add_parser("verify", help="run a checker on a drawing")
    v.add_argument("--kind", required=True,
                   choices=["lr", "star", "bell", "flat", "outerplanar"])
    v.add_argument("input")
    v.add_argument("drawing")
    v.set_defaults(fn=_cmd_verify)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
