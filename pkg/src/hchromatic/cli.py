"""Command-line front end.

Report lines are ``STATUS<TAB>key=value...``.  Exit codes: 0 ok, 1 property
failure, 2 usage or parse error, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import closedform as cf
from .distinguish import (
    a1k_count,
    general_distinguisher,
    pairwise_distinguisher,
    plan_hcsf,
    uniform_distinguisher_connected,
)
from .equiv import augstar_report, kmn_report, star_degseq_report
from .errors import HChromaticError, ParseError, PreconditionError, RefusalError
from .graphs import (
    Graph,
    augmented_star,
    complement,
    complete,
    complete_bipartite,
    complete_multipartite,
    components,
    cycle,
    edgeless,
    is_bipartite,
    is_isomorphic,
    k_minus,
    k_minus_minus,
    parse_edge_list,
    parse_graph6,
    path,
    star,
    to_edge_list,
    to_graph6,
)
from .hcolor import coloring_census, hcsf, hcsf_naive
from .suites import SUITES, tree_census
from .symfunc import BasisError, SymFunc, change_basis, omega, to_record

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(HChromaticError):
    pass


def emit(status: str, **kv):
    fields = [status] + [f"{k}={v}" for k, v in kv.items()]
    print("\t".join(fields))


# ---------------------------------------------------------------------------
# graph input

def read_graph(source: str, fmt: str = "auto") -> Graph:
    if not os.path.exists(source):
        raise UsageError(f"no such file: {source}")
    with open(source) as fh:
        text = fh.read()
    if fmt == "auto":
        ext = os.path.splitext(source)[1].lower()
        if ext in (".g6", ".graph6"):
            fmt = "graph6"
        elif ext in (".el", ".edges", ".txt"):
            fmt = "edge_list"
        else:
            fmt = _sniff(text)
    return parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)


def _sniff(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(">>graph6<<") or (" " not in line and not line.isdigit()):
            return "graph6"
        return "edge_list"
    return "edge_list"


def _ints(spec: str) -> list[int]:
    try:
        return [int(x) for x in spec.split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {spec!r}") from None


NAMED = {
    "star": lambda a: star(a[0]),
    "kmn": lambda a: complete_bipartite(a[0], a[1]),
    "augstar": lambda a: augmented_star(a[0]),
    "cycle": lambda a: cycle(a[0]),
    "path": lambda a: path(a[0]),
    "complete": lambda a: complete(a[0]),
    "edgeless": lambda a: edgeless(a[0]),
    "multipartite": lambda a: complete_multipartite(a),
    "kminus": lambda a: k_minus(a[0]),
    "kminusminus": lambda a: k_minus_minus(a[0]),
}
ARITY = {"kmn": 2, "multipartite": None}


def named_graph(spec: str) -> tuple[Graph, str, list[int]]:
    kind, _, rest = spec.partition(":")
    if kind not in NAMED:
        raise UsageError(f"unknown named graph {kind!r}; known: {', '.join(sorted(NAMED))}")
    args = _ints(rest)
    want = ARITY.get(kind, 1)
    if (want is not None and len(args) != want) or not args:
        raise UsageError(f"{kind} takes {want or 'one or more'} integer parameter(s)")
    if any(a < 1 for a in args):
        raise PreconditionError(f"{kind} parameters must be positive")
    return NAMED[kind](args), kind, args


def graph_arg(source: str | None, named: str | None, fmt: str, what: str):
    """(graph, named kind or None, named args)."""
    if named:
        return named_graph(named)
    if source:
        return read_graph(source, fmt), None, []
    raise UsageError(f"give --{what} or --{what}-named")


# ---------------------------------------------------------------------------
# compute

def _multipartite_parts(g: Graph) -> list[int] | None:
    """Part sizes if g is complete multipartite (its complement is a union of cliques)."""
    if g.loops or g.n == 0:
        return None
    comp = complement(g)
    parts = []
    for c in components(comp):
        if c.m != c.n * (c.n - 1) // 2:
            return None
        parts.append(c.n)
    return sorted(parts, reverse=True)


def closed_form(g: Graph, h: Graph, h_kind: str | None, h_args: list[int]) -> tuple[SymFunc, str] | None:
    """The fastest applicable closed form, or None."""
    simple = not g.loops
    if simple and h_kind == "kmn" and is_bipartite(g):
        return cf.hcsf_complete_bipartite_H(g, h_args[0], h_args[1], check=False), "complete-bipartite"
    if simple and h_kind == "star" and h_args[0] >= 2 and is_bipartite(g):
        return cf.hcsf_star_H(g, h_args[0] - 1), "star"
    if simple and h_kind == "augstar" and h_args[0] >= 2 and g.m > 0:
        return cf.hcsf_augmented_star(g, h_args[0] - 1), "augmented-star"
    if g.m == 0 and not g.loops:
        # no constraints, so only |V(h)| matters
        return cf.hcsf_edgeless(g.n, h.n), "edgeless"
    if simple and not h.loops and g.n >= 2 and is_isomorphic(g, star(g.n)):
        return cf.hcsf_star_G(g.n, h), "star-sequence"
    parts = _multipartite_parts(g)
    if parts and not h.loops:
        try:
            return cf.hcsf_multipartite(tuple(parts), h), "multipartite"
        except PreconditionError:
            return None
    return None


def cmd_compute(args) -> int:
    g, _, _ = graph_arg(args.g, args.g_named, args.format, "g")
    h, h_kind, h_args = graph_arg(args.h, args.h_named, args.format, "h")
    method = args.method
    f = None
    if method in ("auto", "closedform"):
        found = closed_form(g, h, h_kind, h_args)
        if found:
            f, method = found
        elif args.method == "closedform":
            raise PreconditionError("no closed form applies to this (g, h)")
        else:
            method = "census"
    if method == "census":
        f = hcsf(g, h, jobs=args.jobs)
    elif method == "naive":
        f = hcsf_naive(g, h)
    verified = "no"
    if args.verify:
        ref = hcsf(g, h, jobs=args.jobs)
        if ref != f:
            emit("FAIL", reason="cross-check-mismatch", method=method)
            return EXIT_FAIL
        verified = "yes"
    if args.omega:
        f = omega(f)
    basis = args.basis
    f = change_basis(f, "m_aug", h.n) if basis in ("maug", "m_aug") else change_basis(f, basis)
    emit("OK", method=method, basis=f.label, degree=f.degree, zero=str(f.is_zero()).lower(),
         terms=len(f.terms), verified=verified)
    if args.json:
        print(json.dumps(to_record(f), sort_keys=True))
    else:
        for lam, c in f.terms:
            emit("TERM", partition=",".join(map(str, lam)), coeff=c)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(to_record(f), fh, sort_keys=True, indent=1)
            fh.write("\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# equiv

def _fmt_vec(v) -> str:
    return ",".join(map(str, v)) if v else "-"


def _first_difference(c1, c2):
    """Most refined partition whose coloring counts differ."""
    for lam in sorted(set(c1.counts) | set(c2.counts)):
        if c1[lam] != c2[lam]:
            return lam, c1[lam], c2[lam]
    return None


def cmd_equiv(args) -> int:
    g1 = read_graph(args.g1, args.format)
    g2 = read_graph(args.g2, args.format)
    mode, _, param = args.mode.partition(":")
    if mode == "kmn":
        r = kmn_report(g1, g2)
        emit("EQUIVALENT" if r.equivalent else "DISTINCT", mode="kmn", reason=r.reason,
             diff1=_fmt_vec(r.diff1), diff2=_fmt_vec(r.diff2))
    elif mode == "augstar":
        n = _ints(param)
        if len(n) != 1:
            raise UsageError("augstar mode needs augstar:<n>")
        r = augstar_report(g1, g2, n[0])
        delta = ",".join(f"{s}:{d:+d}" for s, d in r.delta.items()) or "-"
        census = lambda c: ",".join(f"{s}^{k}" for s, k in c.items())
        emit("EQUIVALENT" if r.equivalent else "DISTINCT", mode=f"augstar:{n[0]}",
             census1=census(r.census1), census2=census(r.census2), delta=delta)
    elif mode == "stardeg":
        k = _ints(param)
        if len(k) != 1:
            raise UsageError("stardeg mode needs stardeg:<k>")
        r = star_degseq_report(g1, g2, k[0])
        emit("EQUIVALENT" if r.equal else "DISTINCT", mode=f"stardeg:{k[0]}",
             first_degree_index=r.first_degree_index or "-", star_index=r.star_index or "-",
             guaranteed=str(r.guaranteed_distinct).lower())
    elif mode == "exact":
        if not param:
            raise UsageError("exact mode needs exact:<hfile> or exact:<named>")
        h = read_graph(param, args.format) if os.path.exists(param) else named_graph(param)[0]
        if g1.n != g2.n:
            emit("DISTINCT", mode="exact", degree1=g1.n, degree2=g2.n)
            return EXIT_OK
        c1, c2 = coloring_census(g1, h, jobs=args.jobs), coloring_census(g2, h, jobs=args.jobs)
        diff = _first_difference(c1, c2)
        if diff is None:
            emit("EQUIVALENT", mode="exact")
        else:
            lam, a, b = diff
            emit("DISTINCT", mode="exact", partition=_fmt_vec(lam), count1=a, count2=b)
    else:
        raise UsageError(f"unknown mode {args.mode!r}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# distinguish

def _graph_field(g: Graph) -> dict:
    if g.loops:
        return {"edge_list": to_edge_list(g).strip().replace("\n", ";")}
    return {"graph6": to_graph6(g)}


def cmd_distinguish(args) -> int:
    gs = [read_graph(p, args.format) for p in args.graphs]
    if args.mode == "pairwise":
        if len(gs) != 2:
            raise UsageError("pairwise mode takes exactly two graphs")
        h = pairwise_distinguisher(*gs)
        emit("H", **_graph_field(h), n=h.n, m=h.m)
        if args.check:
            ok = hcsf(gs[0], h) != hcsf(gs[1], h)
            emit("PASS" if ok else "FAIL", check="separates")
            return EXIT_OK if ok else EXIT_FAIL
        return EXIT_OK
    if args.mode == "uniform":
        plan = uniform_distinguisher_connected(gs)
    elif args.mode == "general":
        plan = general_distinguisher(gs)
    else:
        raise UsageError(f"unknown mode {args.mode!r}")
    emit("PLAN", mode=args.mode, parts=len(plan.parts),
         **{k: v for k, v in sorted(plan.constants.items())})
    for j, (h, mult) in enumerate(plan.parts, start=1):
        emit("PART", index=j, **_graph_field(h), multiplicity=mult)
    if not args.check:
        return EXIT_OK
    if args.mode == "uniform":
        fs = [plan_hcsf(g, plan) for g in gs]
        ok = len({f.terms for f in fs}) == len(fs)
    else:
        counts = [a1k_count(g, plan) for g in gs]
        for p, c in zip(args.graphs, counts):
            emit("COUNT", graph=p, a1k=c)
        by_k: dict[int, set] = {}
        ok = True
        for g, c in zip(gs, counts):
            if c in by_k.setdefault(g.n, set()):
                ok = False
            by_k[g.n].add(c)
    emit("PASS" if ok else "FAIL", check="separates")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# census-trees, verify

def cmd_census_trees(args) -> int:
    if args.max_n < 1:
        raise PreconditionError("--max-n must be at least 1")
    counts, collisions = tree_census(args.max_n, jobs=args.jobs)
    for n, c in counts.items():
        emit("TREES", n=n, count=c)
    for t1, t2 in collisions:
        emit("FINDING", n=t1.n, tree1=to_graph6(t1), tree2=to_graph6(t2))
    if not collisions:
        emit("NO_COLLISION", max_n=args.max_n, trees=sum(counts.values()))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    start = time.monotonic()
    code = EXIT_OK
    for name in names:
        left = None if args.budget is None else max(0.0, args.budget - (time.monotonic() - start))
        res = SUITES[name](budget=left)
        if res.failures:
            status, code = "FAIL", EXIT_FAIL
        elif res.truncated:
            status = "PARTIAL"
        else:
            status = "PASS"
        emit(status, suite=name, checked=res.checked, failures=len(res.failures), findings=len(res.findings))
        for note in res.notes:
            emit("NOTE", suite=name, text=note)
        for rep in res.failures[: args.max_reports]:
            emit("REPRO", suite=name, case=rep)
        for finding in res.findings[: args.max_reports]:
            emit("FINDING", suite=name, text=finding)
    return code


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hchromatic", description="H-chromatic symmetric functions")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    fmt = dict(choices=["auto", "graph6", "edge_list"], default="auto")

    c = sub.add_parser("compute", help="compute X_g^h")
    c.add_argument("--g")
    c.add_argument("--g-named")
    c.add_argument("--h")
    c.add_argument("--h-named")
    c.add_argument("--format", **fmt)
    c.add_argument("--basis", choices=["m", "maug", "p", "e", "s"], default="m")
    c.add_argument("--omega", action="store_true")
    c.add_argument("--method", choices=["auto", "census", "closedform", "naive"], default="auto")
    c.add_argument("--verify", action="store_true", help="cross-check against the census")
    c.add_argument("--json", action="store_true", help="print the record as JSON")
    c.add_argument("--out", help="also write the JSON record here")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(fn=cmd_compute)

    e = sub.add_parser("equiv", help="decide equivalence of two graphs")
    e.add_argument("--mode", required=True, help="kmn | augstar:<n> | stardeg:<k> | exact:<h>")
    e.add_argument("g1")
    e.add_argument("g2")
    e.add_argument("--format", **fmt)
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(fn=cmd_equiv)

    d = sub.add_parser("distinguish", help="build a distinguishing H")
    d.add_argument("--mode", choices=["pairwise", "uniform", "general"], required=True)
    d.add_argument("graphs", nargs="+")
    d.add_argument("--format", **fmt)
    d.add_argument("--check", action="store_true", help="confirm the separation")
    d.set_defaults(fn=cmd_distinguish)

    t = sub.add_parser("census-trees", help="self-function collisions among trees")
    t.add_argument("--max-n", type=int, default=8)
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(fn=cmd_census_trees)

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    v.add_argument("--budget", type=float, help="seconds; suites stop early and report PARTIAL")
    v.add_argument("--max-reports", type=int, default=5)
    v.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, BasisError, UsageError) as exc:
        emit("ERROR", kind="usage", message=str(exc))
        return EXIT_USAGE
    except (PreconditionError, RefusalError) as exc:
        emit("ERROR", kind="precondition", message=str(exc))
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
