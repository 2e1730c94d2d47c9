"""Command-line surface: construct colourings, verify connectivity, count
multicoloured / tricoloured sets, run searches, and emit certificates.

Exit codes: 0 all requested checks pass; 1 some check fails (the
certificate is still written); 2 invalid invocation or precondition;
3 search budget exhausted before completion.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass, field

from .core import (Certificate, ConstructionError, EdgeColouring,
                   InvalidColouringError, encode_colouring, read_colouring,
                   write_colouring)
from . import graphs, hypergraphs, search as search_mod
from .verify import (ConnectivityNotion, connectivity_certificate,
                     multicoloured_family, tricoloured_count)


@dataclass
class RunSpec:
    """Everything that determines a run; identical specs reproduce identical
    colouring files and certificates up to the elapsed-time field."""
    subcommand: str
    construction: str | None = None
    params: dict = field(default_factory=dict)
    input_path: str | None = None
    output_path: str | None = None
    cert_path: str | None = None
    notion: str | None = None
    colour: int | None = None
    d: int | None = None
    tricoloured: bool = False
    early_exit: bool = False
    sample: int | None = None
    seed: int = 0
    budget: int | None = None
    workers: int = 1
    stream: bool = False
    expect_count: int | None = None


def _construct(name: str, params: dict, input_path: str | None) -> EdgeColouring:
    if name == "cyclic":
        return graphs.cyclic_prime_colouring(params["k"])
    if name == "paths":
        return graphs.paths_colouring(params["k"], params["n"],
                                      seed=params.get("seed", 0),
                                      d=params.get("d", 3))
    if name == "k17":
        return hypergraphs.k17_colouring()
    if name == "pointwise-cycles":
        return hypergraphs.pointwise_cycles_colouring(params["k"], params["n"])
    if name == "parity":
        return hypergraphs.parity_covering_2colouring(params["n"])
    if name == "covering-4graph":
        base = hypergraphs.parity_covering_2colouring(params["n"])
        return hypergraphs.covering_4graph_colouring(base, base)
    if name == "mono":
        return hypergraphs.monochromatic(params["n"], params.get("r", 3))
    if name == "minimal-3graph":
        n = params["n"]
        if n < 3:
            raise ConstructionError("file output needs n >= 3 (H_2 has no 3-sets)")
        h = hypergraphs.minimal_connected_3graph(n)
        edges = {e: 1 for e in h.edges}
        k = 1 if len(h.edges) == h.n * (h.n - 1) * (h.n - 2) // 6 else 2
        return EdgeColouring.from_map(n, 3, k, lambda e: edges.get(e, 2))
    if name in ("blow-up", "double", "strong-blowup", "covering-blowup"):
        if input_path is None:
            raise ConstructionError(f"{name} needs an input colouring (-i)")
        base = read_colouring(input_path)
        if name == "blow-up":
            return graphs.blow_up(base, params["sizes"])
        if name == "double":
            hyp = graphs.check_doubling_hypotheses(base, params["special"])
            return graphs.double_extension(base, hyp)
        if name == "strong-blowup":
            return hypergraphs.strong_blowup(base)
        return hypergraphs.covering_blowup(base)
    raise ConstructionError(f"unknown construction {name!r}")


def _stream_blowup_to_file(spec: RunSpec) -> Certificate:
    base = read_colouring(spec.input_path)
    kind = "strong" if spec.construction == "strong-blowup" else "covering"
    n2 = base.n ** 2
    with open(spec.output_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("gallai-colouring v1\n")
        fh.write(f"n={n2} r=3 k={base.k + 1}\n")
        for cols, colours in hypergraphs.blowup_stream_blocks(base, kind):
            a, b, c = cols
            fh.writelines(f"{a[i]} {b[i]} {c[i]} {colours[i]}\n"
                          for i in range(len(colours)))
    return Certificate(construction=spec.construction,
                       params={"input": spec.input_path, "stream": True},
                       n=n2, r=3, k=base.k + 1)


def _default_notion(c: EdgeColouring) -> str:
    return "graph" if c.r == 2 else "strong"


def _certify(c: EdgeColouring, spec: RunSpec, name: str, params: dict,
             with_connectivity: bool = True) -> Certificate:
    t0 = time.perf_counter()
    notion = spec.notion or _default_notion(c)
    if not with_connectivity:
        conn = []
    elif spec.colour is not None:
        from .verify import is_class_connected
        rep = is_class_connected(c, spec.colour, ConnectivityNotion(notion))
        conn = [{"colour": spec.colour, **rep.as_dict()}]
    else:
        conn = connectivity_certificate(c, ConnectivityNotion(notion))
    mc = None
    if spec.d is not None:
        if spec.sample:
            res = multicoloured_family(c, spec.d, mode="sampled",
                                       samples=spec.sample, seed=spec.seed)
        elif spec.early_exit:
            res = multicoloured_family(c, spec.d, mode="early-exit")
        else:
            res = multicoloured_family(c, spec.d, workers=spec.workers)
        mc = res.as_dict()
        if spec.expect_count is not None:
            mc["expected"] = spec.expect_count
    tc = None
    if spec.tricoloured:
        tc = tricoloured_count(c, workers=spec.workers).as_dict()
    return Certificate(construction=name, params=params, n=c.n, r=c.r, k=c.k,
                       connectivity=conn, multicoloured=mc, tricoloured=tc,
                       elapsed_ms=(time.perf_counter() - t0) * 1e3)


def run(spec: RunSpec) -> tuple[Certificate, int]:
    """Execute a RunSpec: construct / verify / count as requested, write the
    colouring file and certificate, and derive the exit status."""
    if spec.subcommand == "construct":
        if spec.stream and spec.construction in ("strong-blowup", "covering-blowup"):
            cert = _stream_blowup_to_file(spec)
            return cert, 0
        c = _construct(spec.construction, spec.params, spec.input_path)
        if spec.output_path:
            write_colouring(c, spec.output_path)
        else:
            sys.stdout.write(encode_colouring(c))
        cert = Certificate(construction=spec.construction, params=spec.params,
                           n=c.n, r=c.r, k=c.k)
        return cert, 0

    if spec.subcommand in ("verify", "count", "certify"):
        if spec.construction is not None:
            c = _construct(spec.construction, spec.params, spec.input_path)
            name, params = spec.construction, spec.params
        else:
            c = read_colouring(spec.input_path)
            name, params = "file", {"path": spec.input_path}
        if spec.subcommand in ("count", "certify") and spec.d is None:
            spec.d = 3 if c.r == 2 else c.r + 1
        cert = _certify(c, spec, name, params,
                        with_connectivity=spec.subcommand != "count")
        if spec.output_path:
            write_colouring(c, spec.output_path)
        return cert, 0 if cert.all_ok() else 1

    if spec.subcommand == "search":
        task = spec.construction
        if task == "min-triangles":
            rep = search_mod.min_multicoloured_triangles(
                spec.params["k"], spec.params["n"], budget=spec.budget)
        elif task == "min-family":
            rep = search_mod.min_partition_family(spec.params["k"],
                                                  budget=spec.budget)
        elif task == "min-3graph":
            rep = search_mod.min_connected_3graph_edges(spec.params["n"],
                                                        budget=spec.budget)
        elif task == "hunt":
            rep = search_mod.tricoloured_counterexample_hunt(
                spec.params["n"], spec.params.get("k", 3),
                seeds=spec.params.get("seeds", 10),
                budget=spec.budget or 5_000, base_seed=spec.seed)
        else:
            raise ConstructionError(f"unknown search task {task!r}")
        cert = Certificate(construction=f"search:{task}", params=rep.params,
                           n=rep.params.get("n", 0), r=0, k=rep.params.get("k", 0),
                           search=rep.as_dict(), elapsed_ms=rep.elapsed_ms)
        return cert, 0 if rep.complete else 3

    if spec.subcommand == "pipeline":
        res = graphs.upper_bound_pipeline(spec.params["k"])
        c = res.colouring
        if spec.output_path:
            write_colouring(c, spec.output_path)
        spec.d = 3
        cert = _certify(c, spec, "pipeline", {"k": spec.params["k"]})
        cert.search = {"task": "upper-bound-pipeline", "k0": res.k0,
                       "predicted_count": res.predicted_count,
                       "realised_count": res.realised_count,
                       "ok": res.predicted_count == res.realised_count}
        return cert, 0 if cert.all_ok() else 1

    raise ConstructionError(f"unknown subcommand {spec.subcommand!r}")


# ---------------------------------------------------------------------------
# argparse wiring
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cert", dest="cert_path", help="write the certificate JSON here")
    p.add_argument("--workers", type=int,
                   default=int(os.environ.get("GALLAI_WORKERS", "1")),
                   help="parallel workers for counting (results independent of W; "
                        "GALLAI_WORKERS sets the default)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gallai",
        description="Connected colourings of complete graphs and hypergraphs: "
                    "constructions, verification certificates, and searches.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    con = sub.add_parser("construct", help="build a colouring and write it")
    con.add_argument("name", choices=["cyclic", "paths", "k17", "pointwise-cycles",
                                      "parity", "covering-4graph", "mono",
                                      "minimal-3graph", "blow-up", "double",
                                      "strong-blowup", "covering-blowup"])
    con.add_argument("--k", type=int)
    con.add_argument("--n", type=int)
    con.add_argument("--r", type=int, default=3)
    con.add_argument("--d", type=int, default=3, help="forbidden cycle length bound (paths)")
    con.add_argument("--seed", type=int, default=0)
    con.add_argument("--sizes", help="comma-separated class sizes (blow-up)")
    con.add_argument("--special", type=int, help="special colour (double)")
    con.add_argument("-i", "--input", dest="input_path")
    con.add_argument("-o", "--output", dest="output_path")
    con.add_argument("--stream", action="store_true",
                     help="stream blow-up edges straight to the file")
    _add_common(con)

    for nm, hlp in (("verify", "check per-colour connectivity"),
                    ("count", "enumerate multicoloured / tricoloured sets"),
                    ("certify", "verify and count in one pass")):
        p = sub.add_parser(nm, help=hlp)
        p.add_argument("file", nargs="?", default=None)
        p.add_argument("--construct", dest="construction",
                       help="build instead of reading a file (construction name)")
        p.add_argument("--k", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--notion", choices=[n.value for n in ConnectivityNotion])
        p.add_argument("--colour", type=int, help="restrict to one colour class")
        p.add_argument("--d", type=int, help="multicoloured d-set size")
        p.add_argument("--tricoloured", action="store_true")
        p.add_argument("--early-exit", action="store_true", dest="early_exit")
        p.add_argument("--sample", type=int, help="sampled mode: number of d-sets")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--expect-count", type=int, dest="expect_count",
                       help="family size the certificate must show to pass")
        p.add_argument("-o", "--output", dest="output_path")
        _add_common(p)

    se = sub.add_parser("search", help="exhaustive / randomised searches")
    se.add_argument("task", choices=["min-triangles", "min-family",
                                     "min-3graph", "hunt"])
    se.add_argument("--k", type=int)
    se.add_argument("--n", type=int)
    se.add_argument("--seeds", type=int, default=10)
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--budget", type=int)
    _add_common(se)

    pi = sub.add_parser("pipeline", help="prime base plus repeated doubling")
    pi.add_argument("--k", type=int, required=True)
    pi.add_argument("-o", "--output", dest="output_path")
    _add_common(pi)
    return ap


def _spec_from_args(args: argparse.Namespace) -> RunSpec:
    params: dict = {}
    for key in ("k", "n", "r", "seed", "seeds", "special"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if getattr(args, "sizes", None):
        params["sizes"] = [int(s) for s in args.sizes.split(",")]
    if args.subcommand == "construct" and getattr(args, "d", None) is not None:
        params["d"] = args.d
    name = getattr(args, "name", None) or getattr(args, "task", None) \
        or getattr(args, "construction", None)
    return RunSpec(
        subcommand=args.subcommand,
        construction=name,
        params=params,
        input_path=getattr(args, "input_path", None) or getattr(args, "file", None),
        output_path=getattr(args, "output_path", None),
        cert_path=getattr(args, "cert_path", None),
        notion=getattr(args, "notion", None),
        colour=getattr(args, "colour", None),
        d=getattr(args, "d", None) if args.subcommand != "construct" else None,
        tricoloured=getattr(args, "tricoloured", False),
        early_exit=getattr(args, "early_exit", False),
        sample=getattr(args, "sample", None),
        seed=getattr(args, "seed", 0),
        budget=getattr(args, "budget", None),
        workers=getattr(args, "workers", 1),
        stream=getattr(args, "stream", False),
        expect_count=getattr(args, "expect_count", None),
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = _spec_from_args(args)
    if spec.subcommand in ("verify", "count", "certify"):
        if spec.input_path is None and spec.construction is None:
            print("error: give a colouring file or --construct", file=sys.stderr)
            return 2
    try:
        cert, code = run(spec)
    except (ConstructionError, InvalidColouringError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = cert.to_json()
    if spec.cert_path:
        with open(spec.cert_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    elif spec.subcommand != "construct":
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
