"""Command-line entry point: ``contcomb <subcommand> ...``.

Each subcommand runs one registered experiment (or a suite), prints its JSON
report to stdout, optionally writes it to ``--json-out`` and exits 0 iff the
verdict is PASS.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import experiments as ex
from .kernels import BACKEND


def _common(p):
    p.add_argument("--json-out", metavar="PATH", help="also write the report to PATH")
    p.add_argument("--seed", type=int, default=0, help="seed for sampling (default 0)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for suites")
    p.add_argument("--catalog", metavar="PATH", help="JSON catalog of extra bodies")


def build_parser():
    parser = argparse.ArgumentParser(prog="contcomb", description="Topological checks on continuous polytopes and posets.")
    parser.add_argument("--version", action="store_true", help="print version and kernel backend")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("euler", help="Euler formula for a convex body")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--body", help="catalog name, e.g. cube-3, cross-C-2, rounded-square")
    g.add_argument("--cross", type=int, metavar="N", help="K-cross-polytope of rank N")
    g.add_argument("--sweep", action="store_true", help="all tame bodies and their products")
    g.add_argument("--wild", action="store_true", help="the non-tame probe body")
    p.add_argument("--field", choices="RCH", default="R")

    p = sub.add_parser("matroid", help="K-matroid duality checks")
    msub = p.add_subparsers(dest="action", required=True)
    a = msub.add_parser("audit", help="audit one subspace (given or random)")
    _common(a)
    a.add_argument("--field", choices="RCH", default="R")
    a.add_argument("--basis", metavar="PATH", help="JSON list of rows; H entries are [a,b,c,d]")
    a.add_argument("--n", type=int, default=3)
    a.add_argument("--dim", type=int, default=1)
    a.add_argument("--samples", type=int, default=200)
    a = msub.add_parser("sweep", help="seeded sweep over R, C and H")
    _common(a)
    a.add_argument("--real-count", type=int, default=200)
    a.add_argument("--sampled-count", type=int, default=50)
    a.add_argument("--samples", type=int, default=200)
    a = msub.add_parser("classical", help="LP orthogonality against the product-sign rule")
    _common(a)
    a.add_argument("--max-n", type=int, default=5)

    p = sub.add_parser("grassmann", help="Grassmannian Euler characteristics")
    gsub = p.add_subparsers(dest="action", required=True)
    a = gsub.add_parser("chi", help="χ(G_k(R^n))")
    _common(a)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--k", type=int, required=True)
    a = gsub.add_parser("rota", help="χ of the order complex of an ideal")
    _common(a)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--ideal", default="full", help="full | trunc:m | sub:w | path to a χ-vector JSON")
    a = gsub.add_parser("sweep", help="all Grassmannian identities")
    _common(a)

    p = sub.add_parser("poset", help="poset topology")
    psub = p.add_subparsers(dest="action", required=True)
    a = psub.add_parser("partition", help="truncated partition lattice")
    _common(a)
    a.add_argument("--n", type=int, required=True)
    a = psub.add_parser("hcf", help="complementation formula for a poset and antichain")
    _common(a)
    a.add_argument("--file", metavar="PATH", help="poset JSON")
    a.add_argument("--antichain", help="JSON list of elements")
    a.add_argument("--example", choices=["boolean3", "partition4"], default="boolean3")
    a = psub.add_parser("symjoin", help="symmetric join of the circle")
    _common(a)
    a.add_argument("--n", type=int, default=2)
    a.add_argument("--hexagon", action="store_true")
    a = psub.add_parser("sphere", help="second symmetric join of the n-sphere")
    _common(a)
    a.add_argument("--n", type=int, default=2)
    a = psub.add_parser("boolean", help="Δ(B_n) modulo its boundary")
    _common(a)
    a.add_argument("--n", type=int, required=True)

    p = sub.add_parser("expn", help="configuration poset exp_n([m])")
    _common(p)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--sweep", action="store_true", help="all 2 <= n < m <= max-m")
    p.add_argument("--max-m", type=int, default=8)

    p = sub.add_parser("hocolim", help="homotopy colimit of a diagram")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--example", choices=["cone", "suspension", "single", "chain"], default="suspension")
    g.add_argument("--diagram", metavar="PATH", help="diagram JSON")

    p = sub.add_parser("index", help="Z/2-index and Sarkaria inequalities")
    isub = p.add_subparsers(dest="action", required=True)
    a = isub.add_parser("z2", help="index of a free involution")
    _common(a)
    a.add_argument("--sphere", type=int, metavar="N", help="antipodal N-sphere")
    a.add_argument("--complex", metavar="PATH")
    a.add_argument("--involution", metavar="PATH", help="JSON list of vertex pairs")
    a = isub.add_parser("sarkaria", help="inequality on a pair, or on the built-in corpus")
    _common(a)
    a.add_argument("--complex", metavar="PATH")
    a.add_argument("--involution", metavar="PATH")
    a.add_argument("--sub", metavar="PATH", help="invariant subcomplex JSON")
    a = isub.add_parser("sarkaria-diagram", help="diagram version on the built-in corpus")
    _common(a)

    p = sub.add_parser("suite", help="run a JSON manifest of experiments")
    _common(p)
    p.add_argument("manifest")
    return parser


def _dispatch(args):
    """Map parsed arguments to ``(experiment id, params)``."""
    c = args.command
    act = getattr(args, "action", None)
    if c == "euler":
        if args.sweep:
            return "euler-sweep", {}
        if args.wild:
            return "euler-wild", {}
        if args.cross is not None:
            return "euler-cross", {"n": args.cross, "field": args.field}
        return "euler-body", {"name": args.body or "cube-3", "catalog": args.catalog}
    if c == "matroid":
        if act == "audit":
            basis = None
            if args.basis:
                with open(args.basis) as fh:
                    basis = json.load(fh)
            return "duality-audit", {"field": args.field, "basis": basis, "n": args.n,
                                     "dim": args.dim, "samples": args.samples}
        if act == "sweep":
            return "duality-sweep", {"real_count": args.real_count, "sampled_count": args.sampled_count,
                                     "samples": args.samples}
        return "classical-sign", {"max_n": args.max_n}
    if c == "grassmann":
        if act == "chi":
            return "grassmann-chi", {"n": args.n, "k": args.k}
        if act == "rota":
            return "rota-full", {"n": args.n, "ideal": args.ideal}
        return "rota-sweep", {}
    if c == "poset":
        if act == "partition":
            return "partition-lattice", {"n": args.n}
        if act == "hcf":
            if args.file:
                return "hcf-quotient", {"poset": args.file, "antichain": json.loads(args.antichain or "[]")}
            return "hcf-quotient", {"example": args.example}
        if act == "symjoin":
            return "sym-join-circle", {"n": args.n, "hexagon": args.hexagon}
        if act == "sphere":
            return "sym-join-sphere", {"n": args.n}
        return "hcf4", {"n": args.n}
    if c == "expn":
        if args.sweep or args.m is None:
            return "expn-sweep", {"max_m": args.max_m}
        return "expn", {"m": args.m, "n": args.n}
    if c == "hocolim":
        if args.diagram:
            return "hocolim", {"diagram": args.diagram}
        return "hocolim", {"example": args.example}
    if c == "index":
        if act == "z2":
            if args.complex:
                return "z2-index", {"complex": args.complex, "involution": args.involution}
            return "z2-sphere", {"n": 2 if args.sphere is None else args.sphere}
        if act == "sarkaria":
            if args.complex:
                return "sarkaria-pair", {"complex": args.complex, "involution": args.involution, "sub": args.sub}
            return "sarkaria-corpus", {}
        return "sarkaria-diagram-corpus", {}
    raise SystemExit(f"unknown command {c!r}")


def _emit(payload, path):
    text = json.dumps(payload, sort_keys=True, indent=2, default=ex._jsonable)
    print(text)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        from . import __version__

        print(f"contcomb {__version__} (kernels: {BACKEND})")
        return 0
    if args.command is None:
        parser.print_help()
        return 2
    if args.command == "suite":
        try:
            summary = ex.run_suite(args.manifest, jobs=args.jobs)
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: cannot read manifest: {exc}", file=sys.stderr)
            return 2
        _emit(summary.to_json(), args.json_out)
        return 0 if summary.ok else 1
    eid, params = _dispatch(args)
    try:
        report = ex.run(eid, params, args.seed)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(report.to_json(), args.json_out)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
