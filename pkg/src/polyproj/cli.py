"""Command-line front end.

Exit status: 0 on success, 1 when an operation raises a contract error (its
name is printed on stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ddoracle, fm, gadgets, hvproj, io, lp, shadow, vproj
from .errors import DegeneracyDetected, FormatError, PolyprojError
from .exactmath import fmt_rat
from .metrics import collect
from .polytope import DirectionSet, HPolytope, VPolytope, canonical_h, canonical_v

METHODS = ("fm", "v", "shadow", "hv", "auto")


class UsageError(Exception):
    pass


def _directions(path, n) -> DirectionSet:
    dirs = io.parse_directions(io.read(path), n) if path else []
    return DirectionSet.make(dirs, n)


def _h_payload(P: HPolytope) -> dict:
    return {"dim": P.dim, "facets": io.json_rows(tuple(a) + (b,) for a, b in zip(P.A, P.b))}


def _v_payload(Q: VPolytope) -> dict:
    return {"dim": Q.dim, "vertices": io.json_rows(Q.points)}


# -- subcommands -------------------------------------------------------------


def cmd_project(args, out):
    src = io.parse_any(io.read(args.input))
    method = args.method
    if isinstance(src, io.VData):
        Q = io.v_polytope(src)
        if method not in ("v", "auto"):
            raise FormatError(f"method {method!r} needs an H-file; use --method v")
        G = _directions(args.directions, Q.dim)
        res = vproj.project_v(Q, G)
        out["method"] = "v"
        out["result"] = _v_payload(res)
        return io.format_v(res)
    P = src
    G = _directions(args.directions, P.dim)
    if method == "v":
        raise FormatError("method 'v' needs a V-file")
    res = None
    if method == "auto":
        if not P.eq_A:
            try:
                res = shadow.enumerate_shadow_facets(P, G, audit=args.audit)
            except DegeneracyDetected as exc:
                print(f"shadow: {exc.name}; falling back to hv", file=sys.stderr)
        method = "shadow" if res is not None else "hv"
        out["fallback"] = method == "hv"
    if method == "fm":
        res = fm.project_fm(P, G, soft_cap=args.soft_cap, hard_cap=args.hard_cap)
    elif method == "shadow" and res is None:
        res = shadow.enumerate_shadow_facets(P, G, audit=args.audit)
    elif method == "hv":
        hv = hvproj.enumerate_hv(P, G)
        out["result"] = {**_h_payload(hv.h), **_v_payload(hv.v)}
        if args.out_v:
            io.write(args.out_v, io.format_v(hv.v))
        res = hv.h
    out["method"] = method
    out.setdefault("result", _h_payload(res))
    print(f"method: {method}", file=sys.stderr)
    return io.format_h(res)


def cmd_convert(args, out):
    src = io.parse_any(io.read(args.input))
    if isinstance(src, io.VData):
        Q = io.v_polytope(src)
        if args.to == "v":
            res = canonical_v(Q)
            out["result"] = _v_payload(res)
            return io.format_v(res)
        res = ddoracle.v_to_h(Q)
        out["result"] = _h_payload(res)
        return io.format_h(res)
    if args.to == "h":
        res = canonical_h(src)
        out["result"] = _h_payload(res)
        return io.format_h(res)
    res = ddoracle.h_to_v(src)
    out["result"] = _v_payload(res)
    return io.format_v(res)


def cmd_check_eq(args, out):
    P = io.parse_h(io.read(args.p))
    G = _directions(args.dirs, P.dim)
    q = io.parse_any(io.read(args.q))
    Q = io.v_polytope(q) if isinstance(q, io.VData) else q
    res = gadgets.check_projection_equals(P, G, Q)
    out["result"] = {
        "equal": res.equal,
        "witness": io.json_rows([res.witness])[0] if res.witness else None,
        "side": res.side,
    }
    if res.equal:
        return "EQUAL\n"
    w = " ".join(fmt_rat(x) for x in res.witness)
    return f"NOT-EQUAL witness: {w} ({res.side})\n"


def cmd_lift_simplex(args, out):
    Q = io.v_polytope(io.parse_v(io.read(args.input)))
    D, G = gadgets.lift_to_simplex(Q)
    if args.dirs_out:
        io.write(args.dirs_out, io.format_directions(G.directions))
    out["result"] = {**_v_payload(D), "directions": io.json_rows(G.directions)}
    return io.format_v(D)


def cmd_gadget_intersect(args, out):
    P = io.parse_h(io.read(args.p))
    Q = io.v_polytope(io.parse_v(io.read(args.q)))
    R, _ = gadgets.intersection_gadget(P, Q)
    G = gadgets.gadget_directions(P, Q)
    if args.dirs_out:
        io.write(args.dirs_out, io.format_directions(G.directions))
    out["result"] = {
        **_h_payload(R),
        "equalities": io.json_rows(tuple(e) + (f,) for e, f in zip(R.eq_A, R.eq_b)),
        "directions": io.json_rows(G.directions),
    }
    return io.format_h(R)


def cmd_truncate_cone(args, out):
    src = io.parse_any(io.read(args.input))
    if isinstance(src, io.VData):
        if not src.rays:
            raise FormatError("cone V-file needs ray rows (leading 0)")
        W = gadgets.Cone(src.dim, rays=src.rays)
    else:
        if any(src.b) or src.eq_A:
            raise FormatError("cone H-file rows must read 0 -a_1 ... -a_n")
        W = gadgets.Cone(src.dim, facets=src.A)
    G = _directions(args.dirs, W.dim)
    res = gadgets.truncate_cone(W, G)
    out["result"] = {**_h_payload(res.polytope), "alpha": io.json_rows([res.alpha])[0]}
    return io.format_h(res.polytope)


def cmd_random_directions(args, out):
    seed = args.seed if args.seed is not None else 0
    G = gadgets.sample_directions(args.n, args.k, seed, args.bound)
    out["seed"] = seed
    out["result"] = {"directions": io.json_rows(G.directions)}
    print(f"seed: {seed}", file=sys.stderr)
    return io.format_directions(G.directions)


def cmd_solve_lp(args, out):
    P = io.parse_h(io.read(args.input))
    if args.objective:
        c = io.parse_vector(io.read(args.objective))
    elif args.c:
        c = io.parse_vector(args.c)
    else:
        raise UsageError("give --objective FILE or --c 'c_1 ... c_n'")
    if len(c) != P.dim:
        raise UsageError(f"objective has {len(c)} entries, polytope lives in R^{P.dim}")
    res = lp.maximize(P, c)
    out["result"] = {"status": res.status}
    if isinstance(res, lp.LpOptimal):
        out["result"].update(
            value=fmt_rat(res.value),
            point=io.json_rows([res.point])[0],
            dual=io.json_rows([res.dual])[0],
        )
        pt = " ".join(fmt_rat(x) for x in res.point)
        return f"optimal {fmt_rat(res.value)}\npoint {pt}\n"
    if isinstance(res, lp.LpUnbounded):
        out["result"]["ray"] = io.json_rows([res.ray])[0]
        return "unbounded\nray " + " ".join(fmt_rat(x) for x in res.ray) + "\n"
    return "infeasible\n"


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON result envelope")
    common.add_argument("--seed", type=int, help="random seed (reported back)")
    common.add_argument("--threads", type=int, default=1, help="parallelism cap")
    common.add_argument("--out", help="output file (default stdout)")

    p = argparse.ArgumentParser(prog="polyproj", description="Exact polytope projection.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("project", parents=[common], help="project a polytope")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--method", choices=METHODS, default="auto")
    s.add_argument("--directions", "--dirs", dest="directions")
    s.add_argument("--audit", action="store_true", help="recheck every dimension claim")
    s.add_argument("--out-v", help="hv only: also write the vertices here")
    s.add_argument("--soft-cap", type=int, help="fm: warn above this many intermediate rows")
    s.add_argument("--hard-cap", type=int, help="fm: fail above this many intermediate rows")
    s.set_defaults(func=cmd_project)

    s = sub.add_parser("convert", parents=[common], help="H <-> V by brute force")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--to", choices=("h", "v"), required=True)
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("check-eq", parents=[common], help="is the projection of P equal to Q?")
    s.add_argument("--p", required=True)
    s.add_argument("--dirs", "--directions", dest="dirs")
    s.add_argument("--q", required=True)
    s.set_defaults(func=cmd_check_eq)

    s = sub.add_parser("lift-simplex", parents=[common], help="V-polytope as a simplex shadow")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--dirs-out")
    s.set_defaults(func=cmd_lift_simplex)

    s = sub.add_parser("gadget-intersect", parents=[common], help="H-system for P cut by conv(Q)")
    s.add_argument("--p", required=True)
    s.add_argument("--q", required=True)
    s.add_argument("--dirs-out")
    s.set_defaults(func=cmd_gadget_intersect)

    s = sub.add_parser("truncate-cone", parents=[common], help="cut a pointed cone to a pyramid")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--dirs", "--directions", dest="dirs")
    s.set_defaults(func=cmd_truncate_cone)

    s = sub.add_parser("random-directions", parents=[common], help="sample orthogonal directions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--bound", type=int, default=100)
    s.set_defaults(func=cmd_random_directions)

    s = sub.add_parser("solve-lp", parents=[common], help="maximise c.z over an H-polytope")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--objective", help="file holding one line c_1 ... c_n")
    s.add_argument("--c", help="objective inline, e.g. '1 1 1'")
    s.set_defaults(func=cmd_solve_lp)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    if args.command == "random-directions" and not 0 <= args.k <= args.n:
        parser.error("need 0 <= k <= n")
    envelope = {"command": args.command, "seed": args.seed}
    try:
        with collect() as m:
            text = args.func(args, envelope)
    except UsageError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolyprojError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        if args.json:
            print(json.dumps({**envelope, "error": exc.name, "message": str(exc)}))
        return 1
    if args.json:
        envelope["metrics"] = m.as_dict()
        if args.out:
            io.write(args.out, text)
        print(json.dumps(envelope, sort_keys=True))
    else:
        io.write(args.out, text)
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
