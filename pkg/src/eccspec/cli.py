"""Command-line front end.

Exit codes: 0 on success (all checks passing), 1 when a verification check
fails, 2 on usage errors.  Graph arguments are graph6 strings, or paths to
edge-list files ("n=<count>" header, one "u v" pair per line, 0-indexed).
Polynomials print as comma-separated coefficients in descending degree order
(so "1,0,-17,0,16" is x^4 - 17x^2 + 16).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import census as census_mod
from . import suites
from .eccentricity import ecc_matrix, hl_index, multiplicity, spectrum_summary
from .exactalg import berkowitz_charpoly
from .graphs import (
    FamilyId,
    Graph,
    build_family,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
)

STORE_ENV = "ECCSPEC_STORE"


class UsageError(Exception):
    pass


def _load_graph(text) -> Graph:
    if os.path.exists(text):
        try:
            with open(text, "r", encoding="utf-8") as fh:
                return parse_edge_list(fh.read())
        except (ValueError, OSError) as exc:
            raise UsageError(f"cannot read edge-list file {text!r}: {exc}")
    try:
        return graph6_decode(text)
    except ValueError as exc:
        raise UsageError(f"argument {text!r} is neither a graph6 string nor "
                         f"an existing edge-list file: {exc}")


def _parse_family(text) -> FamilyId:
    """Family grammar: K<n>, P<n>, C<n>, K(a,b,...), K<r>v<descriptor>,
    S(t0,-p,t1,...), g1:<i>@<n>, thm5:<i>@<n>."""
    text = text.strip()
    try:
        if text.startswith("g1:") or text.startswith("thm5:"):
            head, rest = text.split(":", 1)
            idx, n = rest.split("@")
            if head == "g1":
                return FamilyId.g1(int(idx), int(n))
            return FamilyId.thm5(int(idx), int(n))
        if text.startswith("S(") and text.endswith(")"):
            nums = [int(x) for x in text[2:-1].split(",") if x.strip()]
            if len(nums) < 2 or nums[1] > 0:
                raise ValueError("mixed star needs S(t0,-p,...)")
            return FamilyId.mixed_star(nums[0], -nums[1], nums[2:])
        if text.startswith("K(") and text.endswith(")"):
            parts = [int(x) for x in text[2:-1].split(",") if x.strip()]
            return FamilyId.multipartite(parts)
        if "v" in text and text.startswith("K"):
            head, desc = text.split("v", 1)
            return FamilyId.join_clique(int(head[1:]), desc)
        kind = {"K": FamilyId.complete, "P": FamilyId.path,
                "C": FamilyId.cycle}.get(text[0])
        if kind is not None:
            return kind(int(text[1:]))
    except (ValueError, IndexError) as exc:
        raise UsageError(f"cannot parse family id {text!r}: {exc}")
    raise UsageError(f"cannot parse family id {text!r}")


_QUERY_OPS = ("<=", ">=", "!=", "<", ">", "=")
_QUERY_FIELDS = ("n", "diam", "v1_size", "mult_minus1", "mult_minus2",
                 "mult_zero", "family")


def _parse_predicates(tokens):
    preds = []
    for tok in tokens:
        for op in _QUERY_OPS:
            if op in tok:
                field, value = tok.split(op, 1)
                field = field.strip()
                value = value.strip()
                if field not in _QUERY_FIELDS:
                    raise UsageError(
                        f"unknown query field {field!r}; expected one of "
                        f"{', '.join(_QUERY_FIELDS)}")
                if field == "family":
                    if op not in ("=", "!="):
                        raise UsageError("family supports only = and !=")
                    preds.append((field, op, value))
                else:
                    try:
                        preds.append((field, op, int(value)))
                    except ValueError:
                        raise UsageError(f"predicate {tok!r}: {value!r} is "
                                         "not an integer")
                break
        else:
            raise UsageError(f"predicate {tok!r} has no comparison operator")
    return preds


def _match(rec, preds):
    import operator
    ops = {"=": operator.eq, "!=": operator.ne, "<": operator.lt,
           ">": operator.gt, "<=": operator.le, ">=": operator.ge}
    for field, op, value in preds:
        if field == "family":
            hit = value in rec.family_tags
            if (op == "=") != hit:
                return False
        elif not ops[op](getattr(rec, field), value):
            return False
    return True


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eccspec",
        description="exact eccentricity-matrix spectra, census scans, and "
                    "verification suites")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="graph6 string or edge-list file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    add_graph_cmd("ecc", "print the eccentricity matrix")
    add_graph_cmd("charpoly", "print the exact characteristic polynomial "
                              "(descending coefficients)")
    p = add_graph_cmd("mult", "print the multiplicity of a rational "
                              "eigenvalue")
    p.add_argument("xi", help="rational shift, e.g. -1 or 3/2")
    add_graph_cmd("hl", "print the HL index (median eigenvalue magnitude)")

    p = sub.add_parser("family", help="emit a named family graph as graph6")
    p.add_argument("id", help="K5 | P4 | C7 | K(2,2,3) | K4v2K1 | "
                              "S(3,-2,2) | g1:0@9 | thm5:9@16")

    p = sub.add_parser("census", help="enumerate and classify all connected "
                                      "graphs of one order")
    p.add_argument("n", type=int)
    p.add_argument("--store", default=None,
                   help=f"output path (default ${STORE_ENV})")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--big", action="store_true",
                   help="allow the best-effort n=10 run (11.7M graphs; "
                        "hours, not minutes)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("query", help="filter a census store")
    p.add_argument("store", help=f"store path (or set ${STORE_ENV})")
    p.add_argument("predicates", nargs="*",
                   help="field=value filters, e.g. n=9 mult_minus1=5 diam<=2 "
                        "family=K6v3K1")
    p.add_argument("--mates", action="store_true",
                   help="also list cospectral mates of every match")
    p.add_argument("--high-mult", type=int, default=None, metavar="I",
                   help="exploratory scan for eigenvalues outside {-2,-1,0} "
                        "with multiplicity >= n-I")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(suites.ALL_SUITES)}, "
                                 "or 'all'")
    p.add_argument("--n", type=int, nargs="*", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _cmd_ecc(args):
    g = _load_graph(args.graph)
    e = ecc_matrix(g)
    if args.format == "json":
        print(json.dumps({"n": g.n, "matrix": [list(r) for r in e.m.rows]}))
    else:
        for row in e.m.rows:
            print(" ".join(str(x) for x in row))
    return 0


def _cmd_charpoly(args):
    g = _load_graph(args.graph)
    poly = berkowitz_charpoly(ecc_matrix(g).m)
    if args.format == "json":
        print(json.dumps({"n": g.n,
                          "charpoly_descending": poly.descending_csv()}))
    else:
        print(poly.descending_csv())
    return 0


def _cmd_mult(args):
    g = _load_graph(args.graph)
    try:
        xi = Fraction(args.xi)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"xi {args.xi!r} is not a rational number")
    m = multiplicity(g, xi)
    if args.format == "json":
        print(json.dumps({"xi": str(xi), "multiplicity": m}))
    else:
        print(m)
    return 0


def _cmd_hl(args):
    g = _load_graph(args.graph)
    if args.format == "json":
        print(json.dumps(spectrum_summary(g).to_dict()))
    else:
        iv = hl_index(g)
        print(str(iv.lo) if iv.is_point() else f"[{iv.lo}, {iv.hi}]")
    return 0


def _cmd_family(args):
    g = build_family(_parse_family(args.id))
    print(graph6_encode(g).decode("ascii"))
    return 0


def _cmd_census(args):
    store = args.store or os.environ.get(STORE_ENV)
    if args.n >= 10 and not args.big:
        raise UsageError("the n=10 census is best-effort (11.7M graphs); "
                         "pass --big to run it")
    try:
        records = census_mod.classify(args.n, store_path=store, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc))
    by_mult = {}
    for rec in records:
        by_mult[rec.mult_minus1] = by_mult.get(rec.mult_minus1, 0) + 1
    if args.format == "json":
        print(json.dumps({"n": args.n, "graphs": len(records),
                          "store": store,
                          "mult_minus1_histogram": by_mult}))
    else:
        print(f"n={args.n}: {len(records)} connected graphs"
              + (f" -> {store}" if store else ""))
        for m in sorted(by_mult, reverse=True):
            print(f"  m(-1)={m}: {by_mult[m]} graphs")
    return 0


def _cmd_query(args):
    store = args.store
    if not os.path.exists(store):
        raise UsageError(f"census store {store!r} does not exist")
    records = census_mod.read_store(store)
    preds = _parse_predicates(args.predicates)
    hits = [r for r in records if _match(r, preds)]
    out = []
    for rec in hits:
        item = {"canon": rec.canon, "n": rec.n, "diam": rec.diam,
                "v1_size": rec.v1_size, "mult_minus1": rec.mult_minus1,
                "mult_minus2": rec.mult_minus2, "mult_zero": rec.mult_zero,
                "family_tags": list(rec.family_tags)}
        if args.mates:
            item["cospectral_mates"] = [
                m.canon for m in census_mod.cospectral_mates(records, rec)]
        out.append(item)
    high = None
    if args.high_mult is not None:
        high = [{"canon": rec.canon,
                 "eigenvalues": {str(k): v for k, v in flagged.items()},
                 "note": note}
                for rec, flagged, note in
                census_mod.high_multiplicity_hits(hits, args.high_mult)]
    if args.format == "json":
        payload = {"matches": out}
        if high is not None:
            payload["high_multiplicity"] = high
        print(json.dumps(payload))
    else:
        for item in out:
            line = (f"{item['canon']}  n={item['n']} diam={item['diam']} "
                    f"v1={item['v1_size']} m(-1)={item['mult_minus1']} "
                    f"m(-2)={item['mult_minus2']} m(0)={item['mult_zero']}")
            if item["family_tags"]:
                line += "  [" + ",".join(item["family_tags"]) + "]"
            if args.mates:
                line += f"  mates={item['cospectral_mates']}"
            print(line)
        if high is not None:
            print(f"high-multiplicity hits (exploratory, xi outside "
                  f"{{-2,-1,0}}, m >= n-{args.high_mult}):")
            for item in high:
                print(f"  {item['canon']}  {item['eigenvalues']}"
                      + (f"  ({item['note']})" if item["note"] else ""))
    return 0


def _cmd_verify(args):
    names = list(suites.ALL_SUITES) if args.suite == "all" else [args.suite]
    if not names:
        raise UsageError("empty suite selection")
    for name in names:
        if name != "all" and name not in suites.ALL_SUITES:
            raise UsageError(f"unknown suite {name!r}; expected one of "
                             f"{', '.join(suites.ALL_SUITES)} or 'all'")
    cache = {}
    reports = []
    for name in names:
        try:
            rep = suites.run_suite(name, n_values=args.n, seed=args.seed,
                                   trials=args.trials, census_cache=cache,
                                   jobs=args.jobs)
        except ValueError as exc:
            raise UsageError(str(exc))
        reports.append(rep)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2,
                         sort_keys=True))
    else:
        for rep in reports:
            print(rep.text_summary())
    return 0 if all(r.passed for r in reports) else 1


def cli_main(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "ecc": _cmd_ecc,
        "charpoly": _cmd_charpoly,
        "mult": _cmd_mult,
        "hl": _cmd_hl,
        "family": _cmd_family,
        "census": _cmd_census,
        "query": _cmd_query,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
