"""
Command-line front end.

Subcommands: map, unmap, hasse, shards, mobius, chains, el-verify,
sortable, noncrossing, verify.  All output is deterministic (no
timestamps) and goes to stdout unless --out is given.  Lattice-wide
commands are capped at n=7 and element-wise ones at n=9; --force
overrides either cap.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import ResourceLimitError, ShardOrderError
from .lattice import build_lattice, covers_up, leq
from .perms import Permutation, all_permutations, is_indecomposable
from .preorders import Preorder, lam, mu, preorder_from_json, preorder_to_json
from .shards import enumerate_shards, intersect, lower_shards, to_preorder
from .shelling import (
    chain_report,
    count_decreasing_chains,
    edge_label,
    increasing_chain,
    mobius,
)
from .sortable import (
    CoxeterElement,
    all_coxeter_elements,
    noncrossing_order_of_partition,
    noncrossing_preorders,
    sortable_permutations,
)

LATTICE_CAP = 7
ELEMENT_CAP = 9

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def _check_cap(n: int, cap: int, force: bool, what: str) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap and not force:
        raise ResourceLimitError(
            f"{what} is capped at n={cap} (requested n={n}; use --force to override)"
        )


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read_json_arg(arg: str) -> dict:
    if arg == "-":
        return json.load(sys.stdin)
    if arg.lstrip().startswith("{"):
        return json.loads(arg)
    with open(arg) as fh:
        return json.load(fh)


def _endpoints(args) -> tuple[Preorder, Preorder]:
    bottom = (
        mu(Permutation.parse(args.bottom))
        if args.bottom
        else Preorder.discrete(args.n)
    )
    top = (
        mu(Permutation.parse(args.top)) if args.top else Preorder.complete(args.n)
    )
    if bottom.n != args.n or top.n != args.n:
        raise ValueError("interval endpoints must have size n")
    return bottom, top


def cmd_map(args) -> int:
    p = Permutation.parse(args.perm)
    _check_cap(p.n, ELEMENT_CAP, args.force, "map")
    _emit(_dump(preorder_to_json(mu(p))), args.out)
    return 0


def cmd_unmap(args) -> int:
    data = _read_json_arg(args.json)
    q = preorder_from_json(data)
    _check_cap(q.n, ELEMENT_CAP, args.force, "unmap")
    _emit(str(lam(q)) + "\n", args.out)
    return 0


def cmd_hasse(args) -> int:
    _check_cap(args.n, LATTICE_CAP, args.force, "hasse")
    lat = build_lattice(args.n, force=args.force)
    if args.format == "dot":
        _emit(lat.to_dot(), args.out)
    else:
        _emit(_dump(lat.to_json()), args.out)
    return 0


def cmd_shards(args) -> int:
    _check_cap(args.n, ELEMENT_CAP, args.force, "shards")
    shards = enumerate_shards(args.n)
    if args.format == "json":
        _emit(
            _dump({"n": args.n, "count": len(shards), "shards": [str(s) for s in shards]}),
            args.out,
        )
    else:
        _emit("".join(f"{s}\n" for s in shards), args.out)
    return 0


def cmd_mobius(args) -> int:
    _check_cap(args.n, LATTICE_CAP, args.force, "mobius")
    bottom, top = _endpoints(args)
    value = mobius(bottom, top)
    _emit(
        _dump(
            {
                "n": args.n,
                "bottom": str(lam(bottom)),
                "top": str(lam(top)),
                "mobius": value,
                "decreasing_chains": count_decreasing_chains(bottom, top),
            }
        ),
        args.out,
    )
    return 0


def cmd_chains(args) -> int:
    _check_cap(args.n, LATTICE_CAP, args.force, "chains")
    bottom, top = _endpoints(args)
    _emit(_dump(chain_report(bottom, top)), args.out)
    return 0


def cmd_sortable(args) -> int:
    _check_cap(args.n, LATTICE_CAP, args.force, "sortable")
    c = CoxeterElement.parse(args.coxeter, args.n)
    sortable = sortable_permutations(c)
    if args.format == "json":
        _emit(
            _dump(
                {
                    "n": args.n,
                    "coxeter": list(c.word),
                    "count": len(sortable),
                    "sortable": [str(p) for p in sortable],
                }
            ),
            args.out,
        )
    else:
        _emit("".join(f"{p}\n" for p in sortable), args.out)
    return 0


def cmd_noncrossing(args) -> int:
    if args.partition:
        data = _read_json_arg(args.partition)
        n = data["n"]
        c = CoxeterElement(n, tuple(data["coxeter"]))
        if args.n is not None and args.n != n:
            raise ValueError("--n disagrees with the partition JSON")
        _check_cap(n, ELEMENT_CAP, args.force, "noncrossing")
        q = noncrossing_order_of_partition([set(b) for b in data["blocks"]], c)
        _emit(_dump(preorder_to_json(q)), args.out)
        return 0
    if args.n is None:
        raise ValueError("--n is required without a partition argument")
    if args.coxeter is None:
        raise ValueError("--coxeter is required without a partition argument")
    _check_cap(args.n, LATTICE_CAP, args.force, "noncrossing")
    c = CoxeterElement.parse(args.coxeter, args.n)
    found = noncrossing_preorders(c)
    _emit(
        _dump(
            {
                "n": args.n,
                "coxeter": list(c.word),
                "count": len(found),
                "noncrossing": [preorder_to_json(q) for q in found],
            }
        ),
        args.out,
    )
    return 0


def _suite_roundtrip(n: int) -> dict:
    checked = 0
    for p in all_permutations(n):
        if lam(mu(p)) != p:
            return {"suite": "roundtrip", "n": n, "pass": False, "failed_at": str(p)}
        checked += 1
    return {"suite": "roundtrip", "n": n, "pass": True, "checked": checked}


def _suite_geometry(n: int) -> dict:
    agreements = 0
    for p in all_permutations(n):
        if to_preorder(intersect(lower_shards(p), n=n)) != mu(p):
            return {"suite": "geometry", "n": n, "pass": False, "failed_at": str(p)}
        agreements += 1
    return {"suite": "geometry", "n": n, "pass": True, "agreements": agreements}


def _suite_el(n: int) -> dict:
    bottom, top = Preorder.discrete(n), Preorder.complete(n)

    def increasing_count(cur, last):
        if cur == top:
            return 1
        total = 0
        for c in covers_up(cur):
            if not leq(c, top):
                continue
            lab = edge_label(cur, c)
            if lab >= last:
                total += increasing_count(c, lab)
        return total

    inc_count = increasing_count(bottom, 0)
    greedy = increasing_chain(bottom, top)
    dec = count_decreasing_chains(bottom, top)
    ok = inc_count == 1 and list(greedy.labels) == sorted(greedy.labels)
    return {
        "suite": "el",
        "n": n,
        "pass": ok,
        "increasing_chains": inc_count,
        "decreasing_chains": dec,
        "greedy_labels": list(greedy.labels),
    }


def _suite_mobius(n: int) -> dict:
    value = mobius(Preorder.discrete(n), Preorder.complete(n))
    indecomposable = sum(1 for p in all_permutations(n) if is_indecomposable(p))
    ok = abs(value) == indecomposable
    return {
        "suite": "mobius",
        "n": n,
        "pass": ok,
        "mobius": value,
        "indecomposable": indecomposable,
    }


def _suite_sortable(n: int) -> dict:
    expected = CATALAN[n] if n < len(CATALAN) else None
    words = 0
    for c in all_coxeter_elements(n):
        words += 1
        image = {mu(p) for p in sortable_permutations(c)}
        nc = set(noncrossing_preorders(c))
        if image != nc or (expected is not None and len(image) != expected):
            return {
                "suite": "sortable",
                "n": n,
                "pass": False,
                "failed_at": str(c),
            }
    return {
        "suite": "sortable",
        "n": n,
        "pass": True,
        "words": words,
        "count_per_word": expected,
    }


SUITES = {
    "roundtrip": _suite_roundtrip,
    "geometry": _suite_geometry,
    "el": _suite_el,
    "mobius": _suite_mobius,
    "sortable": _suite_sortable,
}


def cmd_verify(args) -> int:
    _check_cap(args.n, LATTICE_CAP, args.force, "verify")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [SUITES[name](args.n) for name in names]
    ok = all(r["pass"] for r in results)
    _emit(_dump({"n": args.n, "pass": ok, "results": results}), args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shardorder",
        description="Lattice of permutation pre-orders: bijections, Hasse "
        "diagrams, chain labelings, and sortability checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_required=True):
        if n_required:
            p.add_argument("--n", type=int, required=True, help="ground-set size")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--force", action="store_true", help="override size caps")

    p = sub.add_parser("map", help="permutation -> pre-order JSON")
    p.add_argument("perm", help="one-line word, e.g. 26314758 or 2,6,3,1,4,7,5,8")
    common(p, n_required=False)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("unmap", help="pre-order JSON -> permutation")
    p.add_argument("json", help="inline JSON, a file path, or - for stdin")
    common(p, n_required=False)
    p.set_defaults(func=cmd_unmap)

    p = sub.add_parser("hasse", help="export the cover digraph")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    common(p)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("shards", help="enumerate shards")
    p.add_argument("--format", choices=("text", "json"), default="text")
    common(p)
    p.set_defaults(func=cmd_shards)

    p = sub.add_parser("mobius", help="Moebius number of an interval")
    p.add_argument("--bottom", help="permutation string (default identity)")
    p.add_argument("--top", help="permutation string (default reversal)")
    common(p)
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("chains", help="chain report for an interval")
    p.add_argument("--bottom", help="permutation string (default identity)")
    p.add_argument("--top", help="permutation string (default reversal)")
    common(p)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("sortable", help="list the sortable permutations of a Coxeter word")
    p.add_argument("--coxeter", required=True, help="generator indices, e.g. 2,1,3")
    p.add_argument("--format", choices=("text", "json"), default="text")
    common(p)
    p.set_defaults(func=cmd_sortable)

    p = sub.add_parser(
        "noncrossing",
        help="noncrossing pre-orders of a Coxeter word, or build one from a partition",
    )
    p.add_argument(
        "partition",
        nargs="?",
        help='partition JSON {"n":..,"coxeter":[..],"blocks":[[..]..]} (inline, path, or -)',
    )
    p.add_argument("--coxeter", help="generator indices (enumeration mode)")
    p.add_argument("--n", type=int, help="ground-set size (enumeration mode)")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--force", action="store_true", help="override size caps")
    p.set_defaults(func=cmd_noncrossing)

    p = sub.add_parser("verify", help="run an oracle suite")
    p.add_argument(
        "--suite",
        choices=tuple(SUITES) + ("all",),
        default="all",
    )
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("el-verify", help="alias for verify --suite el")
    common(p)
    p.set_defaults(func=cmd_verify, suite="el")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ShardOrderError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
