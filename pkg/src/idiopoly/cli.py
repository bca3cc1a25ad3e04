"""Command-line front end.

Every subcommand maps onto one library operation family and writes
deterministic text (or JSON) to stdout; progress notes for long
computations go to stderr only.  Exit codes: 0 all requested checks pass,
1 a mathematical check failed, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import coates as coates_mod
from .coates import (
    coates_determinant,
    linear_subdigraphs,
    verify_counterexample,
)
from .digraph import (
    Digraph,
    canonical_orientations,
    complement,
    converse,
    induced,
    parse_digraph,
)
from .hemimorphy import find_inversion_sequence, lemma_3idio_check, main_theorem_verify
from .poly import MPoly, det_int, gaussian_identity_check
from .spectral import (
    Deck,
    adjacency_charpoly,
    idio_deck,
    idio_equal,
    idiosyncratic,
    seidel_charpoly,
    three_vertex_code,
    three_vertex_idio_table,
)
from .stockmeyer import (
    hamiltonian_census,
    hypomorphy_check,
    pouzet_identity_check,
    stockmeyer_B,
    stockmeyer_C,
    stockmeyer_table,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class _InputError(Exception):
    pass


def _load_digraph(path: str) -> Digraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_digraph(fh.read())
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise _InputError(f"malformed digraph in {path}: {exc}") from exc


def _load_loop_digraph(path: str) -> coates_mod.LoopDigraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_loop_digraph(fh.read())
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise _InputError(f"malformed digraph in {path}: {exc}") from exc


def parse_loop_digraph(text: str) -> coates_mod.LoopDigraph:
    """Same interchange formats as plain digraphs, but loops are allowed."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty digraph file")
    n = int(lines[0])
    body = lines[1:]
    if body and " " not in body[0] and set(body[0]) <= {"0", "1"} and len(body[0]) == n:
        if len(body) != n:
            raise ValueError(f"matrix form needs {n} rows, got {len(body)}")
        rows = [sum(1 << j for j, ch in enumerate(row) if ch == "1") for row in body]
        return coates_mod.LoopDigraph(n, rows)
    arcs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected arc line 'u v', got {ln!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    return coates_mod.LoopDigraph.from_arcs(n, arcs)


def _default_threads() -> int:
    env = os.environ.get("IDIOPOLY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _deck(g: Digraph, k: int, threads: int) -> Deck:
    """Deck computation with optional fan-out over subsets.

    Each subset's polynomial is a pure function of the subset, so any
    executor produces the same multiset; results are sorted before use.
    """
    if k == 3 or threads <= 1 or g.n <= 6:
        return idio_deck(g, k)
    subsets = list(itertools.combinations(range(g.n), k))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        polys = list(
            pool.map(lambda w: str(idiosyncratic(induced(g, w))), subsets, chunksize=8)
        )
    return Deck(k=k, polys=tuple(sorted(polys)))


# -- subcommand handlers ---------------------------------------------------


def _cmd_idio(args: argparse.Namespace) -> int:
    g = _load_digraph(args.file)
    p = idiosyncratic(g)
    if args.json:
        print(json.dumps(p.to_json_obj()))
    else:
        print(p)
    return EXIT_OK


def _cmd_charpoly(args: argparse.Namespace) -> int:
    g = _load_digraph(args.file)
    if args.complement:
        p = adjacency_charpoly(complement(g))
    elif args.converse:
        p = adjacency_charpoly(converse(g))
    elif args.seidel:
        p = seidel_charpoly(g)
    else:
        p = adjacency_charpoly(g)
    if args.json:
        print(json.dumps(p.to_json_obj()))
    else:
        print(p)
    return EXIT_OK


def _cmd_deck(args: argparse.Namespace) -> int:
    g = _load_digraph(args.file)
    if not 1 <= args.k <= g.n:
        raise _InputError(f"k must be in 1..{g.n}, got {args.k}")
    deck = _deck(g, args.k, args.threads)
    if args.json:
        print(json.dumps(deck.to_json_obj()))
    else:
        print(f"k = {deck.k}, {len(deck.polys)} subdigraphs")
        for p in deck.polys:
            print(p)
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    g = _load_digraph(args.file_a)
    h = _load_digraph(args.file_b)
    if g.n != h.n:
        raise _InputError(f"vertex counts differ: {g.n} vs {h.n}")
    if args.main_theorem:
        verdict = main_theorem_verify(g, h)
        print(json.dumps(verdict.to_json_obj()))
        if verdict.violation:
            print("THEOREM VIOLATION", file=sys.stderr)
            return EXIT_CHECK_FAILED
        return EXIT_OK
    if args.deck is not None:
        da = _deck(g, args.deck, args.threads)
        db = _deck(h, args.deck, args.threads)
        equal = da == db
        print(f"deck k={args.deck}: {'EQUAL' if equal else 'UNEQUAL'}")
        return EXIT_OK if equal else EXIT_CHECK_FAILED
    equal = idio_equal(g, h, method="grid")
    print(f"idiosyncratic polynomials: {'EQUAL' if equal else 'UNEQUAL'}")
    return EXIT_OK if equal else EXIT_CHECK_FAILED


def _cmd_lemma3(args: argparse.Namespace) -> int:
    report = lemma_3idio_check()
    print(report)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_stockmeyer(args: argparse.Namespace) -> int:
    n = args.n
    if args.parity:
        if not 3 <= n <= 6:
            raise _InputError("parity mode needs n in 3..6")
        db = det_int(stockmeyer_B(n).matrix())
        dc = det_int(stockmeyer_C(n).matrix())
        ok = db % 2 != dc % 2
        print(f"det(B_{n}) mod 2 ≠ det(C_{n}) mod 2: {'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.pouzet:
        if n > 4:
            raise _InputError("pouzet mode needs n in 1..4 (census scale)")
        print(f"counting Hamiltonian cycles of B_{n} and C_{n}...", file=sys.stderr)
        ok = pouzet_identity_check(stockmeyer_B(n), stockmeyer_C(n))
        print(f"det(B_{n}) - det(C_{n}) == (-1)^(n+1) [C(B_{n}) - C(C_{n})]: "
              f"{'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.hypomorphy:
        if n > 3:
            raise _InputError("hypomorphy mode needs n in 1..3 (isomorphism scale)")
        ok = hypomorphy_check(n)
        print(f"B_{n} - k isomorphic to C_{n} - (2^{n}+1-k) for all k: "
              f"{'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.census:
        if n > 4:
            raise _InputError("census mode needs n in 1..4 (2^n+1 vertices)")
        for name, g in ((f"B_{n}", stockmeyer_B(n)), (f"C_{n}", stockmeyer_C(n))):
            print(f"counting Hamiltonian paths of {name} "
                  f"({g.n} vertices)...", file=sys.stderr)
            census = hamiltonian_census(g)
            print(f"{name}: hamiltonian paths {census.paths_total}, "
                  f"cycles {census.cycles_total}")
        return EXIT_OK
    rows = stockmeyer_table(n)
    print("n det(B_n) det(C_n) difference parity")
    ok_all = True
    for row_n, db, dc, diff, parity_ok in rows:
        verdict = "PASS" if parity_ok else "FAIL"
        ok_all = ok_all and parity_ok
        print(f"{row_n} {db} {dc} {diff} {verdict}")
    return EXIT_OK if ok_all else EXIT_CHECK_FAILED


def _cmd_counterexample(args: argparse.Namespace) -> int:
    if not 5 <= args.n <= 10:
        raise _InputError("n must be in 5..10")
    report = verify_counterexample(args.n)
    print(json.dumps(report.to_json_obj()))
    return EXIT_OK if report.contract_holds else EXIT_CHECK_FAILED


def _cmd_coates(args: argparse.Namespace) -> int:
    h = _load_loop_digraph(args.file)
    if h.n > 10:
        raise _InputError("linear subdigraph enumeration is capped at 10 vertices")
    subs = linear_subdigraphs(h)
    signed = sum((-1) ** s.cycle_count for s in subs)
    cd = coates_determinant(h)
    bd = det_int(h.matrix())
    print(f"linear subdigraphs: {len(subs)}")
    print(f"sum of (-1)^|L|: {signed}")
    print(f"coates determinant: {cd}")
    print(f"bareiss determinant: {bd}")
    print(f"match: {'PASS' if cd == bd else 'FAIL'}")
    return EXIT_OK if cd == bd else EXIT_CHECK_FAILED


def _cmd_inversion(args: argparse.Namespace) -> int:
    g = _load_digraph(args.file_a)
    h = _load_digraph(args.file_b)
    if g.n != h.n:
        raise _InputError(f"vertex counts differ: {g.n} vs {h.n}")
    if g.n > 8:
        raise _InputError("inversion search is capped at 8 vertices")
    trace = find_inversion_sequence(g, h, depth_cap=args.depth)
    if trace is None:
        print("NOT-FOUND")
        return EXIT_CHECK_FAILED
    print(f"{len(trace.steps)} steps")
    for i, w in enumerate(trace.steps, start=1):
        print(f"step {i}: invert {{{', '.join(map(str, sorted(w)))}}}")
    if not trace.replay():
        print("trace replay failed", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_orient(args: argparse.Namespace) -> int:
    g = _load_digraph(args.file)
    try:
        sigma, tau = canonical_orientations(g)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    p = adjacency_charpoly(g)
    idio_sigma = idiosyncratic(sigma)
    idio_tau = idiosyncratic(tau)
    q = seidel_charpoly(sigma)
    verdict = gaussian_identity_check(p, q, g.n)
    print(f"sigma arcs: {sorted(sigma.arcs())}")
    print(f"tau arcs: {sorted(tau.arcs())}")
    print(f"idiosyncratic(sigma) = {idio_sigma}")
    print(f"idiosyncratic(tau) = {idio_tau}")
    print(f"idiosyncratic polynomials equal: {idio_sigma == idio_tau}")
    print(f"P(X) = {p}")
    print(f"Q(X) = {q}")
    print(f"Q(X) == i^n P(-iX): {'PASS' if verdict else 'FAIL'}")
    ok = verdict and idio_sigma == idio_tau
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idiopoly",
        description="Exact idiosyncratic polynomials of digraphs and the "
        "verification suite built on them.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help="parallelism bound for deck fan-out (results are independent "
        "of this setting; default: IDIOPOLY_THREADS or CPU count)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("idio", help="idiosyncratic polynomial of a digraph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_idio)

    p = sub.add_parser("charpoly", help="characteristic polynomial variants")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--complement", action="store_true")
    mode.add_argument("--converse", action="store_true")
    mode.add_argument("--seidel", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("deck", help="k-subset idiosyncratic deck")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_deck)

    p = sub.add_parser("compare", help="equality checks on two digraphs")
    p.add_argument("file_a")
    p.add_argument("file_b")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--deck", type=int, metavar="K")
    mode.add_argument("--main-theorem", action="store_true")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("lemma3", help="exhaustive 3-vertex equivalence sweep")
    p.set_defaults(func=_cmd_lemma3)

    p = sub.add_parser("stockmeyer", help="tournament family computations")
    p.add_argument("-n", type=int, required=True, choices=range(1, 7))
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--census", action="store_true")
    mode.add_argument("--parity", action="store_true")
    mode.add_argument("--pouzet", action="store_true")
    mode.add_argument("--hypomorphy", action="store_true")
    p.set_defaults(func=_cmd_stockmeyer)

    p = sub.add_parser("counterexample", help="one-arc-reversal family report")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("coates", help="determinant via linear subdigraphs")
    p.add_argument("file")
    p.set_defaults(func=_cmd_coates)

    p = sub.add_parser("inversion", help="module-inversion sequence search")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--depth", type=int, default=6)
    p.set_defaults(func=_cmd_inversion)

    p = sub.add_parser("orient", help="canonical orientations of a bipartite graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_orient)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
