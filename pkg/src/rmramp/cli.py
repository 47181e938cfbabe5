"""Command-line front end: every computation as reproducible table/JSON/CSV.

Exit codes: 0 success, 2 usage, 3 violated precondition, 4 search budget
exceeded.  All output is deterministic given the flags (plus --seed where
randomness is involved); big integers print in full decimal.
"""

import argparse
import csv
import json
import sys

from .correct import local_correct_a, local_correct_b, simulate_correction
from .errors import BudgetExceeded, DomainError
from .gf import field_from_order
from .monomials import Window
from .oracle import brute_min_shadow, brute_min_support, brute_profile
from .scheme import (PartialInfo, encode, profile, read_shares, reconstruct,
                     write_shares)
from .tables import build_table, list_tables, query_note
from .weights import (CodePair, ghw, ghw_hierarchy, hierarchy, rghw_explain,
                      rho, rho_clipped, rm_dim, veca)

DEFAULT_ENUM_BUDGET = 10 ** 6
DEFAULT_SEARCH_BUDGET = 10 ** 8


def _common_flags(sub):
    sub.add_argument("--format", choices=("table", "json", "csv"),
                     default="table", help="output format")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for any randomized step")
    sub.add_argument("--budget", type=int, default=None,
                     help="work cap for searches and enumerations")


def _emit(args, payload, headers=None, rows=None, notes=()):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if headers:
            writer.writerow(headers)
        for row in rows or ():
            writer.writerow(row)
        return
    if headers and rows is not None:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows
                  else len(str(h)) for i, h in enumerate(headers)]
        print("  ".join(str(h).rjust(w) for h, w in zip(headers, widths)))
        for row in rows:
            print("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    for note in notes:
        print(f"note: {note}")


def _pair(args):
    return CodePair(args.q, args.s, args.u1, args.u2)


def _cmd_rghw(args):
    pair = _pair(args)
    if args.all:
        budget = args.budget or DEFAULT_ENUM_BUDGET
        ell = pair.codim
        if ell > budget:
            raise BudgetExceeded(f"{ell} values exceed the budget {budget}")
        values = hierarchy(pair)
        payload = {"q": pair.q, "s": pair.s, "u1": pair.u1, "u2": pair.u2,
                   "ell": ell, "weights": values}
        _emit(args, payload, ("m", "M_m"), list(enumerate(values, start=1)))
        return
    if args.m is None:
        raise DomainError("give --m or --all")
    a, r, t, value = rghw_explain(pair, args.m)
    payload = {"q": pair.q, "s": pair.s, "u1": pair.u1, "u2": pair.u2,
               "m": args.m, "value": value}
    headers, rows = ("m", "M_m"), [(args.m, value)]
    if args.explain:
        payload.update({"element": list(a), "window_rank": r, "cube_rank": t})
        headers = ("m", "element", "window_rank_r", "cube_rank_t", "M_m")
        rows = [(args.m, "(" + ",".join(map(str, a)) + ")", r, t, value)]
    _emit(args, payload, headers, rows)


def _cmd_ghw(args):
    k = rm_dim(args.u, args.s, args.q)
    if args.all:
        budget = args.budget or DEFAULT_ENUM_BUDGET
        if k > budget:
            raise BudgetExceeded(f"{k} values exceed the budget {budget}")
        values = ghw_hierarchy(args.u, args.s, args.q)
        payload = {"q": args.q, "s": args.s, "u": args.u, "dim": k,
                   "weights": values}
        _emit(args, payload, ("r", "d_r"), list(enumerate(values, start=1)))
        return
    if args.r is None:
        raise DomainError("give --r or --all")
    value = ghw(args.u, args.s, args.q, args.r)
    payload = {"q": args.q, "s": args.s, "u": args.u, "r": args.r,
               "value": value}
    _emit(args, payload, ("r", "d_r"), [(args.r, value)])


def _cmd_veca(args):
    trace = []
    element = veca(args.a, args.b, args.v, args.s, args.m, args.q, trace=trace)
    payload = {"q": args.q, "a": args.a, "b": args.b, "v": args.v,
               "s": args.s, "m": args.m, "element": list(element)}
    headers = ("m", "element")
    rows = [(args.m, "(" + ",".join(map(str, element)) + ")")]
    if args.explain:
        payload["counts"] = trace
        headers = ("m", "element", "counts")
        rows = [(args.m, "(" + ",".join(map(str, element)) + ")",
                 " ".join(map(str, trace)))]
    _emit(args, payload, headers, rows)


def _cmd_rho(args):
    if args.last_lo is None and args.last_hi is None:
        value = rho(args.a, args.b, args.s, args.q)
    else:
        lo = args.last_lo or 0
        hi = args.last_hi if args.last_hi is not None else args.q - 1
        value = rho_clipped(args.a, args.b, lo, hi, args.s, args.q)
    payload = {"q": args.q, "s": args.s, "a": args.a, "b": args.b,
               "count": value}
    _emit(args, payload, ("a", "b", "count"), [(args.a, args.b, value)])


def _cmd_profile(args):
    prof = profile(_pair(args))
    rows = [(m + 1, prof.t[m], prof.t_ghw[m], prof.r[m], prof.r_ghw[m])
            for m in range(prof.ell)]
    _emit(args, prof.as_dict(), ("m", "t_m", "t'_m", "r_m", "r'_m"), rows,
          notes=(query_note(prof.q, prof.u1),))


def _cmd_tables(args):
    if args.list:
        for tid in list_tables():
            print(tid)
        return
    spec = build_table(args.table_id)
    _emit(args, spec.as_dict(), spec.headers, spec.rows, notes=spec.notes)


def _cmd_oracle(args):
    budget = args.budget or DEFAULT_SEARCH_BUDGET
    if args.mode == "shadow":
        if args.m is None:
            raise DomainError("shadow mode needs --m")
        window = Window(args.q, args.s, args.lo, args.hi)
        value, witness = brute_min_shadow(window, args.m, budget=budget)
        payload = {"mode": "shadow", "q": args.q, "s": args.s,
                   "lo": args.lo, "hi": args.hi, "m": args.m,
                   "value": value, "witness": [list(a) for a in witness]}
        _emit(args, payload, ("m", "min_shadow"), [(args.m, value)])
    elif args.mode == "support":
        if args.m is None:
            raise DomainError("support mode needs --m")
        value = brute_min_support(_pair(args), args.m, budget=budget)
        payload = {"mode": "support", "q": args.q, "s": args.s,
                   "u1": args.u1, "u2": args.u2, "m": args.m, "value": value}
        _emit(args, payload, ("m", "min_support"), [(args.m, value)])
    else:
        prof = brute_profile(_pair(args), budget=budget)
        payload = {"mode": "profile", "q": args.q, "s": args.s,
                   "u1": args.u1, "u2": args.u2, "t": prof.t, "r": prof.r}
        rows = [(m + 1, prof.t[m], prof.r[m]) for m in range(len(prof.t))]
        _emit(args, payload, ("m", "t_m", "r_m"), rows)


def _parse_secret(text):
    return [int(tok) for tok in text.replace(",", " ").split()]


def _parse_reduction(text):
    return tuple(int(tok) for tok in text.replace(",", " ").split()) \
        if text else None


def _parse_positions(text):
    out = []
    for tok in text.replace(",", " ").split():
        if "-" in tok:
            lo, hi = tok.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(tok))
    return sorted(set(out))


def _cmd_shares(args):
    reduction = _parse_reduction(args.reduction_poly)
    if args.action == "encode":
        pair = _pair(args)
        share_vec = encode(_parse_secret(args.secret), pair, args.seed,
                           reduction=reduction)
        if args.out and args.out != "-":
            with open(args.out, "w") as fp:
                write_shares(fp, share_vec)
        else:
            write_shares(sys.stdout, share_vec)
        return
    if args.action == "reconstruct":
        with open(args.infile) as fp:
            pair, observed = read_shares(fp)
        if args.positions:
            keep = set(_parse_positions(args.positions))
            observed = {j: v for j, v in observed.items() if j in keep}
        result = reconstruct(observed, pair, reduction=reduction)
        if isinstance(result, PartialInfo):
            payload = {"recovered": False, "determined": result.determined,
                       "ell": pair.codim}
        else:
            payload = {"recovered": True, "secret": result}
        _emit(args, payload)
        return
    # correct
    with open(args.infile) as fp:
        pair, observed = read_shares(fp)
    word = [observed.get(j, 0) for j in range(pair.n)]
    decoder = local_correct_a if args.decoder == "A" else local_correct_b
    field = field_from_order(pair.q, reduction)
    value = decoder(word, args.index, field, pair.u1, pair.s, seed=args.seed)
    _emit(args, {"index": args.index, "value": value,
                 "decoder": args.decoder})


def _cmd_simulate(args):
    report = simulate_correction(_pair(args), args.decoder, args.delta,
                                 args.trials, args.seed,
                                 reduction=_parse_reduction(args.reduction_poly))
    payload = report.as_dict()
    rows = [(report.decoder, report.delta, report.trials, report.failures,
             f"{report.failure_rate:.6f}", report.queries)]
    _emit(args, payload,
          ("decoder", "delta", "trials", "failures", "failure_rate",
           "queries"), rows,
          notes=(f"queries > t_1: {report.queries_above_t1}; "
                 f"t_2 covers queries (at most one symbol leaked): "
                 f"{report.single_symbol_leak}",))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rmramp",
        description="weight hierarchies of q-ary Reed-Muller codes and "
                    "ramp secret sharing built on them")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("rghw", help="relative generalized Hamming weights")
    for flag in ("--q", "--s", "--u1"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--u2", type=int, default=-1)
    p.add_argument("--m", type=int)
    p.add_argument("--all", action="store_true")
    p.add_argument("--explain", action="store_true")
    _common_flags(p)
    p.set_defaults(func=_cmd_rghw)

    p = subs.add_parser("ghw", help="generalized Hamming weights")
    for flag in ("--q", "--s", "--u"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--all", action="store_true")
    _common_flags(p)
    p.set_defaults(func=_cmd_ghw)

    p = subs.add_parser("veca", help="m-th window element in anti-lex order")
    for flag in ("--q", "--a", "--b", "--s", "--m"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--v", type=int, default=None,
                   help="last-coordinate cap (default q-1)")
    p.add_argument("--explain", action="store_true")
    _common_flags(p)
    p.set_defaults(func=_cmd_veca)

    p = subs.add_parser("rho", help="window cardinalities")
    for flag in ("--q", "--s", "--a", "--b"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--last-lo", type=int, default=None)
    p.add_argument("--last-hi", type=int, default=None)
    _common_flags(p)
    p.set_defaults(func=_cmd_rho)

    p = subs.add_parser("profile", help="scheme threshold profile")
    for flag in ("--q", "--s", "--u1", "--u2"):
        p.add_argument(flag, type=int, required=True)
    _common_flags(p)
    p.set_defaults(func=_cmd_profile)

    p = subs.add_parser("tables", help="regenerate built-in reference tables")
    p.add_argument("table_id", nargs="?", choices=list_tables(),
                   metavar="TABLE", help="one of: " + " ".join(list_tables()))
    p.add_argument("--list", action="store_true")
    _common_flags(p)
    p.set_defaults(func=_cmd_tables)

    p = subs.add_parser("oracle", help="exhaustive brute-force validators")
    p.add_argument("--mode", choices=("shadow", "support", "profile"),
                   required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=0)
    p.add_argument("--u1", type=int, default=1)
    p.add_argument("--u2", type=int, default=-1)
    p.add_argument("--m", type=int)
    _common_flags(p)
    p.set_defaults(func=_cmd_oracle)

    p = subs.add_parser("shares", help="encode, reconstruct or repair shares")
    p.add_argument("action", choices=("encode", "reconstruct", "correct"))
    p.add_argument("--q", type=int, default=8)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--u1", type=int, default=6)
    p.add_argument("--u2", type=int, default=5)
    p.add_argument("--secret", default="")
    p.add_argument("--out", default="-")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--positions", default="")
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--decoder", choices=("A", "B"), default="A")
    p.add_argument("--reduction-poly", default="",
                   help="override reduction polynomial, ascending coeffs")
    _common_flags(p)
    p.set_defaults(func=_cmd_shares)

    p = subs.add_parser("simulate", help="Monte-Carlo local-correction runs")
    for flag in ("--q", "--s", "--u1", "--u2"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--decoder", choices=("A", "B"), required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--reduction-poly", default="",
                   help="override reduction polynomial, ascending coeffs")
    _common_flags(p)
    p.set_defaults(func=_cmd_simulate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "veca" and args.v is None:
        args.v = args.q - 1
    try:
        args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
