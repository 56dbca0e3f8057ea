"""Command-line interface.

All output is line-oriented and deterministically ordered so runs can be
compared with golden files.  Exit codes: 0 success, 1 verification (or
guessing) failure, 2 usage error.
"""

import argparse
import sys
from fractions import Fraction
from math import comb, factorial

from . import bfile, config
from .enums import transfer
from .enums.conjectures import check_conjecture
from .guessing import GuessConfig, guess_la, guess_lll
from .ore import annihilates, is_right_factor, parse_operator
from .registry import REGISTRY, get_entry
from .report import report_text, run_report

USAGE_ERROR = 2

_GF_SYSTEMS = {
    "A177317": lambda: transfer.adjacent_permutation_system(5),
    "A199250": transfer.a199250_system,
    "A264946": transfer.a264946_system,
    "A264947": transfer.a264947_system,
}


def _print_seq(seq):
    for i, t in enumerate(seq.terms):
        print(seq.offset + i, t)


def _entry_or_exit(seq_id):
    try:
        return get_entry(seq_id)
    except KeyError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(USAGE_ERROR)


def _parse_rescale(expr):
    """A divisor expression in n, e.g. 'binomial(3*n,n)' or
    'factorial(5*n)/(factorial(n)**3*factorial(n+1)**2)'."""
    names = {"binomial": comb, "factorial": factorial, "Fraction": Fraction}

    def ansatz(n):
        return eval(expr, {"__builtins__": {}}, dict(names, n=n))

    return ansatz


def cmd_terms(args):
    entry = _entry_or_exit(args.id)
    _print_seq(entry.terms(args.n))
    return 0


def cmd_oracle(args):
    entry = _entry_or_exit(args.id)
    try:
        _print_seq(entry.oracle_terms(args.n))
    except KeyError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    return 0


def cmd_guess(args):
    entry = _entry_or_exit(args.id)
    cfg_file = config.load_config()
    n = args.n or config.as_int(cfg_file["max_terms"])
    if entry.generator_cap:
        n = min(n, entry.generator_cap)
    cfg = GuessConfig(
        max_order=args.max_order or config.as_int(cfg_file["max_order"]),
        max_degree=args.max_degree or config.as_int(cfg_file["max_degree"]),
        shift_ansatz=_parse_rescale(args.rescale) if args.rescale else None,
    )
    seq = entry.terms(n)
    guesser = guess_la if args.method == "la" else guess_lll
    report = guesser(seq, cfg)
    if report is None or not report.candidates:
        print("no candidate")
        return 1
    sys.stdout.write(report.to_text())
    return 0


def cmd_verify(args):
    entry = _entry_or_exit(args.id)
    with open(args.operator) as f:
        L = parse_operator(f.read())
    seq = entry.terms(args.n)
    ok = annihilates(L, seq)
    print(f"annihilates {'yes' if ok else 'no'} terms={len(seq.terms)}")
    if args.right_factor_of:
        with open(args.right_factor_of) as f:
            M = parse_operator(f.read())
        factor = is_right_factor(L, M)
        print(f"right_factor {'yes' if factor else 'no'}")
        ok = ok and factor
    return 0 if ok else 1


def cmd_gf(args):
    if args.id not in _GF_SYSTEMS:
        print(
            f"error: no transfer-matrix generating function for {args.id}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    num, den = transfer.tm_gf(_GF_SYSTEMS[args.id]())
    print("variables", *num.variables)
    for name, poly in (("num", num), ("den", den)):
        for exps in sorted(poly.terms):
            print(name, ",".join(map(str, exps)), poly.terms[exps])
    return 0


def cmd_check_conjectures(args):
    entry = _entry_or_exit(args.id)
    specs = entry.conjectures()
    if not specs:
        print("no conjectures")
        return 0
    n = args.n
    if entry.generator_cap:
        n = min(n, entry.generator_cap)
    seq = entry.terms(n)
    ok = True
    for spec in specs:
        r = check_conjecture(spec, seq)
        status = "ok" if r.ok else f"FAIL at {r.first_disagreement}"
        print(
            f"{spec.seq_id} {spec.kind} checked {r.checked_from}..{r.checked_to} {status}"
        )
        ok = ok and r.ok
    return 0 if ok else 1


def cmd_report(args):
    ids = args.ids or sorted(REGISTRY)
    rows = run_report(ids, budget=args.budget, bfile_dir=args.bfile_dir)
    sys.stdout.write(report_text(rows))
    return 0 if all(r.error is None for r in rows) else 1


def cmd_fetch(args):
    cfg = config.load_config()
    cache = args.cache_dir or cfg["cache_dir"]
    network = config.as_bool(cfg["network"])
    try:
        seq = bfile.fetch_bfile(args.id, cache, network=network)
    except (bfile.NetworkDisabled, bfile.FetchFailed) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(f"{args.id} offset={seq.offset} terms={len(seq.terms)}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="recbench",
        description="exact recurrence workbench for integer sequences",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("terms", help="print terms from the generator")
    sp.add_argument("id")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(fn=cmd_terms)

    sp = sub.add_parser("oracle", help="print terms from the brute-force oracle")
    sp.add_argument("id")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(fn=cmd_oracle)

    sp = sub.add_parser("guess", help="guess a recurrence operator")
    sp.add_argument("id")
    sp.add_argument("--method", choices=("la", "lll"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--max-order", type=int)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--rescale", help="divisor expression in n")
    sp.set_defaults(fn=cmd_guess)

    sp = sub.add_parser("verify", help="verify an operator file against terms")
    sp.add_argument("id")
    sp.add_argument("--operator", required=True)
    sp.add_argument("--n", type=int, default=30)
    sp.add_argument(
        "--right-factor-of",
        help="also check the operator right-divides this operator file",
    )
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("gf", help="print the transfer-matrix generating function")
    sp.add_argument("id")
    sp.set_defaults(fn=cmd_gf)

    sp = sub.add_parser("check-conjectures", help="check stored formulas")
    sp.add_argument("id")
    sp.add_argument("--n", type=int, default=12)
    sp.set_defaults(fn=cmd_check_conjectures)

    sp = sub.add_parser("report", help="guessing statistics vs. reference")
    sp.add_argument("ids", nargs="*")
    sp.add_argument("--budget", type=int, default=60)
    sp.add_argument("--bfile-dir")
    sp.set_defaults(fn=cmd_report)

    sp = sub.add_parser("fetch", help="fetch and cache a b-file")
    sp.add_argument("id")
    sp.add_argument("--cache-dir")
    sp.set_defaults(fn=cmd_fetch)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
