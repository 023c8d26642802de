"""Command-line front end: compute, inspect, verify, and export.

Exit codes: 0 success, 1 usage or parse problem, 2 unsupported shape.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .battery import run_battery
from .partitions import format_partition, parse_partition
from .schur import SchurExpansion
from .stats import full_type, stat_pair, unimodal_profile, is_unimodal
from .tableaux import parse_tableau, charge
from .vertex import UnsupportedShapeError, hall_littlewood, kostka, macdonald


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for unsupported shapes
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _partition(text: str):
    lam = parse_partition(text)
    if not lam:
        raise ValueError(f"empty partition {text!r}")
    return lam


def _word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    if "," in text:
        letters = tuple(int(piece) for piece in text.split(","))
    else:
        letters = tuple(int(ch) for ch in text)
    if any(x < 1 for x in letters):
        raise ValueError(f"word letters must be positive: {text!r}")
    return letters


def _print_expansion(mu, expansion: SchurExpansion, fmt: str, out) -> None:
    if fmt == "json":
        payload = {"mu": list(mu), "expansion": expansion.to_json()}
        print(json.dumps(payload, indent=2), file=out)
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["shape", "coefficient"])
        for lam, coeff in expansion.terms():
            writer.writerow([format_partition(lam), str(coeff)])
    else:
        mu_text = format_partition(mu)
        for lam, coeff in expansion.terms():
            print(f"K_{{({format_partition(lam)}),({mu_text})}} &= {coeff.latex()} \\\\", file=out)


def _cmd_macdonald(args) -> int:
    mu = _partition(args.mu)
    _print_expansion(mu, macdonald(mu), args.format, sys.stdout)
    return 0


def _cmd_hl(args) -> int:
    mu = _partition(args.mu)
    _print_expansion(mu, hall_littlewood(mu), args.format, sys.stdout)
    return 0


def _cmd_kostka(args) -> int:
    lam, mu = _partition(args.lam), _partition(args.mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: |{format_partition(lam)}| != |{format_partition(mu)}|")
    coeff = kostka(lam, mu)
    if args.format == "json":
        payload = {"lambda": list(lam), "mu": list(mu), "coefficient": coeff.to_terms()}
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["q_power", "t_power", "coefficient"])
        for (dq, dt), c in coeff.terms():
            writer.writerow([dq, dt, c])
    else:
        print(f"K_{{({format_partition(lam)}),({format_partition(mu)})}} &= {coeff.latex()} \\\\")
    return 0


def _cmd_charge(args) -> int:
    print(charge(_word(args.word)))
    return 0


def _cmd_stats(args) -> int:
    a, b = stat_pair(_partition(args.mu), parse_tableau(args.tableau))
    print(f"a={a} b={b}")
    return 0


def _cmd_type(args) -> int:
    kind = full_type(_partition(args.mu), parse_tableau(args.tableau))
    print(",".join(kind.blocks))
    return 0


def _cmd_unimodal(args) -> int:
    profile = unimodal_profile(_partition(args.mu))
    for kind, seq in profile.items():
        verdict = "unimodal" if is_unimodal(seq) else "not-unimodal"
        print(f"{kind.text()} {','.join(map(str, seq))} {verdict}")
    return 0


def _cmd_verify(args) -> int:
    if args.max_n > 8:
        print("error: max-n ≤ 8", file=sys.stderr)
        return 1
    if args.oracle_degree > 6:
        print("error: oracle-degree ≤ 6", file=sys.stderr)
        return 1
    report = run_battery(
        max_n=args.max_n,
        oracle_degree=args.oracle_degree,
        n_points=args.points,
        seed=args.seed,
        jobs=args.jobs,
    )
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return 0 if all(entry["status"] == "pass" for entry in report) else 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="qtkostka", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    p = sub.add_parser("macdonald", help="Schur expansion of H_mu[X;q,t]")
    p.add_argument("--mu", required=True)
    with_format(p)
    p.set_defaults(handler=_cmd_macdonald)

    p = sub.add_parser("kostka", help="one coefficient K_{lambda,mu}(q,t)")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    with_format(p)
    p.set_defaults(handler=_cmd_kostka)

    p = sub.add_parser("hl", help="Schur expansion of H_mu[X;t]")
    p.add_argument("--mu", required=True)
    with_format(p)
    p.set_defaults(handler=_cmd_hl)

    p = sub.add_parser("charge", help="charge of a word")
    p.add_argument("--word", required=True)
    p.set_defaults(handler=_cmd_charge)

    p = sub.add_parser("stats", help="the statistics a, b of a standard tableau")
    p.add_argument("--mu", required=True)
    p.add_argument("--tableau", required=True)
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("type", help="block types of a standard tableau")
    p.add_argument("--mu", required=True)
    p.add_argument("--tableau", required=True)
    p.set_defaults(handler=_cmd_type)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--oracle-degree", type=int, default=6)
    p.add_argument("--points", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("unimodal", help="coefficient profile per tableau type class")
    p.add_argument("--mu", required=True)
    p.set_defaults(handler=_cmd_unimodal)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except UnsupportedShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
