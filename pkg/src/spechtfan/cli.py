"""Command-line interface.

Exit codes: 0 all claims verified, 1 usage or capacity error, 2 a checked
identity failed on concrete data.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .combinatorics import Partition, VariableOrder, enumerate_partitions, min_gap_k
from .errors import CapacityError, TheoremViolationError
from .fan import enumerate_fan, theorem_count
from .oracle import DEFAULT_ORACLE_LIMIT, certify_groebner, marked_basis
from .polytope import pnk_vertices
from .reporting import rows_to_csv, rows_to_json
from .specht import initial_ideal, lex_groebner_generators
from .verify import SKIP_GROUPS, run_verification

__all__ = ["main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; this tool reserves 2 for real failures."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _add_output(p) -> None:
    p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="spechtfan", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="theorem count vs brute-force distinct ideal count")
    p.add_argument("--lambda", dest="lam", metavar="PARTS", help='partition, e.g. "2,2"')
    p.add_argument("--n-max", dest="n_max", type=int, help="run every shape with up to n boxes")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("initial-ideal", help="minimal generators of one initial ideal")
    p.add_argument("--lambda", dest="lam", metavar="PARTS", required=True)
    p.add_argument("--sigma", metavar="PERM", required=True, help='one-line order, e.g. "2,3,1"')
    _add_output(p)
    p.set_defaults(func=cmd_initial_ideal)

    p = sub.add_parser("fan", help="all initial ideals grouped by variable order")
    p.add_argument("--lambda", dest="lam", metavar="PARTS", required=True)
    p.add_argument("--jobs", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("polytope", help="vertex set of the predicted state polytope")
    p.add_argument("--lambda", dest="lam", metavar="PARTS", required=True)
    _add_output(p)
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("verify", help="run the property suite and report rows")
    p.add_argument("--n-max", dest="n_max", type=int, default=5)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--skip", action="append", choices=SKIP_GROUPS, default=[])
    p.add_argument("--jobs", type=int, default=1)
    _add_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="certify one lex basis by S-pair reduction")
    p.add_argument("--lambda", dest="lam", metavar="PARTS", required=True)
    p.add_argument("--sigma", metavar="PERM", help="defaults to the identity order")
    _add_output(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def cmd_count(args) -> int:
    if args.lam:
        lams = [Partition.parse(args.lam)]
    elif args.n_max:
        if args.n_max < 2:
            raise ValueError("--n-max must be at least 2")
        lams = [
            lam
            for n in range(2, args.n_max + 1)
            for lam in enumerate_partitions(n)
            if lam.m >= 2
        ]
    else:
        raise ValueError("count needs --lambda or --n-max")
    records = []
    violation = False
    for lam in lams:
        want = theorem_count(lam)
        try:
            brute = enumerate_fan(lam, jobs=args.jobs).distinct_count
            agree = brute == want
        except CapacityError as exc:
            print(f"warning: {exc}; brute-force count skipped", file=sys.stderr)
            brute = None
            agree = None
        if agree is False:
            violation = True
        records.append((lam, want, brute, agree))
    if args.format == "json":
        text = _json_text(
            [
                {
                    "n": lam.n,
                    "lambda": list(lam.parts),
                    "k": min_gap_k(lam),
                    "theorem_count": want,
                    "brute_force_count": brute,
                    "agree": agree,
                }
                for lam, want, brute, agree in records
            ]
        )
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "lambda", "k", "theorem_count", "brute_force_count", "agree"])
        for lam, want, brute, agree in records:
            writer.writerow(
                [
                    lam.n,
                    str(lam),
                    min_gap_k(lam),
                    want,
                    "" if brute is None else brute,
                    "" if agree is None else ("true" if agree else "false"),
                ]
            )
        text = buf.getvalue()
    _write(text, args.output)
    return 2 if violation else 0


def cmd_initial_ideal(args) -> int:
    lam = Partition.parse(args.lam)
    order = VariableOrder.parse(args.sigma)
    ideal = initial_ideal(lam, order)
    _write(_json_text(ideal.to_json()), args.output)
    return 0


def cmd_fan(args) -> int:
    lam = Partition.parse(args.lam)
    fan = enumerate_fan(lam, jobs=args.jobs)
    _write(_json_text(fan.to_json()), args.output)
    return 0


def cmd_polytope(args) -> int:
    lam = Partition.parse(args.lam)
    k = min_gap_k(lam)
    ps = pnk_vertices(lam.n, k)
    _write(_json_text({"n": lam.n, "k": k, "vertices": ps.to_json()}), args.output)
    return 0


def cmd_verify(args) -> int:
    rows = run_verification(args.n_max, seed=args.seed, skip=args.skip, jobs=args.jobs)
    text = rows_to_json(rows) if args.format == "json" else rows_to_csv(rows)
    _write(text, args.output)
    return 0 if all(r.passed for r in rows) else 2


def cmd_oracle(args) -> int:
    lam = Partition.parse(args.lam)
    if lam.n > DEFAULT_ORACLE_LIMIT:
        raise ValueError(f"n={lam.n} exceeds the oracle limit {DEFAULT_ORACLE_LIMIT}")
    order = VariableOrder.parse(args.sigma) if args.sigma else VariableOrder.identity(lam.n)
    basis = marked_basis(lex_groebner_generators(lam, order).polynomials(), order)
    cert = certify_groebner(basis)
    obj = {"check": "certify-groebner", "lambda": list(lam.parts), "sigma": list(order.sigma)}
    obj.update(cert.to_json())
    _write(_json_text(obj), args.output)
    return 0 if cert.passed else 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 2
