"""Command line driver: ``andre {count2d,enum2d,counthd,enumhd,verify}``.

Exit codes: 0 on success, 1 on domain errors or failed verification,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import andre2d, andrehd
from .andre2d import IndexOutOfRange, NonIntegerBurnside, max_index
from .andrehd import StateSpaceTooLarge
from .field import FieldError, FiniteField, make_field
from .report import SCHEMA, ClassReport, render_csv, render_table, to_json
from .verify import run_verify, summarize


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


def _indices(field: FiniteField, index: int | None) -> list[int]:
    if index is None:
        return list(range(2, max_index(field.q) + 1))
    andre2d.check_index(field, index)
    return [index]


def cmd_count2d(q: int, index: int | None = None, threads: int = 1) -> list[ClassReport]:
    field = make_field(q)
    out = []
    for i in _indices(field, index):
        t0 = time.perf_counter()
        count = andre2d.count_2d(field, i, threads=threads)
        out.append(ClassReport("count2d", q, count, index=i,
                               group_order=andre2d.xi_group(field).order, elapsed_ms=_ms(t0)))
    return out


def cmd_enum2d(q: int, index: int | None = None) -> list[ClassReport]:
    field = make_field(q)
    out = []
    for i in _indices(field, index):
        t0 = time.perf_counter()
        reps = andre2d.enumerate_2d(field, i)
        rendered = [render_subset(field, rep) for rep in reps]
        out.append(ClassReport("enum2d", q, len(reps), index=i, representatives=rendered,
                               group_order=andre2d.xi_group(field).order, elapsed_ms=_ms(t0)))
    return out


def cmd_counthd(n: int, q: int, threads: int = 1) -> list[ClassReport]:
    field = make_field(q)
    t0 = time.perf_counter()
    count = andrehd.count_hd(n, field, threads=threads)
    return [ClassReport("counthd", q, count, n=n,
                        group_order=2 * (q - 1) * field.e * (n + 1), elapsed_ms=_ms(t0))]


def render_subset(field: FiniteField, positions) -> list:
    """Rendered elements; prime fields sort by integer value, others by power of w."""
    out = [field.render_json(k) for k in positions]
    return sorted(out) if field.is_prime else out


def render_indicator(field: FiniteField, exps) -> list[list]:
    """``[[f, q**r], ...]`` pairs, ordered as in :func:`render_subset`."""
    pairs = [[field.render_json(k), field.q**r] for k, r in enumerate(exps)]
    return sorted(pairs) if field.is_prime else pairs


def cmd_enumhd(n: int, q: int, state_cap: int = andrehd.DEFAULT_STATE_CAP) -> list[ClassReport]:
    field = make_field(q)
    t0 = time.perf_counter()
    e = andrehd.enumerate_hd(n, field, state_cap=state_cap)
    reps = [render_indicator(field, r) for r in e.representatives]
    return [ClassReport("enumhd", q, e.count, n=n, total_orbits=e.total_orbits,
                        representatives=reps, elapsed_ms=_ms(t0))]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="andre", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, threads=False):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--out", type=Path, help="also write JSON reports to this file")
        if threads:
            p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("count2d", help="count 2D André planes by index (Burnside)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--index", type=int)
    common(p, threads=True)

    p = sub.add_parser("enum2d", help="enumerate 2D André plane representatives")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--index", type=int)
    common(p)

    p = sub.add_parser("counthd", help="count non-Desarguesian André planes of PG(2n+1,q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    common(p, threads=True)

    p = sub.add_parser("enumhd", help="enumerate indicator-function orbits of PG(2n+1,q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--state-cap", type=int, default=andrehd.DEFAULT_STATE_CAP)
    common(p)

    p = sub.add_parser("verify", help="cross-check enumeration against counting")
    p.add_argument("--max-q-2d", type=int, default=13)
    p.add_argument("--max-states-hd", type=int, default=10**5)
    p.add_argument("--format", choices=("table", "json"), default="table")
    return ap


def _emit(reports: list[ClassReport], fmt: str, out: Path | None) -> None:
    if fmt == "json":
        sys.stdout.write(to_json(reports) + "\n")
    elif fmt == "csv":
        sys.stdout.write(render_csv(reports))
    else:
        sys.stdout.write(render_table(reports))
    if out is not None:
        out.write_text(to_json(reports) + "\n", encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            checks = run_verify(args.max_q_2d, args.max_states_hd)
            ok = all(c.ok for c in checks)
            if args.format == "json":
                payload = {"schema": SCHEMA, "kind": "verify", "passed": ok,
                           "checks": [vars(c) for c in checks]}
                sys.stdout.write(json.dumps(payload, indent=2) + "\n")
            else:
                sys.stdout.write(summarize(checks))
            return 0 if ok else 1
        if args.command == "count2d":
            reports = cmd_count2d(args.q, args.index, args.threads)
        elif args.command == "enum2d":
            reports = cmd_enum2d(args.q, args.index)
        elif args.command == "counthd":
            reports = cmd_counthd(args.n, args.q, args.threads)
        else:
            reports = cmd_enumhd(args.n, args.q, args.state_cap)
        if args.command in ("counthd", "enumhd") and args.n == 1:
            print("note: n = 1 counts all indices jointly (bridge mode)", file=sys.stderr)
    except StateSpaceTooLarge as exc:
        print(f"error: {exc}\nhint: the counthd subcommand counts without enumerating", file=sys.stderr)
        return 1
    except (FieldError, IndexOutOfRange, NonIntegerBurnside, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(reports, args.format, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
