"""Command-line front end.

    qparity coeffs <target> --order N [--mod2]
    qparity verify identity <id> --order N
    qparity verify theorem <id> --order N
    qparity verify --all --order N [--jobs K]
    qparity scan <id> --mod M --order N [--min-support K]
    qparity enumerate <id> <n> [--bound B]
    qparity residues --alpha A --beta B --mod M [--delta D]

``<target>`` for coeffs is a partition id (c1..c12) or an identity id with an
optional ``:lhs`` / ``:rhs`` suffix.  Every command takes ``--format
json|csv|text``; JSON output is one object per line.

Defaults can be overridden through QPARITY_ORDER, QPARITY_JOBS,
QPARITY_FORMAT, QPARITY_ORACLE_BOUND and QPARITY_MIN_SUPPORT; explicit flags
win.  Exit status: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import identities, partitions, parity
from .families import quad_residues_mod

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    order: int = 2000
    oracle_bound: int = partitions.ORACLE_BOUND
    fmt: str = "json"
    jobs: int = 1
    min_support: int = parity.MIN_SUPPORT
    timing: bool = True

    def __post_init__(self):
        if self.order < 1:
            raise UsageError(f"--order must be >= 1, got {self.order}")
        if self.oracle_bound > self.order:
            raise UsageError(f"oracle bound {self.oracle_bound} exceeds order {self.order}")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.jobs < 1:
            raise UsageError(f"--jobs must be >= 1, got {self.jobs}")
        if self.min_support < 1:
            raise UsageError(f"--min-support must be >= 1, got {self.min_support}")


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def _config(args) -> RunConfig:
    order = args.order if getattr(args, "order", None) is not None else _env_int("QPARITY_ORDER", 2000)
    bound = getattr(args, "bound", None)
    if bound is None:
        # defaults never exceed the order; only an explicit --bound can
        bound = min(_env_int("QPARITY_ORACLE_BOUND", partitions.ORACLE_BOUND), order)
    else:
        order = max(order, bound)  # enumerate has no order of its own
    return RunConfig(
        order=order,
        oracle_bound=bound,
        fmt=args.format or os.environ.get("QPARITY_FORMAT", "json"),
        jobs=getattr(args, "jobs", None) or _env_int("QPARITY_JOBS", 1),
        min_support=getattr(args, "min_support", None) or _env_int("QPARITY_MIN_SUPPORT", parity.MIN_SUPPORT),
        timing=not getattr(args, "no_timing", False),
    )


class Writer:
    """Serializes rows in one format; nothing is interleaved."""

    def __init__(self, fmt, fields, out):
        self.fmt, self.fields, self.out = fmt, fields, out
        if fmt == "csv":
            self._csv = csv.writer(out, lineterminator="\n")
            self._csv.writerow(fields)

    def row(self, rec: dict):
        if self.fmt == "json":
            self.out.write(json.dumps(rec) + "\n")
        elif self.fmt == "csv":
            self._csv.writerow([_csv_cell(rec[f]) for f in self.fields])
        else:
            self.out.write(" ".join(f"{f}={_csv_cell(rec[f])}" for f in self.fields) + "\n")


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    return v


# -- subcommands --

def _resolve_target(target):
    if target in partitions.ids():
        return partitions.get(target).gf, False
    iid, _, side = target.partition(":")
    try:
        entry = identities.get_identity(iid)
    except KeyError as exc:
        known = ", ".join(partitions.ids() + identities.identity_ids())
        raise UsageError(f"unknown target {target!r}; known: {known}") from exc
    side = side or "lhs"
    if side not in ("lhs", "rhs"):
        raise UsageError(f"side must be lhs or rhs, got {side!r}")
    return getattr(entry, side), entry.mode == "mod2"


def cmd_coeffs(args, cfg, out):
    expr, force_mod2 = _resolve_target(args.target)
    mod2 = args.mod2 or force_mod2
    s = identities.expand_side(expr, cfg.order, mod2)
    w = Writer(cfg.fmt, ["n", "value"], out)
    for n, v in enumerate(s.tolist()):
        w.row({"n": n, "value": v})
    return EXIT_OK


def _run_check(task):
    kind, cid, order = task
    rep = identities.verify_identity(cid, order) if kind == "identity" else parity.verify_theorem(cid, order)
    return rep.to_dict()


def cmd_verify(args, cfg, out):
    if args.all:
        if args.kind or args.id:
            raise UsageError("verify --all takes no identity/theorem id")
        tasks = [("identity", i, cfg.order) for i in identities.identity_ids()]
        tasks += [("theorem", t, cfg.order) for t in parity.theorem_ids()]
    else:
        if args.kind not in ("identity", "theorem") or not args.id:
            raise UsageError("usage: verify identity <id> | verify theorem <id> | verify --all")
        known = identities.identity_ids() if args.kind == "identity" else parity.theorem_ids()
        if args.id not in known:
            raise UsageError(f"unknown {args.kind} {args.id!r}; known: {', '.join(known)}")
        tasks = [(args.kind, args.id, cfg.order)]

    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_check, tasks))
    else:
        results = [_run_check(t) for t in tasks]
    if not cfg.timing:
        for r in results:
            r["elapsed_ms"] = None

    fields = ["id", "order", "status", "first_failure", "elapsed_ms"]
    if args.pretty and cfg.fmt == "json":
        summary = {"order": cfg.order, "passed": sum(r["status"] == "pass" for r in results),
                   "failed": sum(r["status"] != "pass" for r in results), "reports": results}
        out.write(json.dumps(summary, indent=2) + "\n")
    else:
        w = Writer(cfg.fmt, fields, out)
        for r in results:
            w.row(r)
    return EXIT_OK if all(r["status"] == "pass" for r in results) else EXIT_FAIL


def cmd_scan(args, cfg, out):
    if args.id not in partitions.ids():
        raise UsageError(f"unknown partition function {args.id!r}; known: {', '.join(partitions.ids())}")
    if args.mod < 2:
        raise UsageError(f"--mod must be >= 2, got {args.mod}")
    p = partitions.gf_parity(args.id, cfg.order)
    residues = parity.scan_zero_progressions(p, args.mod, cfg.min_support)
    w = Writer(cfg.fmt, ["id", "mod", "order", "min_support", "residues"], out)
    w.row({"id": args.id, "mod": args.mod, "order": cfg.order,
           "min_support": cfg.min_support, "residues": residues})
    return EXIT_OK


def cmd_enumerate(args, cfg, out):
    if args.id not in partitions.ids():
        raise UsageError(f"unknown partition function {args.id!r}; known: {', '.join(partitions.ids())}")
    try:
        pairs = partitions.bruteforce_list(args.id, args.n, cfg.oracle_bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if cfg.fmt == "json":
        out.write(partitions.partitions_to_json(args.id, args.n, pairs) + "\n")
    else:
        w = Writer(cfg.fmt, ["id", "n", "j", "parts"], out)
        for p in pairs:
            w.row({"id": args.id, "n": args.n, "j": p.j, "parts": p.parts})
    return EXIT_OK


def cmd_residues(args, cfg, out):
    if args.mod < 2 or args.delta < 1:
        raise UsageError("need --mod >= 2 and --delta >= 1")
    res = quad_residues_mod(args.alpha, args.beta, args.mod, delta=args.delta)
    w = Writer(cfg.fmt, ["alpha", "beta", "delta", "mod", "residues"], out)
    w.row({"alpha": args.alpha, "beta": args.beta, "delta": args.delta, "mod": args.mod, "residues": res})
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    ordered = argparse.ArgumentParser(add_help=False)
    ordered.add_argument("--order", type=int, default=None, help="truncation order N (default 2000)")

    ap = _Parser(prog="qparity", description="Truncated q-series and mod-2 partition congruences.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("coeffs", parents=[common, ordered], help="print series coefficients")
    p.add_argument("target")
    p.add_argument("--mod2", action="store_true")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("verify", parents=[common, ordered], help="verify identities and theorems")
    p.add_argument("kind", nargs="?")
    p.add_argument("id", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--pretty", action="store_true", help="one aggregated JSON document")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common, ordered], help="find all-even progressions mod m")
    p.add_argument("id")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--min-support", type=int, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("enumerate", parents=[common], help="list (j, partition) pairs")
    p.add_argument("id")
    p.add_argument("n", type=int)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("residues", parents=[common], help="residues of (a j^2 + b j)/d mod m")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--delta", type=int, default=1)
    p.set_defaults(func=cmd_residues)
    return ap


def run(argv: Optional[list] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        buf = io.StringIO()
        code = args.func(args, cfg, buf)
    except UsageError as exc:
        err.write(f"qparity: {exc}\n")
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
