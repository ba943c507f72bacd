"""Command-line front end.

Subcommands cover the whole library surface: enumerate (stream every
representation), count (one summary line), table (decade-stepped counts
with floored bound columns), bounds (raw real-valued formulas),
duplicates and cross (groups printed as fully expanded sums).  Exit
status is 0 on success, 1 on usage errors, 2 on overflow or resource
exhaustion.
"""

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from .bounds import bound_estimate, floor_lower_bound, floor_upper_bound
from .counting import count_sums
from .duplicates import (
    duplicate_surplus,
    find_cross_power_duplicates_from_prefixes,
    find_duplicates_from_prefix,
)
from .enumeration import enumerate_chunked
from .prefix import build


class UsageError(ValueError):
    """Bad flags or flag values; maps to exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_x(text: str) -> int:
    """Exact integer from decimal digits or <mantissa>e<exponent> form.

    "1e38" means the exact integer 10^38; no float round-trip happens
    anywhere, so inputs beyond double precision stay exact.
    """
    s = text.strip().lower()
    mantissa, sep, exponent = s.partition("e")
    if sep:
        if mantissa == "":
            mantissa = "1"
        if mantissa.isdigit() and exponent.isdigit():
            return int(mantissa) * 10 ** int(exponent)
    elif s.isdigit():
        return int(s)
    raise UsageError(f"cannot parse {text!r}: expected digits or <int>e<int>")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {text}")
    return value


def _parse_ks(text: str) -> tuple:
    parts = [piece.strip() for piece in text.split(",")]
    if not all(piece.isdigit() for piece in parts) or not parts:
        raise ValueError(f"expected a comma-separated exponent list, got {text!r}")
    return tuple(int(piece) for piece in parts)


@dataclass
class RunConfig:
    command: str
    k: Optional[int] = None
    ks: tuple = ()
    x: Optional[int] = None
    from_x: Optional[int] = None
    to_x: Optional[int] = None
    fmt: str = "tsv"
    out: Optional[str] = None
    workers: int = 1
    distinct: bool = False
    spill_dir: Optional[str] = None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="primesums",
        description="Sums of k-th powers of consecutive primes: "
        "enumerate, count, bound, and search for duplicates.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("tsv", "csv"), default="tsv",
                       help="tsv (no header) or csv (header row)")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write output to PATH instead of stdout")
        return p

    p = add("enumerate", "stream one line per representation: n, start prime")
    p.add_argument("--k", type=_positive_int, required=True, help="exponent")
    p.add_argument("--x", type=parse_x, required=True, help="inclusive bound on n")
    p.add_argument("--workers", type=_positive_int, default=1,
                   help="concurrent chunks; output is identical for any count")

    p = add("count", "one summary line: x, k, count, max run length, primes")
    p.add_argument("--k", type=_positive_int, required=True, help="exponent")
    p.add_argument("--x", type=parse_x, required=True, help="inclusive bound on n")
    p.add_argument("--distinct", action="store_true",
                   help="append the distinct-value count (runs the duplicate scan)")
    p.add_argument("--spill-dir", metavar="PATH", default=None,
                   help="directory for temporary sort spills")

    p = add("table", "decade rows from --from to --to: x, count, upper, lower")
    p.add_argument("--k", type=_positive_int, required=True, help="exponent")
    p.add_argument("--from", dest="from_x", type=parse_x, required=True,
                   help="first x (decade-stepped upward)")
    p.add_argument("--to", dest="to_x", type=parse_x, required=True,
                   help="last x (inclusive)")

    p = add("bounds", "raw bound formulas at one point: constant, main terms")
    p.add_argument("--k", type=_positive_int, required=True, help="exponent")
    p.add_argument("--x", type=parse_x, required=True, help="evaluation point")

    p = add("duplicates", "values with several runs for one exponent, expanded")
    p.add_argument("--k", type=_positive_int, required=True, help="exponent")
    p.add_argument("--x", type=parse_x, required=True, help="inclusive bound on n")
    p.add_argument("--workers", type=_positive_int, default=1,
                   help="accepted for symmetry; the sort is single-threaded")
    p.add_argument("--spill-dir", metavar="PATH", default=None,
                   help="directory for temporary sort spills")

    p = add("cross", "values representable under several exponents, expanded")
    p.add_argument("--ks", type=_parse_ks, required=True,
                   help="comma-separated exponents, e.g. 2,3")
    p.add_argument("--x", type=parse_x, required=True, help="inclusive bound on n")
    p.add_argument("--spill-dir", metavar="PATH", default=None,
                   help="directory for temporary sort spills")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        k=getattr(args, "k", None),
        ks=tuple(getattr(args, "ks", ()) or ()),
        x=getattr(args, "x", None),
        from_x=getattr(args, "from_x", None),
        to_x=getattr(args, "to_x", None),
        fmt=getattr(args, "format", "tsv"),
        out=getattr(args, "out", None),
        workers=getattr(args, "workers", 1),
        distinct=getattr(args, "distinct", False),
        spill_dir=getattr(args, "spill_dir", None),
    )


def _sep(cfg: RunConfig) -> str:
    return "\t" if cfg.fmt == "tsv" else ","


def _header(cfg: RunConfig, sink, names) -> None:
    if cfg.fmt == "csv":
        sink.write(",".join(names) + "\n")


def _run_enumerate(cfg: RunConfig, sink) -> None:
    ps = build(cfg.x, cfg.k)
    sep = _sep(cfg)
    _header(cfg, sink, ("n", "start_prime"))
    for rep in enumerate_chunked(ps, cfg.workers):
        sink.write(f"{rep.n}{sep}{rep.start_prime}\n")


def _run_count(cfg: RunConfig, sink) -> None:
    ps = build(cfg.x, cfg.k)
    report = count_sums(ps)
    names = list(report._fields)
    values = list(report)
    if cfg.distinct:
        groups = find_duplicates_from_prefix(ps, spill_dir=cfg.spill_dir)
        names.append("distinct")
        values.append(report.count - duplicate_surplus(groups))
    sep = _sep(cfg)
    _header(cfg, sink, names)
    sink.write(sep.join(str(v) for v in values) + "\n")


def _run_table(cfg: RunConfig, sink) -> None:
    if cfg.from_x > cfg.to_x:
        raise UsageError(f"--from {cfg.from_x} exceeds --to {cfg.to_x}")
    sep = _sep(cfg)
    _header(cfg, sink, ("x", "count", "upper", "lower"))
    x = cfg.from_x
    while x <= cfg.to_x:
        report = count_sums(build(x, cfg.k))
        row = (x, report.count, floor_upper_bound(x, cfg.k), floor_lower_bound(x, cfg.k))
        sink.write(sep.join(str(v) for v in row) + "\n")
        x *= 10


def _run_bounds(cfg: RunConfig, sink) -> None:
    est = bound_estimate(cfg.x, cfg.k)
    names = ["x", "k", "c_k", "upper", "lower", "m_estimate"]
    values = [est.x, est.k, est.c_k, est.upper, est.lower, est.m_estimate]
    if est.tws_upper is not None:
        names.append("tws_upper")
        values.append(est.tws_upper)
    sep = _sep(cfg)
    _header(cfg, sink, names)
    sink.write(sep.join(str(v) for v in values) + "\n")


def _expanded_sum(member, primes) -> str:
    run = primes[member.start_index : member.start_index + member.length]
    return " + ".join(f"{p}^{member.k}" for p in run)


def _write_groups(groups, ps_by_k, sink) -> None:
    # one line per group: n = first expansion = second expansion = ...
    for group in groups:
        parts = [str(group.n)]
        for member in group.members:
            parts.append(_expanded_sum(member, ps_by_k[member.k].primes.primes))
        sink.write(" = ".join(parts) + "\n")


def _run_duplicates(cfg: RunConfig, sink) -> None:
    ps = build(cfg.x, cfg.k)
    groups = find_duplicates_from_prefix(ps, spill_dir=cfg.spill_dir)
    _write_groups(groups, {cfg.k: ps}, sink)


def _run_cross(cfg: RunConfig, sink) -> None:
    ks = sorted(set(cfg.ks))
    if len(ks) < 2:
        raise UsageError(f"--ks needs at least two distinct exponents, got {cfg.ks}")
    ps_by_k = {k: build(cfg.x, k) for k in ks}
    groups = find_cross_power_duplicates_from_prefixes(ps_by_k, spill_dir=cfg.spill_dir)
    _write_groups(groups, ps_by_k, sink)


_COMMANDS = {
    "enumerate": _run_enumerate,
    "count": _run_count,
    "table": _run_table,
    "bounds": _run_bounds,
    "duplicates": _run_duplicates,
    "cross": _run_cross,
}


def run(config: RunConfig) -> int:
    command = _COMMANDS.get(config.command)
    if command is None:
        raise UsageError(f"unknown command {config.command!r}")
    if config.out is not None:
        with open(config.out, "w", encoding="ascii") as sink:
            command(config, sink)
    else:
        command(config, sys.stdout)
        sys.stdout.flush()
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(config_from_args(args))
    except BrokenPipeError:
        # downstream closed the pipe (enumerate | head is normal use)
        return 0
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except (OverflowError, MemoryError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
