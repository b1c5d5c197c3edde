"""Command-line front end: ``measure``, ``distance``, ``sweep`` and ``verify``.

Input files are UTF-8 comma-separated text with a header row.  Lines
starting with ``#`` and blank lines are ignored.  ``measure`` needs
``mu,nu`` columns and ``distance`` needs ``mu1,nu1,mu2,nu2``; an ``id``
column is optional and is carried through to the output.

Exit status: 0 on success (or all properties passing), 1 when ``verify``
reports a failure, 2 on usage, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import logging
import math
import sys
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence, TextIO

from .core import DomainViolation, IfsPair, ambiguity, incompleteness, step_divides_one, triangle_grid
from .distance import l1_distance, distance
from .entropy import entropy, entropy_normalized, fuzziness, incompleteness_entropy
from .measures import certainty, score, uncertainty
from . import verify as verify_mod

logger = logging.getLogger("ifsinfo")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

MEASURES: dict[str, Callable[[IfsPair], float]] = {
    "g": certainty,
    "r": score,
    "e": uncertainty,
    "E_S": entropy,
    "E_SN": entropy_normalized,
    "E_A": fuzziness,
    "E_U": incompleteness_entropy,
    "alpha": ambiguity,
    "pi": incompleteness,
}


class ParseError(ValueError):
    """Malformed input; the message carries the offending line number."""


class UsageError(ValueError):
    pass


def fmt(x: float) -> str:
    """Decimal text at 12 significant digits (``-0`` is printed as ``0``)."""
    return f"{x + 0.0:.12g}"


def clamp_pair(mu: float, nu: float) -> IfsPair:
    """Project raw reals onto the admissible triangle.

    Same policy as :class:`IfsPair` construction but without the slack
    limit: clip each coordinate into [0, 1], then split any excess of
    ``mu + nu`` over one equally between the two.
    """
    if math.isnan(mu) or math.isnan(nu):
        raise DomainViolation("NaN cannot be projected onto the triangle")
    mu, nu = min(max(mu, 0.0), 1.0), min(max(nu, 0.0), 1.0)
    excess = mu + nu - 1.0
    if excess > 0.0:
        mu, nu = mu - excess / 2.0, nu - excess / 2.0
    return IfsPair(mu, nu)


@dataclass(frozen=True)
class InputRecord:
    line: int
    id: Optional[str]
    values: tuple[float, ...]


@dataclass(frozen=True)
class SweepConfig:
    step: float
    measures: tuple[str, ...] = tuple(MEASURES)
    output_path: Optional[str] = None

    def __post_init__(self) -> None:
        if not 0.0 < self.step <= 0.5:
            raise UsageError(f"--step must lie in (0, 0.5], got {self.step}")
        if not step_divides_one(self.step):
            raise UsageError(f"--step {self.step} does not divide 1")
        unknown = [m for m in self.measures if m not in MEASURES]
        if unknown:
            raise UsageError(f"unknown measure(s): {', '.join(unknown)}")


def read_records(stream: TextIO, columns: Sequence[str]) -> list[InputRecord]:
    """Parse a headed CSV stream, keeping ``columns`` (and ``id`` if present)."""
    header: Optional[list[str]] = None
    positions: list[int] = []
    id_pos: Optional[int] = None
    records: list[InputRecord] = []
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([text]))]
        if header is None:
            header = fields
            missing = [c for c in columns if c not in header]
            if missing:
                raise ParseError(f"line {lineno}: header lacks column(s) {', '.join(missing)}")
            positions = [header.index(c) for c in columns]
            id_pos = header.index("id") if "id" in header else None
            continue
        if len(fields) != len(header):
            raise ParseError(
                f"line {lineno}: expected {len(header)} fields, found {len(fields)}"
            )
        try:
            values = tuple(float(fields[i]) for i in positions)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        records.append(
            InputRecord(lineno, fields[id_pos] if id_pos is not None else None, values)
        )
    if header is None:
        raise ParseError("input has no header row")
    return records


def _to_pair(mu: float, nu: float, strict: bool, lineno: int) -> tuple[IfsPair, bool]:
    try:
        p = IfsPair(mu, nu)
    except DomainViolation as exc:
        if strict:
            raise DomainViolation(f"line {lineno}: {exc}") from None
        try:
            p = clamp_pair(mu, nu)
        except DomainViolation as exc2:
            raise DomainViolation(f"line {lineno}: {exc2}") from None
    return p, (p.mu != mu or p.nu != nu)


def _parse_measures(text: Optional[str]) -> tuple[str, ...]:
    if not text:
        return tuple(MEASURES)
    names = tuple(n.strip() for n in text.split(",") if n.strip())
    unknown = [n for n in names if n not in MEASURES]
    if unknown:
        raise UsageError(
            f"unknown measure(s): {', '.join(unknown)}; choose from {', '.join(MEASURES)}"
        )
    return names


@contextlib.contextmanager
def _open_out(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None
    with fh:
        yield fh


@contextlib.contextmanager
def _open_in(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdin
        return
    try:
        fh = open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    with fh:
        yield fh


def _write_mean(out: TextIO, names: Sequence[str], rows: list[list[float]]) -> None:
    if not rows:
        return
    means = [math.fsum(col) / len(rows) for col in zip(*rows)]
    body = ", ".join(f"{n}={fmt(m)}" for n, m in zip(names, means))
    out.write(f"# mean over {len(rows)} rows (set-level convenience, not a per-pair measure): {body}\n")


def cmd_measure(args: argparse.Namespace) -> int:
    names = _parse_measures(args.measures)
    with _open_in(args.input) as fh:
        records = read_records(fh, ("mu", "nu"))
    has_id = any(r.id is not None for r in records)
    table = []
    for rec in records:
        p, clamped = _to_pair(*rec.values, strict=args.strict, lineno=rec.line)
        table.append((rec, p, clamped, [MEASURES[n](p) for n in names]))

    with _open_out(args.output) as out:
        writer = csv.writer(out, lineterminator="\n")
        header = (["id"] if has_id else []) + ["mu", "nu", *names]
        writer.writerow(header + ([] if args.strict else ["clamped"]))
        for rec, p, clamped, values in table:
            row = ([rec.id or ""] if has_id else []) + [fmt(p.mu), fmt(p.nu)]
            row += [fmt(v) for v in values]
            writer.writerow(row + ([] if args.strict else [int(clamped)]))
        if args.aggregate == "mean":
            _write_mean(out, names, [values for *_, values in table])
    return EXIT_OK


def cmd_distance(args: argparse.Namespace) -> int:
    with _open_in(args.input) as fh:
        records = read_records(fh, ("mu1", "nu1", "mu2", "nu2"))
    has_id = any(r.id is not None for r in records)
    table = []
    for rec in records:
        p, c1 = _to_pair(*rec.values[:2], strict=args.strict, lineno=rec.line)
        q, c2 = _to_pair(*rec.values[2:], strict=args.strict, lineno=rec.line)
        d = distance(p, q)
        table.append((rec, p, q, c1 or c2, [l1_distance(p, q), d, 1.0 - d]))

    names = ["l1", "D", "S"]
    with _open_out(args.output) as out:
        writer = csv.writer(out, lineterminator="\n")
        header = (["id"] if has_id else []) + ["mu1", "nu1", "mu2", "nu2", *names]
        writer.writerow(header + ([] if args.strict else ["clamped"]))
        for rec, p, q, clamped, values in table:
            row = ([rec.id or ""] if has_id else []) + [fmt(x) for x in (p.mu, p.nu, q.mu, q.nu)]
            row += [fmt(v) for v in values]
            writer.writerow(row + ([] if args.strict else [int(clamped)]))
        if args.aggregate == "mean":
            _write_mean(out, names, [values for *_, values in table])
    return EXIT_OK


def sweep_rows(config: SweepConfig) -> list[list[float]]:
    """``[mu, nu, *measures]`` for every lattice point, row-major."""
    fns = [MEASURES[n] for n in config.measures]
    return [[p.mu, p.nu, *(f(p) for f in fns)] for p in triangle_grid(config.step)]


def cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(args.step, _parse_measures(args.measures), args.output)
    rows = sweep_rows(config)
    with _open_out(config.output_path) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["mu", "nu", *config.measures])
        writer.writerows([fmt(x) for x in row] for row in rows)
    return EXIT_OK


def _parse_tolerances(items: Sequence[str]) -> dict[str, float]:
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--tolerance expects NAME=VALUE, got {item!r}")
        if name not in verify_mod.DEFAULT_TOLERANCES:
            raise UsageError(
                f"unknown tolerance {name!r}; known: {', '.join(verify_mod.DEFAULT_TOLERANCES)}"
            )
        try:
            out[name] = float(value)
        except ValueError:
            raise UsageError(f"tolerance {name} is not a number: {value!r}") from None
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    tolerances = _parse_tolerances(args.tolerance)
    results = verify_mod.run_all(
        seed=args.seed,
        tolerances=tolerances,
        monotone_samples=args.monotone_samples,
        gradient_points_count=args.gradient_points,
        violation_step=args.violation_step,
    )
    with _open_out(args.output) as out:
        out.write(verify_mod.format_report(results, args.seed) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifsinfo",
        description="Measures of information for intuitionistic fuzzy pairs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        if with_input:
            p.add_argument("--input", "-i", metavar="PATH", help="input CSV (default: stdin)")
        p.add_argument("--output", "-o", metavar="PATH", help="output file (default: stdout)")

    p = sub.add_parser("measure", help="per-pair measure table")
    io_flags(p)
    p.add_argument("--strict", action="store_true", help="reject out-of-range rows instead of clamping")
    p.add_argument("--measures", metavar="LIST", help=f"comma-separated subset of {','.join(MEASURES)}")
    p.add_argument("--aggregate", choices=["mean"], help="append the column means as a comment line")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("distance", help="l1, normalized distance and similarity per row")
    io_flags(p)
    p.add_argument("--strict", action="store_true", help="reject out-of-range rows instead of clamping")
    p.add_argument("--aggregate", choices=["mean"], help="append the column means as a comment line")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("sweep", help="measures over a lattice of the admissible triangle")
    io_flags(p, with_input=False)
    p.add_argument("--step", type=float, default=0.01, help="lattice spacing; must divide 1 (default 0.01)")
    p.add_argument("--measures", metavar="LIST", help=f"comma-separated subset of {','.join(MEASURES)}")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run every property suite and report pass/fail")
    io_flags(p, with_input=False)
    p.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    p.add_argument("--tolerance", action="append", default=[], metavar="NAME=VALUE",
                   help="override one tolerance; repeatable")
    p.add_argument("--monotone-samples", type=int, default=verify_mod.MONOTONE_SAMPLES)
    p.add_argument("--gradient-points", type=int, default=verify_mod.GRADIENT_POINTS)
    p.add_argument("--violation-step", type=float, default=verify_mod.VIOLATION_STEP)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, DomainViolation, UsageError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
