"""Command-line front end.

Subcommands: classify | scan | blowup | h0 | frobenius.  Exit codes:
0 success / agreement, 1 oracle disagreement, 2 validation failure,
3 output I/O failure.  RSK_THREADS caps scan parallelism (0 = auto).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .blowups import (
    BlownUpSurface,
    BlowupScenario,
    BlowupStep,
    blow_up,
    certify_big_anticanonical,
    check_class,
)
from .bundles import Curve, SplitBundle, frobenius_pullback, hn_data, min_destabilizing_e
from .sections import Verdict, growth_classify, h0_class_interval, volume
from .surfaces import NumClass, RuledSurface, big_test, canonical_class, nef_test, pseff_test

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{what}: expected a comma-separated list of integers, got {text!r}")


def _parse_class(text: str) -> NumClass:
    parts = _parse_int_list(text, "--class")
    if len(parts) != 2:
        raise ValueError(f"--class: expected two integers a,b, got {text!r}")
    return NumClass(parts[0], parts[1])


def _parse_range(text: str, what: str) -> range:
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise ValueError(f"{what}: expected an inclusive range lo:hi, got {text!r}")
    if lo > hi:
        raise ValueError(f"{what}: empty range {text!r}")
    return range(lo, hi + 1)


def _bool_str(flag: bool) -> str:
    return "true" if flag else "false"


def _build_surface(args: argparse.Namespace) -> RuledSurface:
    degrees = _parse_int_list(args.degrees, "--degrees")
    return RuledSurface(Curve(args.genus, args.char), SplitBundle(degrees))


# ---------------------------------------------------------------- classify

def cmd_classify(args: argparse.Namespace, out) -> int:
    surface = _build_surface(args)
    bundle = surface.bundle
    hn = hn_data(bundle)
    k = canonical_class(surface)
    cls = args.num_class if args.num_class is not None else -k
    lines = [
        f"genus: {surface.curve.genus}",
        f"characteristic: {surface.curve.characteristic}",
        f"degrees: {','.join(str(d) for d in bundle.degrees)}",
        f"slope: {bundle.slope}",
        "hn_blocks: " + " ".join(f"{slope}^{mult}" for slope, mult in hn.blocks),
        f"mu_max: {hn.mu_max}",
        f"mu_min: {hn.mu_min}",
        f"semistable: {_bool_str(hn.semistable)}",
        f"canonical_class: {k}",
        f"class: {cls}",
        f"big: {_bool_str(big_test(surface, cls))}",
        f"pseff: {_bool_str(pseff_test(surface, cls))}",
    ]
    if surface.rank == 2:
        lines.append(f"nef: {_bool_str(nef_test(surface, cls))}")
    lines.append(f"volume: {volume(surface, cls)}")
    if surface.curve.characteristic > 0 and bundle.rank == 2:
        e = min_destabilizing_e(surface.curve, bundle)
        lines.append(f"min_destabilizing_e: {'none' if e is None else e}")
    print("\n".join(lines), file=out)
    return EXIT_OK


# -------------------------------------------------------------------- scan

@dataclass(frozen=True)
class ScanSpec:
    """Finite parameter grid for an oracle-agreement scan."""

    genus_range: range
    characteristics: tuple[int, ...]
    d1_range: range
    d2_range: range
    d3_range: Optional[range]
    num_class: Optional[NumClass]
    m_max: int

    def __post_init__(self) -> None:
        if self.m_max < 8:
            raise ValueError("--m-max must be at least 8")
        if not self.characteristics:
            raise ValueError("--chars must be non-empty")
        for r, name in ((self.genus_range, "--genus-range"),
                        (self.d1_range, "--d1-range"),
                        (self.d2_range, "--d2-range")):
            if len(r) == 0:
                raise ValueError(f"{name} is empty")

    def points(self) -> list[tuple[int, int, tuple[int, ...]]]:
        rows = []
        for g in self.genus_range:
            for p in sorted(self.characteristics):
                for d1 in self.d1_range:
                    for d2 in self.d2_range:
                        if d2 > d1:
                            continue
                        if self.d3_range is None:
                            rows.append((g, p, (d1, d2)))
                        else:
                            for d3 in self.d3_range:
                                if d3 > d2:
                                    continue
                                rows.append((g, p, (d1, d2, d3)))
        if not rows:
            raise ValueError("scan grid is empty (degree ranges never satisfy d1 >= d2 >= d3)")
        return rows


def _scan_row(job: tuple[int, int, tuple[int, ...], Optional[tuple[int, int]], int]) -> str:
    g, p, degrees, cls_ab, m_max = job
    surface = RuledSurface(Curve(g, p), SplitBundle(degrees))
    cls = NumClass(*cls_ab) if cls_ab is not None else -canonical_class(surface)
    big = big_test(surface, cls)
    vol = volume(surface, cls)
    report = growth_classify(surface, cls, m_max)
    verdict = report.verdict
    agree = (
        (big and verdict is Verdict.BIG_CERTIFIED)
        or (not big and verdict is Verdict.NOT_BIG_CERTIFIED)
        or (verdict is Verdict.INCONCLUSIVE and vol == 0)
    )
    fields = [g, p, *degrees, cls.a, cls.b, _bool_str(big), verdict.value, vol,
              _bool_str(agree)]
    return "\t".join(str(x) for x in fields)


def _worker_count() -> int:
    raw = os.environ.get("RSK_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"RSK_THREADS must be an integer, got {raw!r}")
    if n < 0:
        raise ValueError("RSK_THREADS must be non-negative")
    if n == 0:
        return os.cpu_count() or 1
    return n


def cmd_scan(args: argparse.Namespace, out) -> int:
    spec = ScanSpec(
        genus_range=_parse_range(args.genus_range, "--genus-range"),
        characteristics=_parse_int_list(args.chars, "--chars"),
        d1_range=_parse_range(args.d1_range, "--d1-range"),
        d2_range=_parse_range(args.d2_range, "--d2-range"),
        d3_range=_parse_range(args.d3_range, "--d3-range") if args.d3_range else None,
        num_class=args.num_class,
        m_max=args.m_max,
    )
    cls_ab = (spec.num_class.a, spec.num_class.b) if spec.num_class else None
    jobs = [(g, p, degs, cls_ab, spec.m_max) for g, p, degs in spec.points()]

    workers = _worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_row, jobs, chunksize=8))
    else:
        rows = [_scan_row(job) for job in jobs]

    deg_cols = ["d1", "d2"] + (["d3"] if spec.d3_range is not None else [])
    header = "\t".join(["genus", "char", *deg_cols, "a", "b", "big", "verdict",
                        "volume", "agree"])
    print(header, file=out)
    for row in rows:
        print(row, file=out)
    disagreement = any(row.rsplit("\t", 1)[1] == "false" for row in rows)
    return EXIT_DISAGREE if disagreement else EXIT_OK


# ------------------------------------------------------------------ blowup

def _require(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise ValueError(f"{where}.{key}: required field missing")
    value = obj[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise ValueError(f"{where}.{key}: expected an integer")
    if kind is bool and not isinstance(value, bool):
        raise ValueError(f"{where}.{key}: expected a boolean")
    if kind is list and not isinstance(value, list):
        raise ValueError(f"{where}.{key}: expected a list")
    if kind is dict and not isinstance(value, dict):
        raise ValueError(f"{where}.{key}: expected an object")
    return value


def load_scenario(path: str) -> BlowupScenario:
    """Parse and validate a scenario JSON file against the fixed schema."""
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as err:
            raise ValueError(f"{path}: not valid JSON ({err})")
    if not isinstance(raw, dict):
        raise ValueError("scenario: expected a JSON object")
    base = _require(raw, "base", dict, "scenario")
    genus = _require(base, "genus", int, "scenario.base")
    characteristic = _require(base, "characteristic", int, "scenario.base")
    degrees = _require(base, "degrees", list, "scenario.base")
    if not all(isinstance(d, int) and not isinstance(d, bool) for d in degrees):
        raise ValueError("scenario.base.degrees: expected a list of integers")
    budget = _require(raw, "budget_class", dict, "scenario")
    a = _require(budget, "a", int, "scenario.budget_class")
    b = _require(budget, "b", int, "scenario.budget_class")
    steps_raw = _require(raw, "steps", list, "scenario")
    steps = []
    for i, step in enumerate(steps_raw):
        if not isinstance(step, dict):
            raise ValueError(f"scenario.steps[{i}]: expected an object")
        flag = _require(step, "on_strict_transform", bool, f"scenario.steps[{i}]")
        steps.append(BlowupStep(flag))
    surface = RuledSurface(Curve(genus, characteristic), SplitBundle(tuple(degrees)))
    return BlowupScenario(surface, NumClass(a, b), tuple(steps))


def cmd_blowup(args: argparse.Namespace, out) -> int:
    scenario = load_scenario(args.scenario)
    cert = certify_big_anticanonical(scenario)
    g = scenario.base.curve.genus
    lines = [
        f"certified: {_bool_str(cert.certified)}",
        f"big_part: {cert.big_part}",
        f"big_part_is_big: {_bool_str(cert.big_part_is_big)}",
        f"steps_on_strict_transform: {_bool_str(cert.steps_on_strict_transform)}",
        f"effective_part: {cert.effective_part}",
        "witness: -K(Xtilde) = pullback(big_part) + effective_part",
    ]
    surface = BlownUpSurface(scenario.base)
    k = surface.canonical_class()
    lines.append(f"k_squared_step_0: {check_class(surface, k, k)}")
    for i in range(1, cert.n_steps + 1):
        surface = blow_up(surface)
        k = surface.canonical_class()
        lines.append(f"k_squared_step_{i}: {check_class(surface, k, k)}")
    print("\n".join(lines), file=out)
    return EXIT_OK


# ---------------------------------------------------------------------- h0

def cmd_h0(args: argparse.Namespace, out) -> int:
    surface = _build_surface(args)
    cls = args.num_class if args.num_class is not None else -canonical_class(surface)
    iv = h0_class_interval(surface, cls)
    lines = [
        f"class: {cls}",
        f"h0_lo: {iv.lo}",
        f"h0_hi: {iv.hi}",
        f"volume: {volume(surface, cls)}",
    ]
    if args.m_max is not None:
        report = growth_classify(surface, cls, args.m_max)
        lines.append(f"verdict: {report.verdict.value}")
        lines.append(f"fitted_lo_coefficient: {report.fitted_lo_coefficient}")
        for m, sample in report.samples:
            lines.append(f"sample_m_{m}: [{sample.lo}, {sample.hi}]")
    print("\n".join(lines), file=out)
    return EXIT_OK


# --------------------------------------------------------------- frobenius

def cmd_frobenius(args: argparse.Namespace, out) -> int:
    degrees = _parse_int_list(args.degrees, "--degrees")
    curve = Curve(args.genus, args.char)
    bundle = SplitBundle(degrees)
    pulled = frobenius_pullback(curve, bundle, args.e)
    lines = [f"pullback_degrees: {','.join(str(d) for d in pulled.degrees)}"]
    if bundle.rank == 2:
        e = min_destabilizing_e(curve, bundle)
        lines.append(f"min_destabilizing_e: {'none' if e is None else e}")
    print("\n".join(lines), file=out)
    return EXIT_OK


# -------------------------------------------------------------------- main

def _add_surface_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--genus", type=int, required=True)
    parser.add_argument("--char", type=int, default=0)
    parser.add_argument("--degrees", required=True,
                        help="comma-separated summand degrees, e.g. 1,0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ruledsurf",
        description="Exact bigness/nefness tests on projective bundles over curves, "
                    "with brute-force section-count oracles and blow-up certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify one surface / class")
    _add_surface_args(p_classify)
    p_classify.add_argument("--class", dest="num_class", type=_parse_class, default=None,
                            help="class a,b (default: -K)")
    p_classify.add_argument("--out", default=None)
    p_classify.set_defaults(func=cmd_classify)

    p_scan = sub.add_parser("scan", help="grid scan with oracle agreement check")
    p_scan.add_argument("--genus-range", required=True, help="inclusive lo:hi")
    p_scan.add_argument("--chars", default="0", help="comma-separated characteristics")
    p_scan.add_argument("--d1-range", required=True, help="inclusive lo:hi")
    p_scan.add_argument("--d2-range", required=True, help="inclusive lo:hi")
    p_scan.add_argument("--d3-range", default=None, help="inclusive lo:hi (rank 3)")
    p_scan.add_argument("--class", dest="num_class", type=_parse_class, default=None,
                        help="class a,b (default: -K per surface)")
    p_scan.add_argument("--m-max", type=int, default=32)
    p_scan.add_argument("--out", default=None)
    p_scan.set_defaults(func=cmd_scan)

    p_blowup = sub.add_parser("blowup", help="certify a blow-up scenario file")
    p_blowup.add_argument("scenario", help="path to a scenario JSON file")
    p_blowup.add_argument("--out", default=None)
    p_blowup.set_defaults(func=cmd_blowup)

    p_h0 = sub.add_parser("h0", help="section-count interval for a class")
    _add_surface_args(p_h0)
    p_h0.add_argument("--class", dest="num_class", type=_parse_class, default=None,
                      help="class a,b (default: -K)")
    p_h0.add_argument("--m-max", type=int, default=None,
                      help="also run the growth classifier up to this m")
    p_h0.add_argument("--out", default=None)
    p_h0.set_defaults(func=cmd_h0)

    p_frob = sub.add_parser("frobenius", help="Frobenius pull-back of a bundle")
    _add_surface_args(p_frob)
    p_frob.add_argument("--e", type=int, default=0, help="number of Frobenius iterations")
    p_frob.add_argument("--out", default=None)
    p_frob.set_defaults(func=cmd_frobenius)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_VALIDATION if err.code not in (0, None) else EXIT_OK

    out_path = getattr(args, "out", None)
    try:
        if out_path:
            try:
                out = open(out_path, "w")
            except OSError as err:
                print(f"error: cannot open output path: {err}", file=sys.stderr)
                return EXIT_IO
            with out:
                return args.func(args, out)
        return args.func(args, sys.stdout)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VALIDATION


def run() -> None:
    raise SystemExit(main())
