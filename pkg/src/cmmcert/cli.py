"""Command-line front end.

Exit codes: 0 all Verified, 1 something Failed, 2 Indeterminate present
(nothing Failed), 3 usage or I/O error.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .interval import DEFAULT_PREC, MIN_PREC, Interval
from .reduction import (CLAIMED_THRESHOLD, FINITE_CHECK_LIMIT, ScanResult, exponent_gap_report,
                        threshold_scan)
from .reports import BoundReport, Verdict, combine
from .seaweed import verify_part2
from .series import CacheError, load_or_expand_G, scan_nonnegative, write_cache
from .suite import count_verdicts, lemma_suite

EXIT = {Verdict.VERIFIED: 0, Verdict.SKIPPED: 0, Verdict.FAILED: 1, Verdict.INDETERMINATE: 2}
EXIT_USAGE = 3

DEFAULT_SCAN = (2000, 100000)
COEFF_ORDER = 10000
INDEX_MAX = 60


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2, which means Indeterminate here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def cache_dir() -> Path:
    env = os.environ.get("CMM_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "cmmcert"


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(p) for p in text.split(":"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from e
    if not 1 <= lo < hi:
        raise argparse.ArgumentTypeError("need 1 <= lo < hi")
    return lo, hi


def _precision(text: str) -> int:
    p = int(text)
    if p < MIN_PREC:
        raise argparse.ArgumentTypeError(f"precision must be at least {MIN_PREC}")
    return p


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- pieces shared by the subcommands and the certificate ----------------------------

def coefficient_check(order: int) -> tuple[dict, object]:
    # whether the series came from the cache is logged, not recorded, so reruns stay identical
    s, source = load_or_expand_G(order, cache_dir())
    _log(f"coefficients through {order}: {source}")
    neg = scan_nonnegative(s)
    verdict = Verdict.VERIFIED if neg is None else Verdict.FAILED
    return {"max_order": order, "verdict": verdict.value, "first_negative": neg}, s


def index_check(max_n: int) -> tuple[dict, list]:
    rows = verify_part2(max_n)
    ok = all(r.match for r in rows)
    return {"max_n": max_n, "verdict": (Verdict.VERIFIED if ok else Verdict.FAILED).value,
            "mismatches": [r.n for r in rows if not r.match]}, rows


def scan_reports(res: ScanResult) -> list[BoundReport]:
    """The two claims a scan speaks to: the threshold itself, and the range
    above the finite-check limit."""
    t = res.threshold
    covers = res.lo <= CLAIMED_THRESHOLD < res.hi
    if res.indeterminate and (t is None or max(res.indeterminate) > t):
        v_thr = Verdict.INDETERMINATE
    elif t is not None and t > CLAIMED_THRESHOLD:
        v_thr = Verdict.FAILED
    else:
        v_thr = Verdict.VERIFIED
    above = [n for n in res.failures + res.indeterminate if n > FINITE_CHECK_LIMIT]
    und_above = [n for n in res.indeterminate if n > FINITE_CHECK_LIMIT]
    fail_above = [n for n in res.failures if n > FINITE_CHECK_LIMIT]
    v_cut = (Verdict.FAILED if fail_above else
             Verdict.INDETERMINATE if und_above else Verdict.VERIFIED)
    if res.hi <= FINITE_CHECK_LIMIT:
        v_cut = Verdict.SKIPPED
    lhs = Interval(t if t is not None else res.lo - 1)
    return [
        BoundReport(
            claim_id="threshold_scan.claimed_threshold", lhs=lhs, rhs=Interval(CLAIMED_THRESHOLD),
            verdict=v_thr, relation="<=",
            metadata={"range": [res.lo, res.hi], "threshold": t, "covers_claim": covers,
                      "failures": res.failures, "indeterminate": res.indeterminate}),
        BoundReport(
            claim_id="threshold_scan.above_finite_check", lhs=Interval(len(above)), rhs=Interval(0),
            verdict=v_cut, relation="==",
            metadata={"range": [max(res.lo, FINITE_CHECK_LIMIT + 1), res.hi],
                      "failures_above": fail_above, "indeterminate_above": und_above}),
    ]


def threshold_line(res: ScanResult) -> str:
    if res.threshold is None:
        line = "no failures in range"
    else:
        line = (f"threshold={res.threshold}, "
                f"operative cutoff={max(res.threshold, FINITE_CHECK_LIMIT)}")
    if res.indeterminate:
        line += f" (indeterminate: {len(res.indeterminate)} values, largest {res.indeterminate[-1]})"
    return line


# -- subcommands -------------------------------------------------------------------

def cmd_expand(args) -> int:
    if args.order < 0:
        raise UsageError("order must be non-negative")
    info, s = coefficient_check(args.order)
    text = " ".join(str(c) for c in s.coeffs)
    if args.out:
        if args.text:
            Path(args.out).write_text(text + "\n")
        else:
            write_cache(s, args.out)
    elif args.text:
        print(text)
    if info["first_negative"] is None:
        _log(f"AllNonNegative through order {args.order}")
        return 0
    _log(f"first negative coefficient at n={info['first_negative']}")
    return 1


def cmd_verify_index(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be at least 1")
    info, rows = index_check(args.max)
    print(f"{'n':>4} {'e_n':>8} {'o_n':>8} {'a(n)':>6}  match")
    for r in rows:
        print(f"{r.n:>4} {r.e:>8} {r.o:>8} {r.a:>6}  {'yes' if r.match else 'NO'}")
    _log(f"{info['verdict']}: |e_n - o_n| = a(n) for 1 <= n <= {args.max}"
         if not info["mismatches"] else f"Failed at n = {info['mismatches']}")
    return EXIT[Verdict(info["verdict"])]


def cmd_check_lemmas(args) -> int:
    reports = lemma_suite(args.precision, major=not args.skip_major)
    for r in reports:
        print(r.summary())
    counts = count_verdicts(reports)
    print(", ".join(f"{k}: {v}" for k, v in counts.items()))
    return EXIT[combine(r.verdict for r in reports if not r.advisory)]


def cmd_threshold(args) -> int:
    lo, hi = args.range
    res = threshold_scan(lo, hi, jobs=args.jobs, start_prec=min(args.precision, 64))
    print(threshold_line(res))
    return EXIT[combine(r.verdict for r in scan_reports(res))]


@dataclass
class Certificate:
    tool_version: str
    precision_bits: int
    reports: list[BoundReport]
    scan: ScanResult
    coefficient_check: dict
    index_check: dict
    timestamp: str

    @property
    def verdict(self) -> Verdict:
        parts = [r.verdict for r in self.reports if not r.advisory]
        parts.append(Verdict(self.coefficient_check["verdict"]))
        parts.append(Verdict(self.index_check["verdict"]))
        return combine(parts)

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "precision_bits": self.precision_bits,
            "overall_verdict": self.verdict.value,
            "coefficient_check": self.coefficient_check,
            "index_check": self.index_check,
            "scan_results": {"range": [self.scan.lo, self.scan.hi], "threshold": self.scan.threshold,
                             "failures": self.scan.failures,
                             "indeterminate": self.scan.indeterminate},
            "reports": [r.to_dict() for r in self.reports],
            "timestamp": self.timestamp,
        }


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a certificate's content (the timestamp aside)."""
    precision: int = DEFAULT_PREC
    scan_range: tuple[int, int] = DEFAULT_SCAN
    jobs: int = 1
    skip_index: bool = False
    coeff_order: int = COEFF_ORDER
    index_max: int = INDEX_MAX
    major: bool = True


def build_certificate(cfg: RunConfig) -> Certificate:
    coeff, _ = coefficient_check(cfg.coeff_order)
    if cfg.skip_index:
        index = {"max_n": cfg.index_max, "verdict": Verdict.SKIPPED.value, "mismatches": []}
    else:
        _log(f"index parity through {cfg.index_max}")
        index, _ = index_check(cfg.index_max)
    _log("lemma suite")
    reports = lemma_suite(cfg.precision, major=cfg.major)
    lo, hi = cfg.scan_range
    _log(f"threshold scan over {lo}:{hi}")
    res = threshold_scan(lo, hi, jobs=cfg.jobs, start_prec=min(cfg.precision, 64))
    reports += scan_reports(res)
    reports.append(exponent_gap_report(cfg.precision))
    reports.sort(key=lambda r: r.claim_id)
    stamp = _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()
    return Certificate(__version__, cfg.precision, reports, res, coeff, index, stamp)


def cmd_certificate(args) -> int:
    if args.order < 0 or args.max < 1:
        raise UsageError("need --order >= 0 and --max >= 1")
    cfg = RunConfig(precision=args.precision, scan_range=args.range, jobs=args.jobs,
                    skip_index=args.skip_index, coeff_order=args.order, index_max=args.max,
                    major=not args.skip_major)
    cert = build_certificate(cfg)
    doc = json.dumps(cert.to_dict(), indent=2, sort_keys=False) + "\n"
    if args.out:
        Path(args.out).write_text(doc)
    else:
        sys.stdout.write(doc)
    for r in cert.reports:
        if r.verdict is not Verdict.VERIFIED:
            _log(r.summary())
    _log(f"overall: {cert.verdict.value}")
    return EXIT[cert.verdict]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cmmcert", description="Certified checks for the coefficients of "
                "G(q) = 1/(q, -q^3; q^4)_inf.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("expand", help="expand G(q) and check its coefficients are non-negative")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--out", help="write coefficients here (cache format unless --text)")
    e.add_argument("--text", action="store_true", help="decimal text instead of the binary cache format")
    e.set_defaults(func=cmd_expand)

    v = sub.add_parser("verify-index", help="compare |e_n - o_n| with a(n)")
    v.add_argument("--max", type=int, default=INDEX_MAX)
    v.set_defaults(func=cmd_verify_index)

    c = sub.add_parser("check-lemmas", help="run the analytic lemma suite")
    c.add_argument("--precision", type=_precision, default=DEFAULT_PREC)
    c.add_argument("--skip-major", action="store_true", help="leave out the slow major-arc samples")
    c.set_defaults(func=cmd_check_lemmas)

    t = sub.add_parser("threshold", help="scan the final Bessel inequality over a range of n")
    t.add_argument("--range", type=parse_range, default=DEFAULT_SCAN)
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--precision", type=_precision, default=64, help="starting precision in bits")
    t.set_defaults(func=cmd_threshold)

    k = sub.add_parser("certificate", help="run everything and write a JSON certificate")
    k.add_argument("--out")
    k.add_argument("--precision", type=_precision, default=DEFAULT_PREC)
    k.add_argument("--range", type=parse_range, default=DEFAULT_SCAN)
    k.add_argument("--jobs", type=int, default=1)
    k.add_argument("--order", type=int, default=COEFF_ORDER, help="coefficient check order")
    k.add_argument("--max", type=int, default=INDEX_MAX, help="index check bound")
    k.add_argument("--skip-index", action="store_true")
    k.add_argument("--skip-major", action="store_true", help="leave out the slow major-arc samples")
    k.set_defaults(func=cmd_certificate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except UsageError as e:
        _log(f"cmmcert: error: {e}")
        return EXIT_USAGE
    except (OSError, CacheError) as e:
        _log(f"cmmcert: I/O error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
