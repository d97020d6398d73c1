"""Command-line front end with a stable machine-readable envelope.

Every command prints a JSON envelope {schema_version, command, params,
result, timing_ms} on stdout. Integers inside params/result are rendered
as decimal strings so consumers never truncate past 64 bits; rationals
carry numerator/denominator plus a 6-place decimal rendering. Exit codes:
0 success, 1 domain error or usage error, 2 capacity refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import _kernels as kernels
from .arith import beta, ell, radical
from .asymptotics import (
    GROWTH_FUNCTIONS,
    density_scan,
    ratio_report,
    witnesses,
)
from .bounds import difference_certificate
from .construct import explain_construction, max_progression
from .digits import DigitSet, Progression, to_base_str, verify_progression
from .errors import CapacityError, DomainError
from .search import DEFAULT_BUDGET, coverage_policy, longest_ap_base

SCHEMA_VERSION = "1"


class _Parser(argparse.ArgumentParser):
    # Usage problems are user errors: exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _decimal(frac: Fraction, places: int = 6) -> str:
    q = round(frac, places)
    scale = 10**places
    v = q.numerator * (scale // q.denominator)
    sign = "-" if v < 0 else ""
    v = abs(v)
    return f"{sign}{v // scale}.{v % scale:0{places}d}"


def _jsonable(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return {
            "numerator": str(x.numerator),
            "denominator": str(x.denominator),
            "decimal": _decimal(x),
        }
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _progression_payload(p: Progression, s: DigitSet) -> dict:
    violation = verify_progression(p, s)
    payload = {
        "start": p.start,
        "difference": p.difference,
        "length": p.length,
        "last_term": p.last,
        "verified": violation is None,
    }
    if violation is not None:
        payload["violation"] = {
            "index": violation.index,
            "term": violation.term,
            "position": violation.position,
        }
    if s.base <= 36:
        payload["start_digits"] = to_base_str(p.start, s.base)
        payload["difference_digits"] = to_base_str(p.difference, s.base)
        payload["last_term_digits"] = to_base_str(p.last, s.base)
    return payload


def _parse_digit(token: str, base: int) -> int:
    token = token.strip().lower()
    if len(token) == 1 and token.isalpha():
        d = int(token, 36)
    else:
        d = int(token)
    if not 0 <= d < base:
        raise DomainError(f"digit {token!r} out of range for base {base}")
    return d


# ---------------------------------------------------------------- commands


def _cmd_beta(args) -> tuple[dict, dict]:
    res = beta(args.b)
    params = {"b": args.b}
    return params, {
        "b": res.b,
        "beta": res.beta,
        "exponents": [{"prime": p, "exponent": a} for p, a in res.exponents],
        "K": res.K,
    }


def _cmd_ell(args) -> tuple[dict, dict]:
    res = beta(args.b)
    return {"b": args.b}, {
        "b": args.b,
        "beta": res.beta,
        "K": res.K,
        "ell": (args.b - 1) * res.beta,
    }


def _cmd_radical(args) -> tuple[dict, dict]:
    return {"n": args.n}, {"n": args.n, "radical": radical(args.n)}


def _cmd_construct(args) -> tuple[dict, dict]:
    prog, digitset = max_progression(args.b)
    payload = _progression_payload(prog, digitset)
    payload["excluded_digit"] = args.b - 1
    res = beta(args.b)
    payload["beta"] = res.beta
    payload["K"] = res.K
    if args.explain:
        report = explain_construction(args.b)
        payload["separation_checks"] = [
            {"k": c.k, "gcd": c.gcd, "must_exceed": c.threshold, "holds": c.holds}
            for c in report.checks
        ]
    return {"b": args.b, "explain": bool(args.explain)}, payload


def _cmd_verify_ap(args) -> tuple[dict, dict]:
    if (args.exclude is None) == (args.allow is None):
        raise DomainError("give exactly one of --exclude or --allow")
    if args.exclude is not None:
        digitset = DigitSet.excluding(args.base, _parse_digit(args.exclude, args.base))
    else:
        digits = [_parse_digit(t, args.base) for t in args.allow.split(",") if t.strip()]
        digitset = DigitSet.from_digits(args.base, digits)
    prog = Progression(args.start, args.diff, args.len)
    params = {
        "start": args.start,
        "diff": args.diff,
        "len": args.len,
        "base": args.base,
        "permitted": list(digitset.permitted),
    }
    return params, _progression_payload(prog, digitset)


def _cmd_certificate(args) -> tuple[dict, dict]:
    cert = difference_certificate(args.delta, args.base)
    rows = [
        {
            "k": r.k,
            "delta_k": r.delta_k,
            "lambda_k": r.lambda_k,
            "mu_k": r.mu_k,
            "c2_holds": r.c2_holds,
        }
        for r in cert.rows
    ]
    return {"delta": args.delta, "base": args.base}, {
        "b": cert.b,
        "delta": cert.delta,
        "reduced_delta": cert.reduced_delta,
        "power_removed": cert.power_removed,
        "rows": rows,
        "bound": cert.bound,
        "first_break_k": cert.first_break_k,
    }


def _cmd_search(args) -> tuple[dict, dict]:
    window, max_diff = coverage_policy(args.base)
    if args.window is not None:
        window = args.window
    if args.max_diff is not None:
        max_diff = args.max_diff
    else:
        max_diff = min(max_diff, window - 1)  # defaulted sweep must fit the window
    excluded = _parse_digit(args.exclude, args.base) if args.exclude is not None else None
    result = longest_ap_base(
        args.base,
        window,
        max_diff,
        excluded=excluded,
        skip_base_multiples=not args.all_digits_sweep,
        budget=args.budget,
    )
    digitset = DigitSet.excluding(args.base, result.excluded_digit)
    payload = _progression_payload(result.best, digitset)
    payload["excluded_digit"] = result.excluded_digit
    payload["exhaustive"] = result.exhaustive
    params = {
        "base": args.base,
        "window": window,
        "max_diff": max_diff,
        "exclude": excluded,
        "all_digits_sweep": bool(args.all_digits_sweep),
    }
    return params, payload


def _cmd_ratio_report(args) -> tuple[dict, dict]:
    rep = ratio_report(args.lo, args.hi, args.modulus, args.buckets)
    params = {"lo": args.lo, "hi": args.hi, "modulus": args.modulus, "buckets": args.buckets}
    return params, {
        "lo": rep.lo,
        "hi": rep.hi,
        "modulus": rep.modulus,
        "count": rep.count,
        "min_ratio": rep.min_ratio,
        "min_at": rep.min_at,
        "mean_ratio": rep.mean_ratio,
        "histogram": list(rep.histogram),
    }


def _cmd_density_scan(args) -> tuple[dict, dict]:
    scan = density_scan(args.limit, GROWTH_FUNCTIONS[args.f])
    blocks = [
        {"j": b.j, "lo": b.lo, "hi": b.hi, "members": b.members, "width": b.width}
        for b in scan.blocks
    ]
    return {"limit": args.limit, "f": args.f}, {
        "limit": scan.limit,
        "f": scan.f_name,
        "ratio": scan.ratio,
        "blocks": blocks,
    }


def _cmd_witnesses(args) -> tuple[dict, dict]:
    rows = witnesses(args.kind, args.count)
    return {"kind": args.kind, "count": args.count}, {
        "kind": args.kind,
        "rows": [{"n": n, "beta": bv, "ratio": r} for n, bv, r in rows],
    }


_CSV_TABLES = {
    "certificate": ("rows", ["k", "delta_k", "lambda_k", "mu_k", "c2_holds"]),
    "ratio-report": ("histogram", None),
    "density-scan": ("blocks", ["j", "lo", "hi", "members", "width"]),
    "witnesses": ("rows", ["n", "beta", "ratio"]),
}


def _csv_text(command: str, result: dict) -> str:
    key, columns = _CSV_TABLES[command]
    lines = []
    if command == "ratio-report":
        lines.append("bucket,count")
        for i, c in enumerate(result["histogram"]):
            lines.append(f"{i},{c}")
    else:
        lines.append(",".join(columns))
        for row in result[key]:
            cells = []
            for col in columns:
                v = row[col]
                if isinstance(v, Fraction):
                    cells.append(_decimal(v))
                elif isinstance(v, bool):
                    cells.append("true" if v else "false")
                else:
                    cells.append(str(v))
            lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


_COMMANDS = {
    "beta": _cmd_beta,
    "ell": _cmd_ell,
    "radical": _cmd_radical,
    "construct": _cmd_construct,
    "verify-ap": _cmd_verify_ap,
    "certificate": _cmd_certificate,
    "search": _cmd_search,
    "ratio-report": _cmd_ratio_report,
    "density-scan": _cmd_density_scan,
    "witnesses": _cmd_witnesses,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--threads", type=int, default=None, metavar="T",
                        help="worker threads for kernels; never changes results")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="STEPS",
                        help="capacity ceiling on elementary search steps")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="also write the envelope verbatim to a file")

    parser = _Parser(prog="kempner", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("beta", parents=[common], help="largest integer below b dividing a power of b")
    p.add_argument("b", type=int)
    p = sub.add_parser("ell", parents=[common], help="longest digit-omitting progression length")
    p.add_argument("b", type=int)
    p = sub.add_parser("radical", parents=[common], help="product of distinct prime divisors")
    p.add_argument("n", type=int)
    p = sub.add_parser("construct", parents=[common], help="build the extremal progression")
    p.add_argument("b", type=int)
    p.add_argument("--explain", action="store_true")
    p = sub.add_parser("verify-ap", parents=[common], help="check a progression against a digit set")
    p.add_argument("start", type=int)
    p.add_argument("diff", type=int)
    p.add_argument("len", type=int)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--exclude", metavar="D")
    p.add_argument("--allow", metavar="D,D,...")
    p = sub.add_parser("certificate", parents=[common], help="per-difference length bound")
    p.add_argument("delta", type=int)
    p.add_argument("--base", type=int, required=True)
    p = sub.add_parser("search", parents=[common], help="brute-force longest progression")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--window", type=int, default=None, metavar="N")
    p.add_argument("--max-diff", type=int, default=None, metavar="D")
    p.add_argument("--exclude", metavar="D", default=None)
    p.add_argument("--all-digits-sweep", action="store_true",
                   help="audit mode: sweep every difference, including base multiples")
    p = sub.add_parser("ratio-report", parents=[common], help="beta(n)/n statistics over a window")
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--modulus", type=int, default=0, metavar="M")
    p.add_argument("--buckets", type=int, default=20, metavar="B")
    p = sub.add_parser("density-scan", parents=[common], help="density of the two-small-primes set")
    p.add_argument("--limit", type=int, required=True, metavar="X")
    p.add_argument("--f", choices=sorted(GROWTH_FUNCTIONS), default="log2")
    p = sub.add_parser("witnesses", parents=[common], help="extreme beta(n)/n witness sequences")
    p.add_argument("--kind", choices=("liminf", "limsup"), required=True)
    p.add_argument("--count", type=int, required=True)
    return parser


def run(argv: Optional[list[str]] = None) -> tuple[int, str]:
    """Execute one command; returns (exit_code, stdout text)."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None:
        if args.threads < 1:
            raise DomainError("--threads must be at least 1")
        kernels.set_threads(args.threads)
    started = time.perf_counter()
    params, result = _COMMANDS[args.command](args)
    timing_ms = int((time.perf_counter() - started) * 1000)
    if args.format == "csv":
        if args.command not in _CSV_TABLES:
            raise DomainError(f"{args.command} has no tabular payload; use --format json")
        text = _csv_text(args.command, result)
    else:
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "params": _jsonable(params),
            "result": _jsonable(result),
            "timing_ms": timing_ms,
        }
        text = json.dumps(envelope, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0, text


def main(argv: Optional[list[str]] = None) -> int:
    try:
        code, text = run(argv)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
