"""Command-line interface with a stable machine-readable output format.

JSON is the contract: a top-level object {"version", "subcommand",
"input_summary", "result"} with deterministic key order, and integers
of magnitude 2^53 or more rendered as decimal strings so nothing is
lost to double precision.  Text output is for people and may change;
CSV is offered where rows are the natural shape (repsearch, gen).

Exit codes: 0 success (verdicts like "inadmissible" are still success),
1 when a requested verification fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any

from .admissible import IntegerSet, check_admissible
from .bounds import (
    corollary_bound,
    guarantee,
    theorem1_bound,
    verify_mertens,
    verify_proof_constants,
)
from .errors import ParseError, PrimeShiftError, ValidationError
from .primes import sieve
from .prune import greedy_prune
from .representation import gen_sequence, rep_search, romanoff_counts

JSON_VERSION = 1
THREADS_ENV_VAR = "PRIMESHIFT_THREADS"

_JSON_INT_LIMIT = 2**53
_CSV_COMMANDS = ("repsearch", "gen")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input_path: str | None
    params: dict[str, Any]
    output_format: str = "json"
    thread_count: int = 1


def parse_input_set(path: str) -> IntegerSet:
    """Read newline-separated integers; '#' lines and blanks are skipped.

    Input is sorted; duplicate values are an error because downstream
    math assumes distinct elements.
    """
    values: list[int] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                values.append(int(line))
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: not an integer: {line!r}") from exc
    if not values:
        raise ValidationError(f"{path}: no integers found")
    return IntegerSet.from_values(values)


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) < _JSON_INT_LIMIT else str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value)!r}")


def _set_summary(path: str, int_set: IntegerSet) -> dict[str, Any]:
    return {
        "path": path,
        "size": int_set.size,
        "min": int_set.elements[0],
        "max": int_set.elements[-1],
    }


def _run_check(config: RunConfig):
    int_set = parse_input_set(config.input_path)
    cert = check_admissible(int_set)
    result = {
        "verdict": cert.verdict,
        "missed_residues": [[p, r] for p, r in sorted(cert.missed_residues.items())],
        "covered_prime": cert.covered_prime,
    }
    text = [f"verdict: {cert.verdict}"]
    if cert.covered_prime is not None:
        text.append(f"covering prime: {cert.covered_prime}")
    else:
        text.append(f"examined primes: {len(cert.missed_residues)}")
    return result, _set_summary(config.input_path, int_set), 0, "\n".join(text)


def _run_prune(config: RunConfig):
    int_set = parse_input_set(config.input_path)
    trace = greedy_prune(int_set)
    result = {
        "input_size": trace.input_size,
        "s": trace.s,
        "stop_prime": trace.stop_prime,
        "final_size": trace.final_size,
        "final_set": list(trace.final_set.elements),
        "steps": [
            {
                "index": st.index,
                "prime": st.prime,
                "removed_residue": st.removed_residue,
                "removed_count": st.removed_count,
                "survivors_actual": st.survivors_actual,
                "survivors_paper": st.survivors_paper,
            }
            for st in trace.steps
        ],
    }
    text = (
        f"pruned {trace.input_size} -> {trace.final_size} elements "
        f"in {trace.s} steps (stop prime {trace.stop_prime})"
    )
    return result, _set_summary(config.input_path, int_set), 0, text


def _run_guarantee(config: RunConfig):
    int_set = parse_input_set(config.input_path)
    report = guarantee(int_set)
    result = {
        "ell": report.ell,
        "ell_s": report.ell_s,
        "s": report.s,
        "p_s": report.p_s,
        "m": report.m,
        "theorem_bound": report.theorem_bound,
        "satisfied": report.satisfied,
    }
    text = (
        f"ell={report.ell} ell_s={report.ell_s} s={report.s} "
        f"m={report.m} bound={report.theorem_bound:.6f} "
        f"satisfied={str(report.satisfied).lower()}"
    )
    code = 0 if report.satisfied else 1
    return result, _set_summary(config.input_path, int_set), code, text


def _run_bound(config: RunConfig):
    ell = config.params.get("ell")
    x = config.params.get("x")
    if ell is None and x is None:
        raise ParseError("bound needs --ell and/or --x")
    result: dict[str, Any] = {"theorem1": None, "corollary": None}
    lines = []
    if ell is not None:
        value = theorem1_bound(ell)
        result["theorem1"] = {"ell": ell, "value": value}
        lines.append(f"theorem1_bound({ell}) = {value:.6f}")
    if x is not None:
        value = corollary_bound(x)
        result["corollary"] = {"x": x, "value": value}
        lines.append(f"corollary_bound({x}) = {value:.6f}")
    summary = {"ell": ell, "x": x}
    return result, summary, 0, "\n".join(lines)


def _run_verify_lemmas(config: RunConfig):
    limit = config.params["mertens_limit"]
    reports = [verify_mertens(limit)] + verify_proof_constants()
    all_passed = all(r.passed for r in reports)
    result = {
        "reports": [
            {
                "name": r.name,
                "checked_range": r.checked_range,
                "margin": r.margin,
                "passed": r.passed,
            }
            for r in reports
        ],
        "all_passed": all_passed,
    }
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name} (margin {r.margin:.6g})"
        for r in reports
    ]
    return result, {"mertens_limit": limit}, 0 if all_passed else 1, "\n".join(lines)


def _run_repsearch(config: RunConfig):
    int_set = parse_input_set(config.input_path)
    n_lo = config.params["n_lo"]
    n_hi = config.params["n_hi"]
    top_k = config.params["top_k"]
    profile = rep_search(int_set, n_lo, n_hi, top_k)
    result = {
        "n_lo": n_lo,
        "n_hi": n_hi,
        "top_k": top_k,
        "dense": profile.dense,
        "represented_count": profile.represented_count,
        "total_representations": profile.total_representations,
        "max_count": profile.max_count,
        "records": [[n, c] for n, c in profile.records],
    }
    summary = _set_summary(config.input_path, int_set)
    summary.update({"from": n_lo, "to": n_hi, "top": top_k})
    text = [
        f"range [{n_lo}, {n_hi}]: {profile.represented_count} represented, "
        f"max count {profile.max_count}"
    ]
    text += [f"  n={n} count={c}" for n, c in profile.records]
    csv_rows = "\n".join(f"{n},{c}" for n, c in profile.nonzero_items())
    return result, summary, 0, "\n".join(text), csv_rows


def _run_romanoff(config: RunConfig):
    limit = config.params["limit"]
    k_min = config.params["k_min"]
    representable, odd_count = romanoff_counts(limit, k_min)
    result = {
        "limit": limit,
        "k_min": k_min,
        "odd_count": odd_count,
        "representable_count": representable,
        "density": representable / odd_count,
    }
    text = f"density({limit}, k_min={k_min}) = {representable / odd_count:.6f}"
    return result, {"limit": limit, "k_min": k_min}, 0, text


def _run_gen(config: RunConfig):
    kind = config.params["kind"]
    count = config.params["count"]
    ratio = config.params["ratio"]
    out = config.params.get("out")
    int_set = gen_sequence(kind, count, ratio)
    listing = "\n".join(str(a) for a in int_set.elements)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(listing + "\n")
    result = {
        "kind": kind,
        "count": count,
        "seed_ratio": ratio if kind == "divisor_chain" else None,
        "elements": list(int_set.elements),
    }
    summary = {"kind": kind, "count": count, "ratio": ratio}
    return result, summary, 0, listing, listing


def _run_primes(config: RunConfig):
    limit = config.params["limit"]
    table = sieve(limit)
    result = {
        "limit": limit,
        "count": table.count,
        "largest": table.primes[-1] if table.primes else None,
    }
    text = f"{table.count} primes up to {limit} (largest {result['largest']})"
    return result, {"limit": limit}, 0, text


_RUNNERS = {
    "check": _run_check,
    "prune": _run_prune,
    "guarantee": _run_guarantee,
    "bound": _run_bound,
    "verify-lemmas": _run_verify_lemmas,
    "repsearch": _run_repsearch,
    "romanoff": _run_romanoff,
    "gen": _run_gen,
    "primes": _run_primes,
}


def dispatch(config: RunConfig) -> tuple[int, str]:
    """Run one subcommand; returns (exit_code, report).

    Exit 2 reports are error messages, others are in the requested
    format.  Output is a pure function of the config, so identical runs
    yield identical bytes.
    """
    try:
        if config.output_format not in ("json", "text", "csv"):
            raise ParseError(f"unknown format {config.output_format!r}")
        if config.output_format == "csv" and config.subcommand not in _CSV_COMMANDS:
            raise ParseError(f"csv output is not defined for {config.subcommand!r}")
        if config.thread_count < 1:
            raise ParseError(f"thread count must be >= 1, got {config.thread_count}")
        runner = _RUNNERS.get(config.subcommand)
        if runner is None:
            raise ParseError(f"unknown subcommand {config.subcommand!r}")
        outcome = runner(config)
        result, summary, code, text = outcome[:4]
        if config.output_format == "csv":
            return code, outcome[4]
        if config.output_format == "text":
            return code, text
        envelope = {
            "version": JSON_VERSION,
            "subcommand": config.subcommand,
            "input_summary": _jsonable(summary),
            "result": _jsonable(result),
        }
        return code, json.dumps(envelope, indent=2, sort_keys=True)
    except PrimeShiftError as exc:
        return 2, f"error: {exc}"
    except OSError as exc:
        return 2, f"error: {exc}"


def resolve_thread_count(flag_value: int | None) -> int:
    """Flag default is machine parallelism; the env var wins for CI."""
    env = os.environ.get(THREADS_ENV_VAR)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ParseError(f"{THREADS_ENV_VAR} must be an integer, got {env!r}")
        if value < 1:
            raise ParseError(f"{THREADS_ENV_VAR} must be >= 1, got {value}")
        return value
    if flag_value is not None:
        return flag_value
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeshift",
        description="Admissible-set pruning and shifted-prime representation toolkit",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text", "csv"), default="json")
        p.add_argument("--threads", type=int, default=None)

    p = sub.add_parser("check", help="admissibility certificate for a set file")
    p.add_argument("input")
    common(p)

    p = sub.add_parser("prune", help="greedy pruning trace for a set file")
    p.add_argument("input")
    common(p)

    p = sub.add_parser("guarantee", help="representation guarantee for a set file")
    p.add_argument("input")
    common(p)

    p = sub.add_parser("bound", help="evaluate the closed-form bounds")
    p.add_argument("--ell", type=int)
    p.add_argument("--x", type=float)
    common(p)

    p = sub.add_parser("verify-lemmas", help="run every numeric verifier")
    p.add_argument("--mertens-limit", type=int, default=10**6)
    common(p)

    p = sub.add_parser("repsearch", help="representation counts over a range")
    p.add_argument("input")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--top", type=int, default=10)
    common(p)

    p = sub.add_parser("romanoff", help="density of odd prime-plus-power-of-two sums")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--k-min", dest="k_min", type=int, choices=(0, 1), default=1)
    common(p)

    p = sub.add_parser("gen", help="emit a stock sequence")
    p.add_argument("--kind", choices=("powers_of_two", "divisor_chain", "two_pow_prime"), required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--ratio", type=int, default=2)
    p.add_argument("--out")
    common(p)

    p = sub.add_parser("primes", help="prime table statistics")
    p.add_argument("--limit", type=int, required=True)
    common(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    params: dict[str, Any] = {}
    input_path = getattr(args, "input", None)
    if args.subcommand == "bound":
        params = {"ell": args.ell, "x": args.x}
    elif args.subcommand == "verify-lemmas":
        params = {"mertens_limit": args.mertens_limit}
    elif args.subcommand == "repsearch":
        params = {"n_lo": args.n_from, "n_hi": args.n_to, "top_k": args.top}
    elif args.subcommand == "romanoff":
        params = {"limit": args.limit, "k_min": args.k_min}
    elif args.subcommand == "gen":
        params = {"kind": args.kind, "count": args.count, "ratio": args.ratio, "out": args.out}
    elif args.subcommand == "primes":
        params = {"limit": args.limit}
    return RunConfig(
        subcommand=args.subcommand,
        input_path=input_path,
        params=params,
        output_format=args.format,
        thread_count=resolve_thread_count(args.threads),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except PrimeShiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code, report = dispatch(config)
    if code == 2:
        print(report, file=sys.stderr)
    elif report:
        print(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
