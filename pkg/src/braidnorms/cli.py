"""Command line front end.

Commands: ``info`` (closure combinatorics and Bennequin data), ``bounds``
(Thurston norm bracket, optionally checked against a supplied Alexander
polynomial), ``homfly`` (the polynomial report), ``cable`` (the cabled
diagram pair for a class), ``alexnorm`` (Alexander norm of a polynomial
file), ``verify`` (theorem sweeps) and ``bench`` (evaluator timings).

Exit codes: 0 success or verified, 1 usage or parse error, 2
verification failure, 3 budget exhausted.  JSON output is byte-identical
for identical invocations (timings are kept out of JSON except in
``bench``, which exists to measure them).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bennequin import (
    bennequin_number,
    cable_pair,
    relative_bennequin,
    thurston_bracket,
)
from .braid import (
    BraidWord,
    ParseError,
    generator_profile,
    parse_braid,
    print_braid,
)
from .diagram import (
    band_seifert_euler,
    closure_profile,
    linking_matrix,
    punctured_component_euler,
    seifert_euler,
)
from .homfly import (
    BudgetExceededError,
    DEFAULT_BAND_BUDGET,
    homfly_report,
    max_bennequin_certificate,
    mfw_check,
)
from .poly import LaurentVZ, alexander_norm, load_multipoly, mcmullen_check
from .sweeps import SuiteResult, bench_family, run_suite

__all__ = ["RunConfig", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    """Everything one invocation needs; derived from argv, then inert."""

    command: str
    text: str = ""
    n: int = 1
    cls: tuple[int, ...] | None = None
    poly_path: str | None = None
    json_out: bool = False
    seed: int = 0
    max_len: int | None = None
    max_strands: int | None = None
    samples: int | None = None
    budget: int = DEFAULT_BAND_BUDGET
    k: int = 5
    max_l: int = 6
    suite: str = ""
    family: str = ""
    limit: int = 6


def _parse_class(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in raw.split(","))
    except ValueError as exc:
        raise ParseError(f"malformed class {raw!r}; expected comma-separated integers") from exc


def _poly_terms(p: LaurentVZ) -> list[list[int]]:
    return [[c, a, b] for (a, b), c in sorted(p.terms.items())]


def _euler_json(report) -> dict:
    return {"chi": report.chi, "chi_minus": report.chi_minus, "formula": report.formula}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidnorms",
        description="Exact braid-closure invariants and Thurston norm brackets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def word_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("text", help="braid word, e.g. 's1^4' or 'a1,3 s2^-1'")
        p.add_argument("-n", type=int, required=True, help="strand count")
        p.add_argument("--json", action="store_true", dest="json_out")

    p_info = sub.add_parser("info", help="closure combinatorics and Bennequin data")
    word_flags(p_info)

    p_bounds = sub.add_parser("bounds", help="Thurston norm bracket for a class")
    word_flags(p_bounds)
    p_bounds.add_argument("--class", dest="cls", required=True, metavar="C1,C2,...")
    p_bounds.add_argument("--poly", dest="poly_path", metavar="FILE")

    p_homfly = sub.add_parser("homfly", help="braid polynomial report")
    word_flags(p_homfly)

    p_cable = sub.add_parser("cable", help="cabled diagram pair for a class")
    word_flags(p_cable)
    p_cable.add_argument("--class", dest="cls", required=True, metavar="C1,C2,...")

    p_alex = sub.add_parser("alexnorm", help="Alexander norm of a polynomial file")
    p_alex.add_argument("--poly", dest="poly_path", required=True, metavar="FILE")
    p_alex.add_argument("--class", dest="cls", required=True, metavar="C1,C2,...")
    p_alex.add_argument("--json", action="store_true", dest="json_out")

    p_verify = sub.add_parser("verify", help="run a theorem sweep")
    p_verify.add_argument(
        "suite",
        choices=["skein", "mfw", "homogeneous", "linearity", "morton3", "kanda"],
    )
    p_verify.add_argument("--json", action="store_true", dest="json_out")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--max-len", type=int, dest="max_len")
    p_verify.add_argument("--max-strands", type=int, dest="max_strands")
    p_verify.add_argument("--samples", type=int)
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BAND_BUDGET)
    p_verify.add_argument("--k", type=int, default=5)
    p_verify.add_argument("--max-l", type=int, dest="max_l", default=6)

    p_bench = sub.add_parser("bench", help="time the two evaluators on a family")
    p_bench.add_argument("family", choices=["torus2", "torus3", "random"])
    p_bench.add_argument("--json", action="store_true", dest="json_out")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--max-len", type=int, dest="limit", default=6)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in vars(cfg):
        if hasattr(args, name) and getattr(args, name) is not None:
            value = getattr(args, name)
            if name == "cls" and isinstance(value, str):
                value = _parse_class(value)
            setattr(cfg, name, value)
    return cfg


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if cfg.json_out:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load_word(cfg: RunConfig) -> BraidWord:
    return parse_braid(cfg.text, cfg.n)


def cmd_info(cfg: RunConfig) -> int:
    word = _load_word(cfg)
    profile = closure_profile(word)
    lk = linking_matrix(profile)
    bt = bennequin_number(word)
    rel = [relative_bennequin(word, i) for i in range(1, profile.r + 1)]
    gen = generator_profile(word)
    seifert = seifert_euler(word)
    band = band_seifert_euler(word)
    punctured = [
        punctured_component_euler(word, j) for j in range(1, profile.r + 1)
    ]
    payload = {
        "command": "info",
        "word": print_braid(word),
        "n": word.n,
        "components": list(profile.comp),
        "r": profile.r,
        "crossing_matrix": [list(row) for row in profile.cr],
        "linking_matrix": [list(row) for row in lk],
        "bennequin": bt,
        "relative_bennequin": rel,
        "euler": {
            "seifert": _euler_json(seifert),
            "band_seifert": _euler_json(band),
            "punctured_component": [_euler_json(r) for r in punctured],
        },
        "homogeneous": gen.homogeneous,
        "signs": {
            "pos": gen.pos,
            "neg": gen.neg,
            "pos_b": gen.pos_b,
            "neg_b": gen.neg_b,
        },
    }
    lines = [
        f"word            {print_braid(word) or 'id'}",
        f"strands         {word.n}",
        f"components      {profile.r}  (strand -> component: {list(profile.comp)})",
        f"crossing matrix {[list(row) for row in profile.cr]}",
        f"linking matrix  {[list(row) for row in lk]}",
        f"bennequin       {bt}",
        f"relative        {rel}",
        f"euler seifert   chi={seifert.chi} chi_minus={seifert.chi_minus}",
        f"euler band      chi={band.chi} chi_minus={band.chi_minus}",
        f"euler punctured {[r.chi for r in punctured]}",
        f"homogeneous     {gen.homogeneous}",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_bounds(cfg: RunConfig) -> int:
    word = _load_word(cfg)
    assert cfg.cls is not None
    bracket = thurston_bracket(word, cfg.cls)
    payload = {
        "command": "bounds",
        "word": print_braid(word),
        "n": word.n,
        "class": list(cfg.cls),
        "bracket": {
            "lower": bracket.lower,
            "upper": bracket.upper,
            "determined": bracket.determined,
            "sources": {
                "lower": bracket.lower_source,
                "upper": bracket.upper_source,
            },
        },
    }
    lines = [
        f"class      {list(cfg.cls)}",
        f"bracket    [{bracket.lower}, {bracket.upper}]",
        f"determined {bracket.determined}",
        f"sources    lower={bracket.lower_source} upper={bracket.upper_source}",
    ]
    if cfg.poly_path:
        with open(cfg.poly_path, "r", encoding="utf-8") as handle:
            poly = load_multipoly(handle.read())
        profile = closure_profile(word)
        report = mcmullen_check(poly, bracket, cfg.cls, profile.r)
        payload["mcmullen"] = {
            "alexander": report.alexander,
            "upper": report.upper,
            "bound": report.bound,
            "holds": report.holds,
            "gap": report.gap,
        }
        lines.append(
            f"mcmullen   alexander={report.alexander} bound={report.bound} "
            f"holds={report.holds} gap={report.gap}"
        )
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_homfly(cfg: RunConfig) -> int:
    word = _load_word(cfg)
    report = homfly_report(word)
    mfw = mfw_check(word)
    cert = max_bennequin_certificate(word)
    payload = {
        "command": "homfly",
        "word": print_braid(word),
        "n": word.n,
        "bennequin": report.beta_t,
        "homfly": {
            "P": _poly_terms(report.P),
            "H": _poly_terms(report.H),
            "e": report.e,
            "e_P": report.e_p,
            "conway": _poly_terms(report.conway),
        },
        "mfw": {"holds": mfw.holds, "slack": mfw.slack},
        "certificate": {
            "certified": cert.certified,
            "p0": _poly_terms(cert.p0),
        },
    }
    lines = [
        f"P          {report.P}",
        f"H          {report.H}",
        f"conway     {report.conway}",
        f"e          {report.e}",
        f"e_P        {report.e_p}",
        f"bennequin  {report.beta_t}",
        f"mfw        holds={mfw.holds} slack={mfw.slack}",
        f"certificate maximal={cert.certified}",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_cable(cfg: RunConfig) -> int:
    word = _load_word(cfg)
    assert cfg.cls is not None
    pair = cable_pair(word, cfg.cls)
    sub_bennequin = bennequin_number(pair.lprime, pair.subset)
    rel_sum = sum(
        relative_bennequin(pair.lprime, i) for i in sorted(pair.subset)
    )
    payload = {
        "command": "cable",
        "word": print_braid(word),
        "n": word.n,
        "class": list(cfg.cls),
        "lprime": {"word": print_braid(pair.lprime), "n": pair.lprime.n},
        "subset": sorted(pair.subset),
        "origin": list(pair.origin),
        "p": list(pair.p),
        "m": list(pair.m),
        "subdiagram_bennequin": sub_bennequin,
        "relative_bennequin_sum": rel_sum,
    }
    lines = [
        f"lprime  {print_braid(pair.lprime) or 'id'}  on {pair.lprime.n} strands",
        f"subset  {sorted(pair.subset)}",
        f"origin  {list(pair.origin)}",
        f"p       {list(pair.p)}",
        f"m       {list(pair.m)}",
        f"bennequin(L'' in L') {rel_sum}",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_alexnorm(cfg: RunConfig) -> int:
    assert cfg.poly_path is not None and cfg.cls is not None
    with open(cfg.poly_path, "r", encoding="utf-8") as handle:
        poly = load_multipoly(handle.read())
    norm = alexander_norm(poly, cfg.cls)
    payload = {
        "command": "alexnorm",
        "class": list(cfg.cls),
        "alexander_norm": norm,
    }
    _emit(cfg, payload, [f"alexander norm at {list(cfg.cls)}: {norm}"])
    return EXIT_OK


def _suite_kwargs(cfg: RunConfig) -> dict:
    kwargs: dict = {}
    if cfg.suite == "skein":
        if cfg.max_strands is not None:
            kwargs["max_strands"] = cfg.max_strands
        if cfg.max_len is not None:
            kwargs["max_len"] = cfg.max_len
        if cfg.samples is not None:
            kwargs["samples"] = cfg.samples
        kwargs["seed"] = cfg.seed
    elif cfg.suite in ("mfw", "homogeneous"):
        if cfg.max_strands is not None:
            kwargs["max_strands"] = cfg.max_strands
        if cfg.max_len is not None:
            kwargs["max_len"] = cfg.max_len
    elif cfg.suite == "linearity":
        if cfg.samples is not None:
            kwargs["samples"] = cfg.samples
        if cfg.max_strands is not None:
            kwargs["max_strands"] = cfg.max_strands
        if cfg.max_len is not None:
            kwargs["max_len"] = cfg.max_len
        kwargs["seed"] = cfg.seed
    elif cfg.suite == "morton3":
        if cfg.max_len is not None:
            kwargs["max_len"] = cfg.max_len
        kwargs["budget"] = cfg.budget
    elif cfg.suite == "kanda":
        kwargs["k"] = cfg.k
        kwargs["max_l"] = cfg.max_l
    return kwargs


def cmd_verify(cfg: RunConfig) -> int:
    result: SuiteResult = run_suite(cfg.suite, **_suite_kwargs(cfg))
    payload = {
        "command": "verify",
        "suite": result.suite,
        "checked": result.checked,
        "failures": result.failures,
        "details": result.details,
        "passed": result.passed,
    }
    status = "PASS" if result.passed else "FAIL"
    lines = [
        f"suite={result.suite} checked={result.checked} "
        f"failures={len(result.failures)} elapsed={result.elapsed:.2f}s {status}"
    ]
    lines.extend(f"  counterexample: {failure}" for failure in result.failures)
    _emit(cfg, payload, lines)
    return EXIT_OK if result.passed else EXIT_VERIFY


def cmd_bench(cfg: RunConfig) -> int:
    rows = bench_family(cfg.family, limit=cfg.limit, seed=cfg.seed)
    payload = {
        "command": "bench",
        "family": cfg.family,
        "rows": [
            {
                "label": row.label,
                "n": row.n,
                "length": row.length,
                "trace_seconds": row.trace_seconds,
                "oracle_seconds": row.oracle_seconds,
                "equal": row.equal,
                "terms": row.terms,
            }
            for row in rows
        ],
    }
    lines = [f"{'label':<14}{'n':>3}{'len':>5}{'trace[s]':>12}{'oracle[s]':>12}{'equal':>7}{'terms':>7}"]
    for row in rows:
        lines.append(
            f"{row.label:<14}{row.n:>3}{row.length:>5}"
            f"{row.trace_seconds:>12.6f}{row.oracle_seconds:>12.6f}"
            f"{str(row.equal):>7}{row.terms:>7}"
        )
    _emit(cfg, payload, lines)
    return EXIT_OK


_COMMANDS = {
    "info": cmd_info,
    "bounds": cmd_bounds,
    "homfly": cmd_homfly,
    "cable": cmd_cable,
    "alexnorm": cmd_alexnorm,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
