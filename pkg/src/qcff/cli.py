"""Command line interface.

Verbs:
  report     run the full pipeline on a JSON config and emit the report
  selfcheck  run the exhaustive property suites
  factor     factor one polynomial over F_q

Exit codes: 0 ok, 1 selfcheck failure, 2 config error, 3 mathematical
validation error, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .algebra import field_create, format_poly, parse_poly, poly_factor
from .config import load_config
from .errors import ConfigError, ConsistencyError, ValidationError
from .report import render_json, render_text, run_report
from .selfcheck import run_selfcheck

EXIT_OK = 0
EXIT_SELFCHECK = 1
EXIT_CONFIG = 2
EXIT_VALIDATION = 3
EXIT_CONSISTENCY = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcff",
        description="Galois group presentations and genera of "
                    "quasi-cyclotomic function fields over F_q(T)")
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="run the pipeline on a JSON config")
    rep.add_argument("--config", required=True, help="path to the JSON config")
    rep.add_argument("--out", help="write the report here instead of stdout")
    rep.add_argument("--cyclotomic-only", action="store_true",
                     help="report only the cyclotomic layer (pairs may be empty)")
    rep.add_argument("--format", choices=("json", "text"), default="json",
                     help="output format (default json)")
    rep.add_argument("--force-a-pq", action="store_true",
                     help="emit formal sums even past the raw-term cap")

    chk = sub.add_parser("selfcheck", help="run the property suites")
    chk.add_argument("--scope", choices=("small", "full"), default="small")
    chk.add_argument("--seed", type=int, default=0)

    fac = sub.add_parser("factor", help="factor a polynomial over F_q")
    fac.add_argument("--q", type=int, required=True, help="field size, an odd prime power")
    fac.add_argument("--poly", required=True, help="polynomial to factor")
    fac.add_argument("--modulus", help="extension modulus over F_p (required for q = p^e, e > 1)")
    fac.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_report(args) -> int:
    cfg = load_config(args.config)
    report = run_report(cfg, cyclotomic_only=args.cyclotomic_only,
                        ignore_term_cap=args.force_a_pq)
    text = render_json(report) if args.format == "json" else render_text(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_selfcheck(args) -> int:
    results = run_selfcheck(args.scope, args.seed)
    ok = True
    for res in results:
        if res.passed:
            print(f"ok   {res.name}  cases={res.cases}")
        else:
            ok = False
            print(f"FAIL {res.name}  cases={res.cases}  "
                  f"failures={len(res.failures)}")
            for failure in res.failures[:10]:
                print(f"     {failure}")
    total = sum(r.cases for r in results)
    good = sum(1 for r in results if r.passed)
    print(f"selfcheck {args.scope}: {good}/{len(results)} suites passed, "
          f"{total} cases")
    return EXIT_OK if ok else EXIT_SELFCHECK


def _split_prime_power(q: int) -> tuple[int, int]:
    if q < 3:
        raise ConfigError(f"q must be an odd prime power >= 3, got {q}")
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    assert p is not None
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ConfigError(f"q = {q} is not a prime power")
    return p, e


def _cmd_factor(args) -> int:
    p, e = _split_prime_power(args.q)
    base = field_create(p)
    if e == 1:
        ctx = base
    else:
        if not args.modulus:
            raise ConfigError(f"q = {args.q} = {p}^{e} needs --modulus")
        ctx = field_create(p, e, list(parse_poly(base, args.modulus).coeffs))
    f = parse_poly(ctx, args.poly)
    fz = poly_factor(f, random.Random(args.seed))
    out = {
        "q": ctx.q,
        "poly": {"coeffs": list(f.coeffs), "str": format_poly(f)},
        "lead": fz.lead,
        "factors": [{"prime": {"coeffs": list(pp.prime.coeffs),
                               "str": format_poly(pp.prime)},
                     "exp": pp.exp, "degree": pp.d} for pp in fz.factors],
    }
    print(json.dumps(out, sort_keys=True, indent=2))
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "report":
            return _cmd_report(args)
        if args.command == "selfcheck":
            return _cmd_selfcheck(args)
        return _cmd_factor(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
