"""Exhaustive property suites, runnable from the CLI.

Each suite checks one mathematical law on a small exhaustive range (or a
seeded random sample) and reports case counts plus failures. The "small"
scope covers the cheap exhaustive suites over F_3; "full" adds F_5/F_9
ranges, the degree-4 genus sweep, and the factorization round trip.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra import (
    FieldCtx,
    Poly,
    field_create,
    format_poly,
    monic_irreducibles,
    monic_of_degree,
    one,
    poly_factor,
    poly_gcd,
    poly_is_irreducible,
    poly_phi,
)
from .cyclotomic import conductor_create, genus_closed_form, genus_riemann_hurwitz
from .kummer import (
    genus_hasse_formula,
    genus_riemann_hurwitz as kummer_genus_rh,
    pairset_create,
    parity_consistency,
    ramification_table,
)
from .symbols import check_reciprocity, residue_symbol


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def _all_polys_below(ctx: FieldCtx, d: int):
    for coeffs in itertools.product(range(ctx.q), repeat=d):
        yield Poly(ctx, list(coeffs))


def suite_reciprocity(ctx: FieldCtx, max_degree: int) -> SuiteResult:
    """(second/first) == (-1)^(d1*d2) * (first/second) over every distinct
    monic prime pair up to the degree bound."""
    primes = list(monic_irreducibles(ctx, max_degree))
    failures = []
    cases = 0
    for a, b in itertools.combinations(primes, 2):
        cases += 1
        if not check_reciprocity(a, b, validate=False):
            failures.append(f"({format_poly(a)}, {format_poly(b)})")
    return SuiteResult(f"reciprocity q={ctx.q} deg<={max_degree}", cases, failures)


def suite_phi_bruteforce(ctx: FieldCtx, max_degree: int) -> SuiteResult:
    """poly_phi against a direct count of coprime residues."""
    failures = []
    cases = 0
    for d in range(1, max_degree + 1):
        for m in monic_of_degree(ctx, d):
            cases += 1
            count = sum(1 for r in _all_polys_below(ctx, d)
                        if not r.is_zero and poly_gcd(r, m).degree == 0)
            expected = poly_phi(ctx, poly_factor(m).factors)
            if count != expected:
                failures.append(f"{format_poly(m)}: brute {count} != {expected}")
    return SuiteResult(f"phi-bruteforce q={ctx.q} degM<={max_degree}", cases, failures)


def suite_symbol_character(ctx: FieldCtx, max_degree: int) -> SuiteResult:
    """The residue symbol is 1 exactly on (q-1)-th power residues."""
    failures = []
    cases = 0
    for r in monic_irreducibles(ctx, max_degree):
        residues = [a for a in _all_polys_below(ctx, r.degree) if not a.is_zero]
        powers = set()
        for x in residues:
            acc = one(ctx)
            for _ in range(ctx.w):
                acc = (acc * x) % r
            powers.add(acc.coeffs)
        for a in residues:
            cases += 1
            is_power = a.coeffs in powers
            symbol_trivial = residue_symbol(a, r).value == 1
            if is_power != symbol_trivial:
                failures.append(f"({format_poly(a)} / {format_poly(r)})")
    return SuiteResult(f"symbol-character q={ctx.q} degR<={max_degree}", cases, failures)


def suite_parity(ctx: FieldCtx, max_degree: int) -> SuiteResult:
    """For single pairs with even degree product, both ramification indices
    agree. Cases count only pairs where the hypothesis applies."""
    primes = list(monic_irreducibles(ctx, max_degree))
    failures = []
    cases = 0
    for a, b in itertools.combinations(primes, 2):
        if (a.degree * b.degree) % 2 != 0:
            continue
        cases += 1
        cond = conductor_create(ctx, [(a, 1), (b, 1)])
        pairs = pairset_create(cond, [(a, b)])
        verdict = parity_consistency(pairs, ramification_table(cond, pairs))
        if not verdict.passed:
            failures.append(f"({format_poly(a)}, {format_poly(b)}): "
                            f"e={verdict.e_first} vs e={verdict.e_second}")
    return SuiteResult(f"parity q={ctx.q} deg<={max_degree}", cases, failures)


def suite_genus_paths(ctx: FieldCtx, max_degree: int) -> SuiteResult:
    """Both genus paths agree on every conductor up to the degree bound, and
    both Kummer genus paths agree for every admissible single pair."""
    failures = []
    cases = 0
    for d in range(1, max_degree + 1):
        for m in monic_of_degree(ctx, d):
            cond = conductor_create(ctx, m, random.Random(0))
            cases += 1
            g_closed = genus_closed_form(cond)
            g_rh = genus_riemann_hurwitz(cond)
            if g_closed != g_rh:
                failures.append(f"M={format_poly(m)}: {g_closed} != {g_rh}")
                continue
            for i, j in itertools.combinations(range(len(cond.factors)), 2):
                pairs = pairset_create(cond, [(cond.factors[i].prime,
                                               cond.factors[j].prime)])
                ram = ramification_table(cond, pairs)
                cases += 1
                g_hasse = genus_hasse_formula(cond, pairs, g_closed, ram)
                g_kummer_rh = kummer_genus_rh(cond, pairs, g_closed, ram)
                if g_hasse != g_kummer_rh:
                    failures.append(
                        f"M={format_poly(m)} pair "
                        f"({format_poly(cond.factors[i].prime)}, "
                        f"{format_poly(cond.factors[j].prime)}): "
                        f"{g_hasse} != {g_kummer_rh}")
    return SuiteResult(f"genus-paths q={ctx.q} degM<={max_degree}", cases, failures)


def suite_factor_roundtrip(ctx: FieldCtx, count: int, max_degree: int,
                           rng: random.Random) -> SuiteResult:
    """Random polynomials factor, multiply back exactly, and every reported
    prime passes the irreducibility test."""
    failures = []
    for _ in range(count):
        d = rng.randint(1, max_degree)
        coeffs = [rng.randrange(ctx.q) for _ in range(d)]
        coeffs.append(rng.randrange(1, ctx.q))
        f = Poly(ctx, coeffs)
        fz = poly_factor(f, rng)
        if fz.product(ctx) != f:
            failures.append(f"{format_poly(f)}: product mismatch")
            continue
        for pp in fz.factors:
            if not pp.prime.monic or not poly_is_irreducible(pp.prime):
                failures.append(f"{format_poly(f)}: bad prime {format_poly(pp.prime)}")
    return SuiteResult(f"factor-roundtrip q={ctx.q} n={count} deg<={max_degree}",
                       count, failures)


def run_selfcheck(scope: str = "small", seed: int = 0) -> list[SuiteResult]:
    """Run the suites for the given scope; "full" includes everything."""
    if scope not in ("small", "full"):
        raise ValueError(f"scope must be 'small' or 'full', got {scope!r}")
    f3 = field_create(3)
    results = [
        suite_reciprocity(f3, 3),
        suite_phi_bruteforce(f3, 3),
        suite_symbol_character(f3, 2),
        suite_parity(f3, 3),
        suite_genus_paths(f3, 3),
    ]
    if scope == "full":
        f5 = field_create(5)
        f9 = field_create(3, 2, [1, 0, 1])
        rng = random.Random(seed)
        results += [
            suite_reciprocity(f5, 2),
            suite_parity(f5, 3),
            suite_genus_paths(f3, 4),
            suite_factor_roundtrip(f3, 1000, 8, rng),
            suite_factor_roundtrip(f5, 1000, 8, rng),
            suite_factor_roundtrip(f9, 1000, 8, rng),
        ]
    return results
