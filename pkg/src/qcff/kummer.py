"""The (q-1)-th Kummer layer over the cyclotomic base.

Given a conductor and an ordered set of prime pairs, this module computes
everything attached to the degree-(q-1) Kummer extension the pairs define:
the formal sum attached to each pair, the ramification indices of the
finite conductor primes, the Galois group of the whole tower over F_q(T)
by generators and relations, and the genus (again via two independent
paths: Hasse's closed Kummer formula and Riemann-Hurwitz on the Kummer
step).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import (
    Poly,
    PrimePower,
    enumerate_monic_below,
    one,
    poly_cmp,
    poly_gcd,
    poly_is_irreducible,
)
from .cyclotomic import Conductor, galois_structure
from .errors import (
    BadPair,
    DuplicatePair,
    NonIntegerGenus,
    OnlySinglePairSupported,
    PairMembersEqual,
    PrimeNotInConductor,
    ValidationError,
    WrongOrientation,
)
from .symbols import jacobi_symbol


# -- pair sets ----------------------------------------------------------------

@dataclass(frozen=True)
class PairSet:
    """Ordered, validated prime pairs (first < second) over one conductor."""

    pairs: tuple[tuple[Poly, Poly], ...]
    firsts: dict[tuple, tuple[Poly, ...]]   # prime coeffs -> partners where prime is first
    seconds: dict[tuple, tuple[Poly, ...]]  # prime coeffs -> partners where prime is second

    def partners_as_first(self, prime: Poly) -> tuple[Poly, ...]:
        return self.firsts.get(prime.coeffs, ())

    def partners_as_second(self, prime: Poly) -> tuple[Poly, ...]:
        return self.seconds.get(prime.coeffs, ())

    def is_paired(self, prime: Poly) -> bool:
        return bool(self.partners_as_first(prime) or self.partners_as_second(prime))


def pairset_create(cond: Conductor, raw: Sequence[tuple[Poly, Poly]]) -> PairSet:
    """Validate raw (first, second) pairs against the conductor.

    Orientation first < second is required, never auto-corrected: the formal
    sum and the commutator relation both change under a flip.
    """
    if not raw:
        raise ValidationError("pair set must be nonempty")
    conductor_primes = {pp.prime.coeffs for pp in cond.factors}
    seen = set()
    pairs = []
    firsts: dict[tuple, list[Poly]] = {}
    seconds: dict[tuple, list[Poly]] = {}
    for p_first, p_second in raw:
        for member in (p_first, p_second):
            if member.ctx._key != cond.ctx._key:
                raise ValidationError(f"{member} belongs to a different field")
            if member.coeffs not in conductor_primes:
                raise PrimeNotInConductor(f"{member} is not a prime of the conductor")
        if p_first == p_second:
            raise PairMembersEqual(f"pair members must differ, got {p_first} twice")
        if poly_cmp(p_first, p_second) > 0:
            raise WrongOrientation(
                f"pair ({p_first}, {p_second}) must be listed as ({p_second}, {p_first})")
        key = (p_first.coeffs, p_second.coeffs)
        if key in seen:
            raise DuplicatePair(f"pair ({p_first}, {p_second}) listed twice")
        seen.add(key)
        pairs.append((p_first, p_second))
        firsts.setdefault(p_first.coeffs, []).append(p_second)
        seconds.setdefault(p_second.coeffs, []).append(p_first)
    return PairSet(pairs=tuple(pairs),
                   firsts={k: tuple(v) for k, v in firsts.items()},
                   seconds={k: tuple(v) for k, v in seconds.items()})


# -- formal sums ----------------------------------------------------------------

@dataclass(frozen=True)
class FracClass:
    """Canonical nonzero class in k/A: a reduced proper fraction num/den with
    den monic nonconstant, gcd(num, den) = 1 and deg num < deg den."""

    num: Poly
    den: Poly


def reduce_fraction(num: Poly, den: Poly) -> FracClass | None:
    """Reduce num/den to its canonical class; None when the class lies in A."""
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num // g
        den = den // g
    if den.is_constant:
        return None
    if not den.monic:
        inv = den.ctx.kernel.finv(den.lc)
        num = num.scale(inv)
        den = den.scale(inv)
    num = num % den
    if num.is_zero:
        return None
    return FracClass(num=num, den=den)


@dataclass(frozen=True)
class FormalSum:
    """Integer combination of k/A classes, with the raw (pre-reduction) term
    count preserved for diagnostics."""

    terms: tuple[tuple[FracClass, int], ...]
    raw_terms: int

    def coefficient(self, cls: FracClass) -> int:
        for c, n in self.terms:
            if c == cls:
                return n
        return 0


class _SumBuilder:
    def __init__(self):
        self.acc: dict[FracClass, int] = {}
        self.raw = 0

    def add(self, cls: FracClass | None, coeff: int) -> None:
        self.raw += 1
        if cls is None or coeff == 0:
            return
        n = self.acc.get(cls, 0) + coeff
        if n:
            self.acc[cls] = n
        else:
            del self.acc[cls]

    def finish(self) -> FormalSum:
        items = sorted(self.acc.items(),
                       key=lambda kv: (_PolyKey(kv[0].den), _PolyKey(kv[0].num)))
        return FormalSum(terms=tuple(items), raw_terms=self.raw)


class _PolyKey:
    __slots__ = ("poly",)

    def __init__(self, poly: Poly):
        self.poly = poly

    def __lt__(self, other: "_PolyKey") -> bool:
        return poly_cmp(self.poly, other.poly) < 0

    def __eq__(self, other) -> bool:
        return poly_cmp(self.poly, other.poly) == 0


def raw_term_count(ctx, d_first: int, d_second: int) -> int:
    """Terms generated by the defining triple sum before any reduction:
    (q-2) * #[monic below d_second] * #[monic below d_first] * 2."""
    n_a = (ctx.q ** d_second - 1) // ctx.w
    n_b = (ctx.q ** d_first - 1) // ctx.w
    return (ctx.q - 2) * n_a * n_b * 2


def pair_formal_sum(p_first: Poly, p_second: Poly) -> FormalSum:
    """The formal k/A sum attached to an oriented prime pair.

    Sums s * ([ (B*Q + gamma^{-s} A) / (P*Q) ] - [ (A*P + gamma^{-s} B) / (P*Q) ])
    over monic A with deg A < deg Q, monic B with deg B < deg P, and
    s = 1..q-2, where (P, Q) is the oriented pair. Every fraction is reduced
    to its canonical class; classes that land in A are dropped.
    """
    ctx = p_first.ctx
    _validate_pair(p_first, p_second)
    den = p_first * p_second
    out = _SumBuilder()
    for a in enumerate_monic_below(ctx, p_second.degree):
        ap = a * p_first
        for b in enumerate_monic_below(ctx, p_first.degree):
            bq = b * p_second
            for s in range(1, ctx.q - 1):
                gamma_minus_s = ctx.gamma_pow(-s)
                out.add(reduce_fraction(bq + a.scale(gamma_minus_s), den), s)
                out.add(reduce_fraction(ap + b.scale(gamma_minus_s), den), -s)
    return out.finish()


def _validate_pair(p_first: Poly, p_second: Poly) -> None:
    for member in (p_first, p_second):
        if member.is_zero or member.is_constant or not member.monic \
                or not poly_is_irreducible(member):
            raise BadPair(f"{member} is not a monic prime")
    if p_first == p_second:
        raise BadPair("pair members must be distinct")
    if poly_cmp(p_first, p_second) > 0:
        raise BadPair(f"pair ({p_first}, {p_second}) has the wrong orientation")


# -- ramification -----------------------------------------------------------------

@dataclass(frozen=True)
class PairParity:
    """Degree parities of one pair, recording which square root multiplies the
    Kummer unit: none, the first prime, the second, or their product."""

    pair: tuple[Poly, Poly]
    d_first_mod2: int
    d_second_mod2: int
    radicand: Poly | None


def _pair_parity(p_first: Poly, p_second: Poly) -> PairParity:
    m1, m2 = p_first.degree % 2, p_second.degree % 2
    if (m1, m2) == (0, 0):
        radicand = None
    elif (m1, m2) == (0, 1):
        radicand = p_first
    elif (m1, m2) == (1, 0):
        radicand = p_second
    else:
        radicand = p_first * p_second
    return PairParity(pair=(p_first, p_second), d_first_mod2=m1,
                      d_second_mod2=m2, radicand=radicand)


@dataclass(frozen=True)
class RamRow:
    prime: Poly
    vbar: int  # class mod w of the Kummer unit's valuation at the prime
    e: int     # ramification index in the Kummer step: w / gcd(w, vbar)


@dataclass(frozen=True)
class RamTable:
    rows: tuple[RamRow, ...]
    pair_parities: tuple[PairParity, ...]

    def row_for(self, prime: Poly) -> RamRow:
        for row in self.rows:
            if row.prime == prime:
                return row
        raise ValidationError(f"{prime} has no ramification row")

    def e_for(self, prime: Poly) -> int:
        return self.row_for(prime).e


def ramification_table(cond: Conductor, pairs: PairSet) -> RamTable:
    """Valuation classes and ramification indices of every conductor prime.

    For a prime L the valuation of the Kummer unit is, mod w,
    dlog jacobi(L over prod of partners-with-L-first) minus
    dlog jacobi(L over prod of partners-with-L-second); the ramification
    index is w / gcd(w, that class), with gcd(w, 0) = w giving e = 1.
    """
    ctx = cond.ctx
    rows = []
    for pp in cond.factors:
        first_part = _combined_dlog(pp.prime, pairs.partners_as_first(pp.prime))
        second_part = _combined_dlog(pp.prime, pairs.partners_as_second(pp.prime))
        vbar = (first_part - second_part) % ctx.w
        e = ctx.w // math.gcd(ctx.w, vbar)
        rows.append(RamRow(prime=pp.prime, vbar=vbar, e=e))
    parities = tuple(_pair_parity(a, b) for a, b in pairs.pairs)
    return RamTable(rows=tuple(rows), pair_parities=parities)


def _combined_dlog(prime: Poly, partners: Sequence[Poly]) -> int:
    ctx = prime.ctx
    if not partners:
        return 0
    lower = one(ctx)
    factors = []
    for partner in partners:
        lower = lower * partner
        factors.append(PrimePower.make(partner, 1))
    return jacobi_symbol(prime, lower, factors).dlog


@dataclass(frozen=True)
class ParityReport:
    """Diagnostic for the even-degree-product rule: when 2 | d_P * d_Q the two
    ramification indices of a single pair must agree."""

    applicable: bool
    passed: bool
    e_first: int
    e_second: int
    d_first: int
    d_second: int


def parity_consistency(pairs: PairSet, ram: RamTable) -> ParityReport:
    if len(pairs.pairs) != 1:
        raise OnlySinglePairSupported(
            "the parity rule is stated for single-pair inputs")
    p_first, p_second = pairs.pairs[0]
    e1 = ram.e_for(p_first)
    e2 = ram.e_for(p_second)
    applicable = (p_first.degree * p_second.degree) % 2 == 0
    passed = (e1 == e2) if applicable else True
    return ParityReport(applicable=applicable, passed=passed,
                        e_first=e1, e_second=e2,
                        d_first=p_first.degree, d_second=p_second.degree)


# -- the Galois presentation -----------------------------------------------------

@dataclass(frozen=True)
class Generator:
    name: str
    prime: Poly
    base_order: int   # order of the residue generator at the prime: |P| - 1
    lift_order: int   # order of its lift: e(P) * base_order
    central: bool


@dataclass(frozen=True)
class Relation:
    """left * right = right * left * eps**(-1) for the named generators."""

    left: str
    right: str
    epsilon_exponent: int = -1


@dataclass(frozen=True)
class GroupPresentation:
    epsilon_order: int
    p_part_order: int
    group_order: int
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...]


def _generator_name(prime: Poly) -> str:
    return f"sigma[{prime}]"


def presentation(cond: Conductor, pairs: PairSet,
                 ram: RamTable | None = None) -> GroupPresentation:
    """Generators and relations of the Galois group of the full tower.

    One generator per conductor prime plus the central epsilon of order w;
    paired generators satisfy one commutator relation per pair and their
    lift orders are stretched by the ramification index; everything else
    commutes. The p-part is central and reported by its order.
    """
    ctx = cond.ctx
    if ram is None:
        ram = ramification_table(cond, pairs)
    structure = galois_structure(cond)
    gens = []
    for pp in cond.factors:
        base = pp.norm - 1
        e = ram.e_for(pp.prime)
        gens.append(Generator(name=_generator_name(pp.prime), prime=pp.prime,
                              base_order=base, lift_order=e * base,
                              central=not pairs.is_paired(pp.prime)))
    relations = tuple(Relation(left=_generator_name(a), right=_generator_name(b))
                      for a, b in pairs.pairs)
    return GroupPresentation(epsilon_order=ctx.w,
                             p_part_order=structure.p_part_order,
                             group_order=ctx.w * cond.phi,
                             generators=tuple(gens),
                             relations=relations)


# -- genus of the Kummer layer -----------------------------------------------------

def _paired_rows(cond: Conductor, pairs: PairSet, ram: RamTable) -> Iterator[tuple[PrimePower, RamRow]]:
    for pp in cond.factors:
        if pairs.is_paired(pp.prime):
            yield pp, ram.row_for(pp.prime)


def _as_genus(value: Fraction, where: str) -> int:
    if value.denominator != 1:
        raise NonIntegerGenus(f"{where} evaluated to non-integer {value}")
    g = int(value)
    if g < 0:
        raise NonIntegerGenus(f"{where} evaluated to negative genus {g}")
    return g


def genus_hasse_formula(cond: Conductor, pairs: PairSet, base_genus: int,
                        ram: RamTable | None = None) -> int:
    """Hasse's closed Kummer-extension formula, with every prime that occurs
    in at least one pair contributing (1 - 1/e(L)) * d_L * Phi(M/L^{r_L}) / 2.
    Infinite places are unramified in this step and the constant field does
    not grow, so the leading factor is exactly w."""
    ctx = cond.ctx
    if ram is None:
        ram = ramification_table(cond, pairs)
    total = Fraction(base_genus - 1)
    for pp, row in _paired_rows(cond, pairs, ram):
        total += Fraction(1, 2) * (1 - Fraction(1, row.e)) * pp.d * cond.cofactor_phi(pp)
    return _as_genus(1 + ctx.w * total, "Kummer closed-form genus")


def genus_riemann_hurwitz(cond: Conductor, pairs: PairSet, base_genus: int,
                          ram: RamTable | None = None) -> int:
    """The same genus from Riemann-Hurwitz on the tame Kummer step:
    2g - 2 = w(2g_base - 2) + sum (e(L)-1) * (w/e(L)) * d_L * Phi(M/L^{r_L}),
    using that the places above L have total degree d_L * Phi(M/L^{r_L})."""
    ctx = cond.ctx
    if ram is None:
        ram = ramification_table(cond, pairs)
    deg_different = 0
    for pp, row in _paired_rows(cond, pairs, ram):
        if ctx.w % row.e != 0:
            raise NonIntegerGenus(f"e = {row.e} does not divide w = {ctx.w}")  # pragma: no cover
        deg_different += (row.e - 1) * (ctx.w // row.e) * pp.d * cond.cofactor_phi(pp)
    two_g_minus_2 = ctx.w * (2 * base_genus - 2) + deg_different
    return _as_genus(Fraction(two_g_minus_2 + 2, 2), "Kummer Riemann-Hurwitz genus")
