"""The cyclotomic layer: conductor data, Galois structure, and genus.

For a monic nonconstant conductor M = prod P_i**r_i the layer generated by
the M-division points of the Carlitz module is abelian over F_q(T) with
group (A/M)*. Its genus is computed along two deliberately separate paths:

* genus_closed_form() evaluates the closed formula directly;
* genus_riemann_hurwitz() assembles the different divisor degree from the
  per-prime coefficients and the infinite places, then applies
  Riemann-Hurwitz.

The two are algebraically equal; equality is asserted in tests, never
assumed in code, so a transcription slip in either one is caught.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    FieldCtx,
    Factorization,
    Poly,
    PrimePower,
    one,
    poly_factor,
    poly_is_irreducible,
    poly_phi,
)
from .algebra.factor import _CmpKey
from .errors import (
    ConstantConductor,
    DuplicatePrime,
    NonIntegerGenus,
    NotMonic,
    ReducibleClaimedPrime,
    ValidationError,
)


@dataclass(frozen=True)
class Conductor:
    """Validated, canonically sorted factorization of a monic conductor."""

    factors: tuple[PrimePower, ...]
    M: Poly
    phi: int
    degM: int

    @property
    def ctx(self) -> FieldCtx:
        return self.M.ctx

    def cofactor_phi(self, pp: PrimePower) -> int:
        """Phi of M with the pp-component removed."""
        return poly_phi(self.ctx, [f for f in self.factors if f.prime != pp.prime])


def conductor_create(ctx: FieldCtx, spec, rng: random.Random | None = None) -> Conductor:
    """Build a Conductor from a monic polynomial or a claimed factorization.

    spec may be a Poly (factored here), a Factorization, or a sequence of
    (prime, exponent) pairs. Claimed primes are always re-validated.
    """
    if isinstance(spec, Poly):
        if spec.is_zero or spec.is_constant:
            raise ConstantConductor(f"conductor must be nonconstant, got {spec}")
        if not spec.monic:
            raise NotMonic(f"conductor must be monic, got {spec}")
        pairs = [(pp.prime, pp.exp) for pp in poly_factor(spec, rng).factors]
    elif isinstance(spec, Factorization):
        if spec.lead != 1:
            raise NotMonic("conductor factorization must have leading coefficient 1")
        pairs = [(pp.prime, pp.exp) for pp in spec.factors]
    else:
        pairs = [(prime, int(exp)) for prime, exp in spec]

    if not pairs:
        raise ConstantConductor("conductor must have at least one prime factor")
    seen = set()
    checked: list[tuple[Poly, int]] = []
    for prime, exp in pairs:
        if prime.ctx._key != ctx._key:
            raise ValidationError(f"prime {prime} belongs to a different field")
        if exp < 1:
            raise ValidationError(f"prime exponent must be >= 1, got {exp}")
        if not prime.monic:
            raise NotMonic(f"claimed prime {prime} is not monic")
        if not poly_is_irreducible(prime):
            raise ReducibleClaimedPrime(f"claimed prime {prime} is reducible")
        if prime.coeffs in seen:
            raise DuplicatePrime(f"prime {prime} listed twice")
        seen.add(prime.coeffs)
        checked.append((prime, exp))
    checked.sort(key=_CmpKey)

    factors = tuple(PrimePower.make(prime, exp) for prime, exp in checked)
    m = one(ctx)
    for pp in factors:
        m = m * pp.prime ** pp.exp
    return Conductor(factors=factors, M=m, phi=poly_phi(ctx, factors), degM=m.degree)


@dataclass(frozen=True)
class GaloisStructure:
    """Structure of the abelian group (A/M)*: one cyclic factor of order
    |P_i| - 1 per prime, plus a p-part reported by its order."""

    cyclic_orders: tuple[int, ...]
    p_part_order: int
    total_order: int


def galois_structure(cond: Conductor) -> GaloisStructure:
    ctx = cond.ctx
    cyclic = tuple(pp.norm - 1 for pp in cond.factors)
    p_part = 1
    for pp in cond.factors:
        p_part *= pp.norm ** (pp.exp - 1)
    total = cond.phi
    prod = p_part
    for c in cyclic:
        prod *= c
    if prod != total:
        raise NonIntegerGenus(  # pragma: no cover - arithmetic identity
            "unit group order bookkeeping failed")
    return GaloisStructure(cyclic_orders=cyclic, p_part_order=p_part, total_order=total)


@dataclass(frozen=True)
class PrimeDifferent:
    """Ramification data of one conductor prime in the cyclotomic layer."""

    prime: Poly
    d: int
    r: int
    s: int          # different coefficient of every place above the prime
    phi_cofactor: int  # Phi(M / prime**r) = (number of places) * (residue degree)


@dataclass(frozen=True)
class DifferentData:
    per_prime: tuple[PrimeDifferent, ...]
    infinite_count: int       # Phi(M) / (q - 1) places at infinity
    infinite_coefficient: int  # each contributes q - 2 to the different


def different_data(cond: Conductor) -> DifferentData:
    ctx = cond.ctx
    rows = []
    for pp in cond.factors:
        local_phi = ctx.q ** (pp.d * (pp.exp - 1)) * (ctx.q ** pp.d - 1)
        s = pp.exp * local_phi - ctx.q ** (pp.d * (pp.exp - 1))
        rows.append(PrimeDifferent(prime=pp.prime, d=pp.d, r=pp.exp, s=s,
                                   phi_cofactor=cond.cofactor_phi(pp)))
    if cond.phi % ctx.w != 0:
        raise NonIntegerGenus("q - 1 must divide Phi(M)")  # pragma: no cover
    return DifferentData(per_prime=tuple(rows),
                         infinite_count=cond.phi // ctx.w,
                         infinite_coefficient=ctx.q - 2)


def _as_genus(value: Fraction, where: str) -> int:
    if value.denominator != 1:
        raise NonIntegerGenus(f"{where} evaluated to non-integer {value}")
    g = int(value)
    if g < 0:
        raise NonIntegerGenus(f"{where} evaluated to negative genus {g}")
    return g


def genus_closed_form(cond: Conductor) -> int:
    """Genus of the cyclotomic layer via the closed formula
    [(q-2)/(2(q-1)) - 1] * Phi(M) + (1/2) sum s_i d_i Phi(M/P_i^{r_i}) + 1."""
    ctx = cond.ctx
    dd = different_data(cond)
    g = (Fraction(ctx.q - 2, 2 * ctx.w) - 1) * cond.phi
    g += Fraction(1, 2) * sum(row.s * row.d * row.phi_cofactor for row in dd.per_prime)
    g += 1
    return _as_genus(g, "closed-form genus")


def genus_riemann_hurwitz(cond: Conductor) -> int:
    """Same genus assembled the long way: degree of the different divisor
    (finite rows plus infinite places) into 2g - 2 = -2*Phi(M) + deg D."""
    ctx = cond.ctx
    dd = different_data(cond)
    deg_different = sum(row.s * row.d * row.phi_cofactor for row in dd.per_prime)
    deg_different += dd.infinite_coefficient * dd.infinite_count
    two_g_minus_2 = -2 * cond.phi + deg_different
    return _as_genus(Fraction(two_g_minus_2 + 2, 2), "Riemann-Hurwitz genus")
