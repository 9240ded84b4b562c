from __future__ import annotations

import itertools
import random

import pytest

from qcff.algebra import (
    PrimePower,
    field_create,
    monic_irreducibles,
    one,
    poly_gcd,
    var_T,
)
from qcff.errors import BadFactorization, EqualPrimes, NotCoprime, NotPrimeModulus
from qcff.symbols import check_reciprocity, jacobi_symbol, residue_symbol

from .oracles import all_polys_below, power_residue_set


def test_symbol_examples(ctx3, mk):
    assert residue_symbol(one(ctx3), mk(ctx3, "T^2+1")).value == 1
    assert residue_symbol(var_T(ctx3), mk(ctx3, "T+1")).value == 2  # T = -1 mod T+1
    assert residue_symbol(var_T(ctx3), mk(ctx3, "T^2+1")).value == 1


def test_symbol_value_carries_consistent_dlog(ctx5, mk):
    s = residue_symbol(var_T(ctx5), mk(ctx5, "T+1"))
    assert ctx5.exp[s.dlog] == s.value


def test_symbol_rejects_noncoprime_and_bad_modulus(ctx3, mk):
    with pytest.raises(NotCoprime):
        residue_symbol(var_T(ctx3), var_T(ctx3))
    with pytest.raises(NotPrimeModulus):
        residue_symbol(one(ctx3), mk(ctx3, "2*T+1"))  # not monic
    with pytest.raises(NotPrimeModulus):
        residue_symbol(var_T(ctx3), mk(ctx3, "T^2+2"), validate=True)  # reducible


def test_symbol_multiplicative_in_upper_entry(ctx3, mk):
    r = mk(ctx3, "T^2+1")
    rng = random.Random(5)
    residues = [a for a in all_polys_below(ctx3, 4)
                if poly_gcd(a, r).degree == 0]
    for _ in range(100):
        a, b = rng.choice(residues), rng.choice(residues)
        lhs = residue_symbol(a * b, r)
        assert lhs.value == ctx3.kernel.fmul(residue_symbol(a, r).value,
                                             residue_symbol(b, r).value)
        assert lhs.dlog == (residue_symbol(a, r).dlog + residue_symbol(b, r).dlog) % ctx3.w


def test_symbol_depends_only_on_residue(ctx3, mk):
    r = mk(ctx3, "T^2+T+2")
    for a in all_polys_below(ctx3, 2):
        if a.is_zero:
            continue
        shifted = a + r * mk(ctx3, "T^2+2*T+1")
        assert residue_symbol(a, r).value == residue_symbol(shifted, r).value


def test_character_property_exhaustive_f3(ctx3):
    # symbol is 1 exactly on (q-1)-th powers, deg R <= 2
    for r in monic_irreducibles(ctx3, 2):
        powers = power_residue_set(ctx3, r)
        for a in all_polys_below(ctx3, r.degree):
            if a.is_zero:
                continue
            assert (residue_symbol(a, r).value == 1) == (a.coeffs in powers)


def test_jacobi_examples(ctx3, mk):
    t = var_T(ctx3)
    b = mk(ctx3, "T+1") * mk(ctx3, "T+2")
    factors = [PrimePower.make(mk(ctx3, "T+1"), 1), PrimePower.make(mk(ctx3, "T+2"), 1)]
    assert jacobi_symbol(t, b, factors).value == 2
    assert jacobi_symbol(t, one(ctx3), []).value == 1
    sq = mk(ctx3, "T+1") ** 2
    assert jacobi_symbol(t, sq, [PrimePower.make(mk(ctx3, "T+1"), 2)]).value == 1


def test_jacobi_agrees_with_residue_symbol_on_primes(ctx3):
    for r in monic_irreducibles(ctx3, 2):
        for a in all_polys_below(ctx3, 2):
            if a.is_zero or poly_gcd(a, r).degree != 0:
                continue
            direct = residue_symbol(a, r)
            via_jacobi = jacobi_symbol(a, r, [PrimePower.make(r, 1)])
            assert direct == via_jacobi


def test_jacobi_rejects_wrong_factorization(ctx3, mk):
    with pytest.raises(BadFactorization):
        jacobi_symbol(var_T(ctx3), mk(ctx3, "T+1"),
                      [PrimePower.make(mk(ctx3, "T+2"), 1)])


def test_jacobi_rejects_noncoprime(ctx3, mk):
    b = mk(ctx3, "T+1")
    with pytest.raises(NotCoprime):
        jacobi_symbol(b, b, [PrimePower.make(b, 1)])


def test_reciprocity_examples(ctx3, ctx5, mk):
    assert check_reciprocity(var_T(ctx3), mk(ctx3, "T+1"))
    assert check_reciprocity(var_T(ctx3), mk(ctx3, "T^2+1"))
    assert check_reciprocity(var_T(ctx5), mk(ctx5, "T+1"))


def test_reciprocity_exhaustive_small(ctx3, ctx5):
    for ctx, maxdeg in ((ctx3, 3), (ctx5, 2)):
        for a, b in itertools.combinations(monic_irreducibles(ctx, maxdeg), 2):
            assert check_reciprocity(a, b, validate=False)


def test_reciprocity_rejects_equal_primes(ctx3):
    with pytest.raises(EqualPrimes):
        check_reciprocity(var_T(ctx3), var_T(ctx3))
