"""Field contexts for F_q, q = p^e with p an odd prime.

Elements are encoded as integers in [0, q): the encoding of an element with
little-endian polynomial-basis digits (d_0, ..., d_{e-1}) over F_p is
sum d_i * p^i. This makes the element order deterministic, which pins down
both the canonical generator gamma and the total order on polynomials.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from .._kernels import FieldKernel
from ..errors import (
    EvenCharacteristic,
    LogOfZero,
    MissingModulus,
    NonPrimeP,
    ReducibleModulus,
    ValidationError,
)

# Addition tables are precomputed for fields up to this size (q*q ints).
_ADD_TABLE_MAX_Q = 256


def is_prime_int(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_divisors_int(n: int) -> list[int]:
    """Distinct prime divisors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _enc_to_digits(x: int, p: int, e: int) -> tuple[int, ...]:
    digits = []
    for _ in range(e):
        x, r = divmod(x, p)
        digits.append(r)
    return tuple(digits)


def _digits_to_enc(digits: Sequence[int], p: int) -> int:
    enc = 0
    for d in reversed(digits):
        enc = enc * p + d
    return enc


def _raw_mul(a: int, b: int, p: int, e: int, modulus: Sequence[int] | None) -> int:
    """Schoolbook product of encoded elements, used only to bootstrap tables."""
    if e == 1:
        return (a * b) % p
    da = _enc_to_digits(a, p, e)
    db = _enc_to_digits(b, p, e)
    conv = [0] * (2 * e - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                conv[i + j] = (conv[i + j] + x * y) % p
    # reduce modulo the (monic) defining polynomial
    assert modulus is not None
    for k in range(len(conv) - 1, e - 1, -1):
        c = conv[k]
        if c:
            conv[k] = 0
            for j in range(e):
                conv[k - e + j] = (conv[k - e + j] - c * modulus[j]) % p
    return _digits_to_enc(conv[:e], p)


def _raw_pow(x: int, n: int, p: int, e: int, modulus: Sequence[int] | None) -> int:
    acc = 1
    while n > 0:
        if n & 1:
            acc = _raw_mul(acc, x, p, e, modulus)
        x = _raw_mul(x, x, p, e, modulus)
        n >>= 1
    return acc


class FieldCtx:
    """Immutable context for one finite field F_q.

    Carries the precomputed exp/log tables for the canonical generator,
    the kernel engine, and cached constants. Construct via field_create().
    """

    __slots__ = ("p", "e", "q", "w", "modulus", "gamma", "exp", "log",
                 "_neg", "_add_table", "kernel", "_key")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...] | None,
                 gamma: int, exp: tuple[int, ...], log: tuple[int, ...],
                 neg: tuple[int, ...], add_table: tuple[int, ...] | None):
        self.p = p
        self.e = e
        self.q = p ** e
        self.w = self.q - 1
        self.modulus = modulus
        self.gamma = gamma
        self.exp = exp
        self.log = log
        self._neg = neg
        self._add_table = add_table
        self.kernel = FieldKernel(p, e, self.q, self.w, exp, log, neg, add_table)
        self._key = (p, e, modulus)

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, p={self.p}, e={self.e}, gamma={self.gamma})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    # -- element helpers ------------------------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        """Little-endian base-p digit view of an encoded element."""
        self._check_elem(x)
        return _enc_to_digits(x, self.p, self.e)

    def from_digits(self, digits: Sequence[int]) -> int:
        if len(digits) != self.e or any(not 0 <= d < self.p for d in digits):
            raise ValidationError(f"digit vector must have length {self.e} with entries in [0, {self.p})")
        return _digits_to_enc(digits, self.p)

    def _check_elem(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.q:
            raise ValidationError(f"{x!r} is not an encoded element of F_{self.q}")

    def neg_const(self, x: int) -> int:
        self._check_elem(x)
        return self._neg[x]

    @property
    def minus_one(self) -> int:
        return self._neg[1]

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def dlog(self, x: int) -> int:
        """Discrete log base gamma; see fq_dlog()."""
        self._check_elem(x)
        if x == 0:
            raise LogOfZero("discrete log of zero")
        return self.log[x]

    def gamma_pow(self, i: int) -> int:
        """gamma**i for any integer i (reduced mod w)."""
        return self.exp[i % self.w]


def field_create(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Build the canonical context for F_{p^e}.

    The generator gamma is the first element in encoding order 2, 3, ...
    whose multiplicative order is exactly q - 1. For e > 1 a monic
    irreducible degree-e modulus over F_p is required (ascending
    coefficients, length e + 1).
    """
    if not isinstance(p, int) or not is_prime_int(p):
        raise NonPrimeP(f"p = {p!r} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not isinstance(e, int) or e < 1:
        raise ValidationError(f"extension degree must be a positive integer, got {e!r}")

    mod_tuple: tuple[int, ...] | None
    if e == 1:
        if modulus is not None:
            raise ValidationError("modulus must be omitted for prime fields (e = 1)")
        mod_tuple = None
    else:
        if modulus is None:
            raise MissingModulus(f"F_{p}^{e} needs an explicit degree-{e} modulus")
        mod_tuple = tuple(int(c) for c in modulus)
        if len(mod_tuple) != e + 1 or mod_tuple[-1] != 1:
            raise ValidationError(f"modulus must be monic of degree {e} (ascending coefficients)")
        if any(not 0 <= c < p for c in mod_tuple):
            raise ValidationError(f"modulus coefficients must lie in [0, {p})")
        if not _modulus_irreducible(p, mod_tuple):
            raise ReducibleModulus(f"modulus {list(mod_tuple)} is reducible over F_{p}")

    q = p ** e
    w = q - 1
    gamma = _find_generator(p, e, mod_tuple)

    exp = [1] * w
    for i in range(1, w):
        exp[i] = _raw_mul(exp[i - 1], gamma, p, e, mod_tuple)
    log = [-1] * q
    for i, v in enumerate(exp):
        if log[v] != -1:
            raise ValidationError(f"generator {gamma} does not have order {w}")
        log[v] = i
    if _raw_mul(exp[-1], gamma, p, e, mod_tuple) != 1:
        raise ValidationError(f"generator {gamma} does not have order {w}")

    if e == 1:
        neg = [(p - x) % p for x in range(p)]
    else:
        neg = [_digits_to_enc([(p - d) % p for d in _enc_to_digits(x, p, e)], p)
               for x in range(q)]

    add_table = None
    if q <= _ADD_TABLE_MAX_Q:
        if e == 1:
            add_table = [(a + b) % p for a in range(q) for b in range(q)]
        else:
            add_table = [0] * (q * q)
            for a in range(q):
                da = _enc_to_digits(a, p, e)
                for b in range(q):
                    db = _enc_to_digits(b, p, e)
                    add_table[a * q + b] = _digits_to_enc(
                        [(x + y) % p for x, y in zip(da, db)], p)

    return FieldCtx(p, e, mod_tuple, gamma, tuple(exp), tuple(log), tuple(neg),
                    tuple(add_table) if add_table is not None else None)


def _find_generator(p: int, e: int, modulus: tuple[int, ...] | None) -> int:
    q = p ** e
    w = q - 1
    checks = [w // ell for ell in prime_divisors_int(w)]
    for cand in range(2, q):
        if all(_raw_pow(cand, n, p, e, modulus) != 1 for n in checks):
            return cand
    raise ValidationError(f"no generator found for F_{q}")  # unreachable for true prime powers


def _modulus_irreducible(p: int, modulus: tuple[int, ...]) -> bool:
    # Rabin test over F_p, kept local to avoid a circular import with factor.py.
    base = field_create(p, 1)
    from .factor import poly_is_irreducible
    from .poly import Poly
    return poly_is_irreducible(Poly(base, modulus))


def fq_dlog(ctx: FieldCtx, x: int) -> int:
    """The unique i in [0, w) with gamma**i = x, for nonzero encoded x."""
    return ctx.dlog(x)


def fq_order(ctx: FieldCtx, x: int) -> int:
    """Multiplicative order of a nonzero element."""
    i = ctx.dlog(x)
    if i == 0:
        return 1
    return ctx.w // math.gcd(ctx.w, i)
