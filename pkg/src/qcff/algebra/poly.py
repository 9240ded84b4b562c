"""Polynomials over F_q: the ring the whole computation lives in.

A Poly is an immutable ascending coefficient tuple (encoded field elements,
no trailing zeros) bound to its FieldCtx. The zero polynomial has an empty
tuple and degree -1 (the distinguished "degree of zero" marker).
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from ..errors import (
    ConfigError,
    DivisionByZero,
    GcdOfZeros,
    NonpositiveBound,
    ValidationError,
)
from .field import FieldCtx


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[int]):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or not 0 <= c < ctx.q:
                raise ValidationError(f"coefficient {c!r} is not an encoded element of F_{ctx.q}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- structure -------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValidationError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx._key != self.ctx._key:
                raise ValidationError("polynomials belong to different fields")
            return other
        if isinstance(other, int):
            return Poly(self.ctx, [other] if other else [])
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _wrap(self.ctx, self.ctx.kernel.padd(list(self.coeffs), list(o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _wrap(self.ctx, self.ctx.kernel.psub(list(self.coeffs), list(o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return _wrap(self.ctx, self.ctx.kernel.pscale(list(self.coeffs), self.ctx.minus_one))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _wrap(self.ctx, self.ctx.kernel.pmul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        """Product with the encoded field element c."""
        self.ctx._check_elem(c)
        return _wrap(self.ctx, self.ctx.kernel.pscale(list(self.coeffs), c))

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("polynomial division by zero")
        q, r = self.ctx.kernel.pdivrem(list(self.coeffs), list(o.coeffs))
        return _wrap(self.ctx, q), _wrap(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("polynomial reduction by zero")
        return _wrap(self.ctx, self.ctx.kernel.prem(list(self.coeffs), list(o.coeffs)))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValidationError("polynomial powers must be nonnegative integers")
        acc = Poly(self.ctx, [1])
        base = self
        while n > 0:
            if n & 1:
                acc = acc * base
            n >>= 1
            if n:
                base = base * base
        return acc

    def to_monic(self) -> "Poly":
        return _wrap(self.ctx, self.ctx.kernel.pmonic(list(self.coeffs)))

    def derivative(self) -> "Poly":
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i]
            s = 0
            for _ in range(i % ctx.p):
                s = ctx.kernel.fadd(s, c)
            out.append(s)
        return _wrap(ctx, ctx.kernel.padd(out, []))

    def eval_at(self, x: int) -> int:
        """Horner evaluation at an encoded field element."""
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.kernel.fadd(ctx.kernel.fmul(acc, x), c)
        return acc

    # -- ordering / identity ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.ctx._key == other.ctx._key
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.ctx._key, self.coeffs))

    def __lt__(self, other) -> bool:
        return poly_cmp(self, other) < 0

    def __le__(self, other) -> bool:
        return poly_cmp(self, other) <= 0

    def __gt__(self, other) -> bool:
        return poly_cmp(self, other) > 0

    def __ge__(self, other) -> bool:
        return poly_cmp(self, other) >= 0

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, q={self.ctx.q})"

    def __str__(self) -> str:
        return format_poly(self)


def _wrap(ctx: FieldCtx, coeffs: list[int]) -> Poly:
    out = object.__new__(Poly)
    object.__setattr__(out, "ctx", ctx)
    object.__setattr__(out, "coeffs", tuple(coeffs))
    return out


# -- constructors ----------------------------------------------------------------

def poly(ctx: FieldCtx, coeffs: Sequence[int]) -> Poly:
    """Polynomial from ascending encoded coefficients."""
    return Poly(ctx, coeffs)


def zero(ctx: FieldCtx) -> Poly:
    return Poly(ctx, [])


def one(ctx: FieldCtx) -> Poly:
    return Poly(ctx, [1])


def var_T(ctx: FieldCtx) -> Poly:
    """The ring variable T."""
    return Poly(ctx, [0, 1])


def constant(ctx: FieldCtx, c: int) -> Poly:
    return Poly(ctx, [c] if c else [])


# -- the operation suite ------------------------------------------------------

def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is an error."""
    if a.is_zero and b.is_zero:
        raise GcdOfZeros("gcd(0, 0) is undefined")
    if a.ctx._key != b.ctx._key:
        raise ValidationError("polynomials belong to different fields")
    return _wrap(a.ctx, a.ctx.kernel.pgcd(list(a.coeffs), list(b.coeffs)))


def poly_powmod(a: Poly, n: int, m: Poly) -> Poly:
    """a**n reduced modulo the nonconstant polynomial m (square and multiply)."""
    if not isinstance(n, int) or n < 0:
        raise ValidationError("exponent must be a nonnegative integer")
    if m.is_zero:
        raise DivisionByZero("powmod modulus is zero")
    if m.is_constant:
        raise ValidationError("powmod modulus must be nonconstant")
    if a.ctx._key != m.ctx._key:
        raise ValidationError("polynomials belong to different fields")
    return _wrap(a.ctx, a.ctx.kernel.ppowmod(list(a.coeffs), n, list(m.coeffs)))


def poly_cmp(a: Poly, b: Poly) -> int:
    """Canonical strict total order: degree first, then coefficients from the
    top down, compared by their integer encodings. Returns -1, 0 or 1."""
    if a.ctx._key != b.ctx._key:
        raise ValidationError("polynomials belong to different fields")
    if a.degree != b.degree:
        return -1 if a.degree < b.degree else 1
    for x, y in zip(reversed(a.coeffs), reversed(b.coeffs)):
        if x != y:
            return -1 if x < y else 1
    return 0


def monic_of_degree(ctx: FieldCtx, d: int) -> Iterator[Poly]:
    """All monic polynomials of exact degree d >= 0, in canonical order."""
    if d == 0:
        yield one(ctx)
        return
    # counter over the d lower coefficients, most significant (degree d-1) first
    counter = [0] * d
    q = ctx.q
    while True:
        yield _wrap(ctx, _strip(list(reversed(counter)) + [1]))
        i = d - 1
        while i >= 0 and counter[i] == q - 1:
            counter[i] = 0
            i -= 1
        if i < 0:
            return
        counter[i] += 1


def _strip(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def enumerate_monic_below(ctx: FieldCtx, d: int) -> Iterator[Poly]:
    """All monic polynomials of degree < d, ordered by the canonical total
    order; there are (q**d - 1) // (q - 1) of them."""
    if not isinstance(d, int) or d < 1:
        raise NonpositiveBound(f"degree bound must be >= 1, got {d!r}")
    for k in range(d):
        yield from monic_of_degree(ctx, k)


# -- text syntax ------------------------------------------------------------------
#
# Canonical form, descending degree, terms joined by '+':
#   "2*T^3+T+1", "T^2+2", "T", "0"
# Coefficients are encoded field elements; '*' is optional on input and
# exponents 0 and 1 may be spelled explicitly.

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?T(?:\^(\d+))?$|^(\d+)$")


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    """Parse the human polynomial syntax into a canonical Poly."""
    compact = text.replace(" ", "").replace("\t", "")
    if not compact:
        raise ConfigError("empty polynomial string")
    coeffs: dict[int, int] = {}
    for term in compact.split("+"):
        m = _TERM_RE.match(term)
        if not m:
            raise ConfigError(f"cannot parse polynomial term {term!r} in {text!r}")
        if m.group(3) is not None:
            c, k = int(m.group(3)), 0
        else:
            c = int(m.group(1)) if m.group(1) is not None else 1
            k = int(m.group(2)) if m.group(2) is not None else 1
        if c >= ctx.q:
            raise ConfigError(f"coefficient {c} out of range for F_{ctx.q} in {text!r}")
        coeffs[k] = ctx.kernel.fadd(coeffs.get(k, 0), c)
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly(ctx, out)


def format_poly(f: Poly) -> str:
    """Canonical text form; parse_poly(format_poly(f)) == f."""
    if f.is_zero:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        elif k == 1:
            parts.append("T" if c == 1 else f"{c}*T")
        else:
            parts.append(f"T^{k}" if c == 1 else f"{c}*T^{k}")
    return "+".join(parts)
