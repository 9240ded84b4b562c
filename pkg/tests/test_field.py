from __future__ import annotations

import pytest

from qcff.algebra import field_create, fq_dlog, fq_order
from qcff.errors import (
    EvenCharacteristic,
    LogOfZero,
    MissingModulus,
    NonPrimeP,
    ReducibleModulus,
    ValidationError,
)

from .oracles import naive_dlog, naive_fq_mul, naive_fq_order

# q <= 25: every supported field in that range gets the exhaustive checks.
SMALL_FIELDS = [
    (3, 1, None),
    (5, 1, None),
    (7, 1, None),
    (11, 1, None),
    (13, 1, None),
    (3, 2, [1, 0, 1]),   # q = 9
    (5, 2, [2, 0, 1]),   # q = 25
]


def test_gamma_for_f3():
    ctx = field_create(3)
    assert (ctx.q, ctx.w, ctx.gamma) == (3, 2, 2)
    # derived check: 2 really has order 2
    assert naive_fq_order(ctx, 2) == 2


def test_gamma_for_f5():
    ctx = field_create(5)
    assert ctx.gamma == 2
    assert naive_fq_order(ctx, 2) == 4


def test_gamma_for_f9_is_x_plus_1():
    ctx = field_create(3, 2, [1, 0, 1])
    assert (ctx.q, ctx.w) == (9, 8)
    # enc of x + 1 is 1 + 1*3 = 4; both smaller candidates fall short of full order
    assert ctx.gamma == 4
    assert naive_fq_order(ctx, 4) == 8
    assert naive_fq_order(ctx, 2) < 8 and naive_fq_order(ctx, 3) < 8


def test_gamma_is_smallest_with_full_order():
    for p, e, mod in SMALL_FIELDS:
        ctx = field_create(p, e, mod)
        for cand in range(2, ctx.gamma):
            assert naive_fq_order(ctx, cand) < ctx.w


@pytest.mark.parametrize("p,e,mod", SMALL_FIELDS)
def test_dlog_exhaustive(p, e, mod):
    ctx = field_create(p, e, mod)
    for x in range(1, ctx.q):
        i = fq_dlog(ctx, x)
        assert 0 <= i < ctx.w
        assert i == naive_dlog(ctx, x)
        assert ctx.exp[i] == x


@pytest.mark.parametrize("p,e,mod", SMALL_FIELDS)
def test_dlog_is_homomorphism(p, e, mod):
    ctx = field_create(p, e, mod)
    for x in range(1, ctx.q):
        for y in range(1, ctx.q):
            xy = naive_fq_mul(ctx, x, y)
            assert fq_dlog(ctx, xy) == (fq_dlog(ctx, x) + fq_dlog(ctx, y)) % ctx.w


def test_dlog_examples(ctx3, ctx5):
    assert fq_dlog(ctx3, 1) == 0
    assert fq_dlog(ctx3, 2) == 1
    assert fq_dlog(ctx5, 4) == 2  # 2^2 = 4


def test_dlog_of_zero_rejected(ctx3):
    with pytest.raises(LogOfZero):
        fq_dlog(ctx3, 0)


def test_enc_digit_round_trip(ctx9):
    for x in range(ctx9.q):
        assert ctx9.from_digits(ctx9.digits(x)) == x
    assert ctx9.digits(4) == (1, 1)


def test_kernel_scalar_ops_match_naive(ctx9):
    k = ctx9.kernel
    for a in range(ctx9.q):
        for b in range(ctx9.q):
            assert k.fmul(a, b) == naive_fq_mul(ctx9, a, b)
            assert k.fadd(a, b) == ctx9.from_digits(
                [(x + y) % ctx9.p for x, y in zip(ctx9.digits(a), ctx9.digits(b))])
    for a in range(1, ctx9.q):
        assert k.fmul(a, k.finv(a)) == 1


def test_fq_order(ctx5):
    assert fq_order(ctx5, 1) == 1
    assert fq_order(ctx5, 4) == 2  # 4 = -1
    assert fq_order(ctx5, 2) == 4


def test_field_create_rejections():
    with pytest.raises(NonPrimeP):
        field_create(9)
    with pytest.raises(NonPrimeP):
        field_create(1)
    with pytest.raises(EvenCharacteristic):
        field_create(2)
    with pytest.raises(MissingModulus):
        field_create(3, 2)
    with pytest.raises(ReducibleModulus):
        field_create(3, 2, [2, 0, 1])  # x^2 + 2 = (x+1)(x+2)
    with pytest.raises(ValidationError):
        field_create(3, 1, [1, 1])  # modulus forbidden for e = 1
    with pytest.raises(ValidationError):
        field_create(3, 2, [1, 0, 2])  # not monic
    with pytest.raises(ValidationError):
        field_create(3, 0)
