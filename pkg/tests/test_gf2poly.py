import pytest

from morava2.errors import (
    ContextMismatchError,
    ExponentOverflowError,
    MissingImageError,
    NotDivisibleError,
)
from morava2.gf2poly import EXPONENT_LIMIT, Poly, RingContext, VarSpec

C = VarSpec("c", 2)
X = VarSpec("x", 2)
C2 = VarSpec("c2", 4)
V = VarSpec("v", 4)
W = VarSpec("w", 6)


@pytest.fixture
def ctx():
    return RingContext(1, (C, X, C2))


def test_add_cancels_in_characteristic_two(ctx):
    c = ctx.var("c")
    x = ctx.var("x")
    assert not (c + c)
    assert c + x == x + c
    assert (c + x) + x == c


def test_mul_cancellation(ctx):
    c, x, c2 = ctx.var("c"), ctx.var("x"), ctx.var("c2")
    assert c * c2 == ctx.monomial(c=1, c2=1)
    assert (c + x) * (c + x) == c * c + x * x
    assert ctx.zero() * c == ctx.zero()


def test_frobenius_square(ctx):
    c, x, c2 = ctx.var("c"), ctx.var("x"), ctx.var("c2")
    assert (c + x).square() == ctx.monomial(c=2) + ctx.monomial(x=2)
    assert (c * c2).square() == ctx.monomial(c=2, c2=2)
    assert ctx.zero().square() == ctx.zero()


def test_substitute_swap_and_expand(ctx):
    c, x, c2 = ctx.var("c"), ctx.var("x"), ctx.var("c2")
    swap = {"c": x, "x": c, "c2": c2}
    assert c.substitute(swap) == x
    images = {"c": x, "x": c + x, "c2": c2}
    assert (c * x).substitute(images) == c * x + x * x


def test_substitute_so3_generators():
    ctx = RingContext(2, (C, C2))
    vw_ctx = RingContext(2, (V, W))
    v, w = vw_ctx.var("v"), vw_ctx.var("w")
    c, c2 = ctx.var("c"), ctx.var("c2")
    images = {"v": c * c + c * c2 ** 2 + c2, "w": c * c2}
    expected = ctx.monomial(c=3, c2=1) + ctx.monomial(c=2, c2=3) + ctx.monomial(c=1, c2=2)
    assert (v * w).substitute(images) == expected


def test_substitute_missing_image(ctx):
    c = ctx.var("c")
    with pytest.raises(MissingImageError):
        c.substitute({"x": ctx.var("x")})


def test_divide_exact():
    ctx = RingContext(2, (V, W))
    v, w = ctx.var("v"), ctx.var("w")
    f2g2 = (v * w) * (w * w)
    assert f2g2.divide_exact("v") == w ** 3
    assert ctx.zero().divide_exact("v") == ctx.zero()
    with pytest.raises(NotDivisibleError) as err:
        (w ** 3 + w * v ** 3).divide_exact("v")
    assert err.value.witness == w ** 3


def test_divide_exact_round_trip(ctx):
    p = ctx.var("c") * ctx.var("c2") + ctx.monomial(c=1, x=2)
    assert (p * ctx.var("c")).divide_exact("c") == p


def test_homogeneity_check():
    ctx = RingContext(2, (C, X, C2))
    c, x = ctx.var("c"), ctx.var("x")
    p = c * c + c * x + x * x
    assert p.homogeneity_check(6)
    # degree 16 vs degree 4 terms agree mod 6
    q = ctx.monomial(c2=4) + c * c + c * x + x * x
    assert q.homogeneity_check(6)
    bad = c + ctx.var("c2")
    res = bad.homogeneity_check(6)
    assert not res
    (m1, d1), (m2, d2) = res.witness
    assert {d1, d2} == {2, 4}


def test_truncate_above(ctx):
    c, c2 = ctx.var("c"), ctx.var("c2")
    assert (c + c2 ** 3).truncate_above(4) == c
    assert c.truncate_above(0) == ctx.zero()
    assert (c * c + c2).truncate_above(4) == c * c + c2


def test_canonical_form_independent_of_build_order(ctx):
    monos = [(1, 0, 0), (0, 1, 0), (2, 0, 1), (0, 0, 3)]
    p = Poly(ctx, monos)
    q = Poly(ctx, reversed(monos))
    r = ctx.zero()
    for m in monos:
        r = r + Poly(ctx, (m,))
    assert p == q == r
    assert p.terms == tuple(sorted(p.terms, key=ctx.key, reverse=True))


def test_context_mismatch_raises(ctx):
    other = RingContext(2, (C, X, C2))
    with pytest.raises(ContextMismatchError):
        ctx.var("c") + other.var("c")


def test_exponent_overflow_guard(ctx):
    with pytest.raises(ExponentOverflowError):
        ctx.monomial(c=EXPONENT_LIMIT + 1)
    big = ctx.monomial(c=EXPONENT_LIMIT // 2 + 1)
    with pytest.raises(ExponentOverflowError):
        big * big


def test_period_and_degrees():
    assert RingContext(1, (C,)).period == 2
    assert RingContext(2, (C,)).period == 6
    assert RingContext(3, (C,)).period == 14
    ctx = RingContext(2, (C, X, C2))
    assert ctx.wdeg((1, 1, 2)) == 12


def test_unique_names_enforced():
    with pytest.raises(ValueError):
        RingContext(1, (C, VarSpec("c", 4)))


def test_str_formatting(ctx):
    assert str(ctx.zero()) == "0"
    assert str(ctx.one()) == "1"
    assert str(ctx.monomial(c=2, c2=1) + ctx.var("x")) == "c^2*c2 + x"
