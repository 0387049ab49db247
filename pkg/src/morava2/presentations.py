"""Constructors for every ring presentation handled by the verifier.

Families (at height s, with the periodicity unit normalized to 1):

* ``cyclic``      GF(2)[u]/(u^(2^(ks)))
* ``q8``          GF(2)[c,x,c2] with the five quaternion-of-order-8 relations
* ``quaternion``  GF(2)[c,x,c2] for generalized quaternion groups of order 2^(m+2), m > 1
* ``tetra``       GF(2)[c2]/(c2^((2^s+1)*2^(s-1)))
* ``octa``        GF(2)[c,c2] with the binary octahedral relations
* ``o2``          GF(2)[c,c2], infinite rank (orthogonal-group classifying space)
* ``n``           like ``o2`` with the extra c^2 term (circle normalizer in SU(2))
* ``so3``         GF(2)[v,w]/(f_s, g_s) from the recursion, when it is exact
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotDivisibleError
from .gf2poly import GRLEX, Poly, RingContext, VarSpec
from .groebner import Ideal

FAMILIES = ("cyclic", "q8", "quaternion", "tetra", "octa", "o2", "n", "so3")

C = VarSpec("c", 2)
X = VarSpec("x", 2)
C2 = VarSpec("c2", 4)
U = VarSpec("u", 2)
V = VarSpec("v", 4)
W = VarSpec("w", 6)

_FAMILY_VARS = {
    "cyclic": (U,),
    "q8": (C, X, C2),
    "quaternion": (C, X, C2),
    "tetra": (C2,),
    "octa": (C, C2),
    "o2": (C, C2),
    "n": (C, C2),
    "so3": (V, W),
}


def family_context(family: str, s: int) -> RingContext:
    return RingContext(s, _FAMILY_VARS[family], order=GRLEX)


def kappa(m: int, s: int) -> int:
    """(2^(ms) - 1) / (2^s - 1), always an exact integer division."""
    if m < 1 or s < 1:
        raise ValueError("kappa requires m >= 1 and s >= 1")
    num = 2 ** (m * s) - 1
    den = 2 ** s - 1
    q, r = divmod(num, den)
    assert r == 0
    return q


def two_power_series(k: int, s: int) -> tuple[int, int]:
    """Iterate the height-s 2-series k times: unit exponent and truncation.

    Returns (kappa(k, s), 2^(ks)); the second entry is the truncation
    exponent of the cyclic-family generator.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return kappa(k, s), 2 ** (k * s)


def transfer_sum(s: int, lo: int, hi: int, context: Optional[RingContext] = None, var: str = "c") -> Poly:
    """Sum of var^(2^s - 2^i) * c2^(2^(i-1)) for i in [lo, hi]; 0 when empty."""
    if lo < 1 or hi > s:
        raise ValueError("transfer_sum needs 1 <= lo and hi <= s")
    ctx = context if context is not None else RingContext(s, (C, C2))
    out = ctx.zero()
    for i in range(lo, hi + 1):
        out = out + ctx.monomial(**{var: 2 ** s - 2 ** i, "c2": 2 ** (i - 1)})
    return out


@dataclass(frozen=True)
class PresentationSpec:
    """Generator/relation data for one presented ring."""

    family: str
    s: int
    context: RingContext
    ideal: Optional[Ideal]
    m: Optional[int] = None
    k: Optional[int] = None
    expected_rank: Optional[int] = None
    inexact_witness: Optional[Poly] = None

    @property
    def exact(self) -> bool:
        return self.ideal is not None

    def relations(self) -> tuple[Poly, ...]:
        if self.ideal is None:
            return ()
        return self.ideal.generators


@dataclass(frozen=True)
class FGPair:
    """The (f_s, g_s) pair of the rank-one recursion; inexact runs carry
    the offending terms of the failed division instead of the missing value."""

    f: Optional[Poly]
    g: Optional[Poly]
    s: int
    exact: bool
    witness: Optional[Poly] = None


def fg_recursion(s: int) -> FGPair:
    """Apply the v/w recursion literally, starting from f_2 = vw, g_2 = w^2.

    Division by v is attempted exactly; the first failure makes the result
    inexact, which is reported as data rather than raised.
    """
    if s < 2:
        raise ValueError("the recursion starts at s = 2")
    ctx = family_context("so3", s)
    v, w = ctx.var("v"), ctx.var("w")
    f, g = v * w, w * w
    for t in range(3, s + 1):
        vpow = v ** (2 ** (t - 1) - 1)
        try:
            quotient = (f * g).divide_exact("v")
        except NotDivisibleError as err:
            if t % 2 == 0:
                return FGPair(f=f.square(), g=None, s=s, exact=False, witness=err.witness)
            return FGPair(f=None, g=g.square(), s=s, exact=False, witness=err.witness)
        mixed = quotient + w * vpow
        if t % 2 == 0:
            f, g = f.square(), mixed
        else:
            f, g = mixed, g.square()
    return FGPair(f=f, g=g, s=s, exact=True)


def _check_homogeneous(relations, ctx):
    d = ctx.period
    for r in relations:
        res = r.homogeneity_check(d)
        if not res:
            raise AssertionError(f"relation {r} is inhomogeneous mod {d}: {res.witness}")


def build(family: str, s: int, *, m: Optional[int] = None, k: Optional[int] = None) -> PresentationSpec:
    """Construct the presentation of one family at height s."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if s < 1:
        raise ValueError("height s must be >= 1")

    if family == "cyclic":
        if k is None or k < 1:
            raise ValueError("cyclic needs k >= 1")
        ctx = family_context(family, s)
        exp = 2 ** (k * s)
        rels = (ctx.monomial(u=exp),)
        _check_homogeneous(rels, ctx)
        return PresentationSpec(family, s, ctx, Ideal(rels, ctx), k=k, expected_rank=exp)

    if family == "q8":
        ctx = family_context(family, s)
        c, x, c2 = ctx.var("c"), ctx.var("x"), ctx.var("c2")
        half = 2 ** (s - 1)
        rels = (
            ctx.monomial(c=2 ** s),
            ctx.monomial(x=2 ** s),
            c * c2 ** half + c * transfer_sum(s, 1, s - 1, ctx, "c") + c * c,
            c2 ** (2 ** s) + c * c + c * x + x * x,
            x * c2 ** half + x * transfer_sum(s, 1, s - 1, ctx, "x") + x * x,
        )
        _check_homogeneous(rels, ctx)
        return PresentationSpec(family, s, ctx, Ideal(rels, ctx))

    if family == "quaternion":
        if m is None or m <= 1:
            raise ValueError("quaternion needs m > 1")
        ctx = family_context(family, s)
        c, x, c2 = ctx.var("c"), ctx.var("x"), ctx.var("c2")
        half = 2 ** (s - 1)
        tail = ctx.zero()
        for i in range(1, m * s + 1):
            tail = tail + ctx.monomial(c2=(2 ** (m * s) + 1) * half - (2 ** s - 1) * 2 ** (i - 1))
        rels = (
            ctx.monomial(c=2 ** s),
            ctx.monomial(x=2 ** s),
            c * c2 ** half + c * transfer_sum(s, 1, s - 1, ctx, "c") + c * c,
            c2 ** (2 ** (m * s)) + c * x + x * x,
            x * c2 ** half + x * transfer_sum(s, 1, s - 1, ctx, "c") + tail + c * x,
        )
        _check_homogeneous(rels, ctx)
        return PresentationSpec(family, s, ctx, Ideal(rels, ctx), m=m)

    if family == "tetra":
        ctx = family_context(family, s)
        exp = (2 ** s + 1) * 2 ** (s - 1)
        rels = (ctx.monomial(c2=exp),)
        _check_homogeneous(rels, ctx)
        return PresentationSpec(family, s, ctx, Ideal(rels, ctx), expected_rank=exp)

    if family in ("octa", "o2", "n"):
        ctx = family_context(family, s)
        c = ctx.var("c")
        full_sum = c * transfer_sum(s, 1, s, ctx, "c")
        rels: list[Poly] = [ctx.monomial(c=2 ** s)]
        if family == "o2":
            rels.append(full_sum)
        else:
            rels.append(c * c + full_sum)
        if family == "octa":
            rels.append(ctx.monomial(c2=(2 ** s + 1) * 2 ** (s - 1)))
        _check_homogeneous(rels, ctx)
        return PresentationSpec(family, s, ctx, Ideal(tuple(rels), ctx))

    # so3
    if s < 2:
        raise ValueError("so3 is defined for s >= 2")
    pair = fg_recursion(s)
    ctx = family_context(family, s)
    if not pair.exact:
        return PresentationSpec(family, s, ctx, None, inexact_witness=pair.witness)
    assert pair.f is not None and pair.g is not None
    rels = (pair.f, pair.g)
    _check_homogeneous(rels, ctx)
    return PresentationSpec(family, s, ctx, Ideal(rels, ctx))


def presentation_text(spec: PresentationSpec) -> str:
    """Canonical plain-text dump; identical bytes for identical input."""
    lines = [f"family: {spec.family}", f"s: {spec.s}"]
    if spec.m is not None:
        lines.append(f"m: {spec.m}")
    if spec.k is not None:
        lines.append(f"k: {spec.k}")
    lines.append("variables: " + " ".join(f"{v.name}:{v.degree}" for v in spec.context.variables))
    lines.append(f"period: {spec.context.period}")
    if spec.ideal is None:
        lines.append("relations: inexact")
        if spec.inexact_witness is not None:
            lines.append(f"witness: {spec.inexact_witness}")
    else:
        rels = spec.ideal.generators
        lines.append(f"relations: {len(rels)}")
        lines.extend(str(r) for r in rels)
    return "\n".join(lines) + "\n"
