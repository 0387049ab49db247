"""Ring endomorphisms of presented rings and their fixed subspaces.

The main use is the order-3 symmetry of the height-s quaternion-of-order-8
ring (c and x rotate into c + x + c^(2^(s-1)) x^(2^(s-1)), the plane-bundle
class stays fixed); its invariants are compared against the binary
tetrahedral presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .gf2poly import CheckResult, Poly
from .groebner import (
    DEFAULT_LIMITS,
    BuchbergerLimits,
    GroebnerBasis,
    buchberger,
    normal_form,
    quotient_basis,
)
from .presentations import PresentationSpec, build


@dataclass(frozen=True)
class RingMap:
    """Generator-image description of a map between presented rings."""

    source: PresentationSpec
    target: PresentationSpec
    images: Mapping[str, Poly]

    def target_basis(self, limits: BuchbergerLimits = DEFAULT_LIMITS) -> GroebnerBasis:
        assert self.target.ideal is not None
        return buchberger(self.target.ideal, limits=limits)


def sigma_q8(s: int) -> RingMap:
    """Order-3 symmetry of the q8 presentation: c -> x,
    x -> c + x + c^(2^(s-1)) x^(2^(s-1)), c2 fixed."""
    spec = build("q8", s)
    ctx = spec.context
    c, x, c2 = ctx.var("c"), ctx.var("x"), ctx.var("c2")
    half = 2 ** (s - 1)
    return RingMap(
        source=spec,
        target=spec,
        images={"c": x, "x": c + x + ctx.monomial(c=half, x=half), "c2": c2},
    )


def identity_map(spec: PresentationSpec) -> RingMap:
    images = {v.name: spec.context.var(v.name) for v in spec.context.variables}
    return RingMap(spec, spec, images)


def compose_images(outer: Mapping[str, Poly], inner: Mapping[str, Poly], gb: GroebnerBasis) -> dict[str, Poly]:
    """Images of outer-after-inner, reduced to keep iterates small."""
    return {name: normal_form(img.substitute(outer), gb) for name, img in inner.items()}


def check_well_defined(sigma: RingMap, limits: BuchbergerLimits = DEFAULT_LIMITS) -> CheckResult:
    """A map is well defined when source relations map into the target ideal.

    Image degrees must also be congruent to the source degrees modulo the
    target period; the witness names the first violation found.
    """
    src_ctx = sigma.source.context
    tgt_ctx = sigma.target.context
    d = tgt_ctx.period
    for v in src_ctx.variables:
        img = sigma.images.get(v.name)
        if img is None:
            return CheckResult(False, ("missing image", v.name))
        for mono in img.terms:
            if (tgt_ctx.wdeg(mono) - v.degree) % d != 0:
                return CheckResult(
                    False,
                    ("degree incongruent", v.name, tgt_ctx.monomial_str(mono), tgt_ctx.wdeg(mono), v.degree),
                )
    gb = sigma.target_basis(limits)
    for r in sigma.source.relations():
        residue = normal_form(r.substitute(sigma.images), gb)
        if residue:
            return CheckResult(False, (r, residue))
    return CheckResult(True, None)


def check_order(sigma: RingMap, n: int, limits: BuchbergerLimits = DEFAULT_LIMITS) -> CheckResult:
    """True iff the n-th iterate is the identity mod the ideal and no
    smaller positive iterate is."""
    if n < 1:
        raise ValueError("order must be >= 1")
    wd = check_well_defined(sigma, limits)
    if not wd:
        raise ValueError(f"map is not well defined: {wd.witness}")
    gb = sigma.target_basis(limits)
    ctx = sigma.source.context
    gens = [v.name for v in ctx.variables]
    fixed_forms = {g: normal_form(ctx.var(g), gb) for g in gens}
    images = {g: normal_form(p, gb) for g, p in sigma.images.items()}
    for t in range(1, n + 1):
        fixes_all = all(images[g] == fixed_forms[g] for g in gens)
        if fixes_all and t < n:
            return CheckResult(False, ("order divides", t))
        if t == n:
            if fixes_all:
                return CheckResult(True, None)
            bad = next(g for g in gens if images[g] != fixed_forms[g])
            return CheckResult(False, (bad, images[bad]))
        images = compose_images(sigma.images, images, gb)
    raise AssertionError("unreachable")


@dataclass
class InvariantSpace:
    """Normal-form representatives of fixed vectors, grouped by degree."""

    degree_basis: dict[int, tuple[Poly, ...]]

    @property
    def total_rank(self) -> int:
        return sum(len(b) for b in self.degree_basis.values())

    def elements(self) -> tuple[Poly, ...]:
        out = []
        for d in sorted(self.degree_basis):
            out.extend(self.degree_basis[d])
        return tuple(out)


def _gf2_left_nullspace(rows: list[int]) -> list[int]:
    """Masks lam with XOR_i lam_i rows_i = 0, via tracked elimination."""
    pivots: list[tuple[int, int, int]] = []  # (pivot bit, value, combination)
    null = []
    for i, r in enumerate(rows):
        combo = 1 << i
        for pb, val, cm in pivots:
            if r & pb:
                r ^= val
                combo ^= cm
        if r == 0:
            null.append(combo)
        else:
            pivots.append((r & -r, r, combo))
    return null


def _gf2_rref(masks: list[int]) -> list[int]:
    """Canonical reduced row-echelon basis of the span of the masks."""
    basis: list[int] = []
    for r in masks:
        for b in basis:
            if r & (b & -b):
                r ^= b
        if r:
            basis.append(r)
    # back-substitute so each pivot occurs in exactly one vector
    for i, b in enumerate(basis):
        pb = b & -b
        for j in range(len(basis)):
            if j != i and basis[j] & pb:
                basis[j] ^= b
    return sorted(basis)


def invariant_space(
    P: PresentationSpec,
    sigma: RingMap,
    limits: BuchbergerLimits = DEFAULT_LIMITS,
) -> InvariantSpace:
    """Kernel of (sigma - id) on the standard-monomial span of the quotient.

    Normal forms mix absolute degrees (relations are homogeneous only modulo
    the period), so the kernel is computed per degree-residue class, the
    finest decomposition the action preserves.  Each fixed vector is filed
    under the weighted degree of its leading monomial.  The presentation
    must have finite rank.
    """
    assert P.ideal is not None
    gb = buchberger(P.ideal, limits=limits)
    stair = quotient_basis(gb)
    ctx = P.context
    monos = stair.monomials
    col = {m: i for i, m in enumerate(monos)}
    period = ctx.period
    by_residue: dict[int, list[tuple[int, ...]]] = {}
    for m in monos:
        by_residue.setdefault(ctx.wdeg(m) % period, []).append(m)
    degree_basis: dict[int, list[Poly]] = {}
    for r in sorted(by_residue):
        block = by_residue[r]
        rows = []
        for m in block:
            image = normal_form(Poly(ctx, (m,)).substitute(sigma.images), gb)
            diff = image + Poly(ctx, (m,))
            vec = 0
            for t in diff.terms:
                vec |= 1 << col[t]
            rows.append(vec)
        for lam in _gf2_rref(_gf2_left_nullspace(rows)):
            picked = [block[i] for i in range(len(block)) if lam >> i & 1]
            p = Poly(ctx, picked)
            degree_basis.setdefault(ctx.wdeg(p.lead), []).append(p)
    return InvariantSpace({d: tuple(v) for d, v in sorted(degree_basis.items())})


def elementary_symmetric_check(s: int, limits: BuchbergerLimits = DEFAULT_LIMITS) -> tuple[Poly, Poly, Poly]:
    """Residues of the three elementary symmetric functions of the rotated
    symbols against c2^(2^(s-1)), c2^(2^s) and zero; a zero residue means
    the corresponding identity holds in the quotient."""
    spec = build("q8", s)
    ctx = spec.context
    gb = buchberger(spec.ideal, limits=limits)
    a, b = ctx.var("c"), ctx.var("x")
    half = 2 ** (s - 1)
    t = a + b + ctx.monomial(c=half, x=half)
    c2 = ctx.var("c2")
    e1 = a + b + t
    e2 = a * b + a * t + b * t
    e3 = a * b * t
    return (
        normal_form(e1 + c2 ** half, gb),
        normal_form(e2 + c2 ** (2 ** s), gb),
        normal_form(e3, gb),
    )
