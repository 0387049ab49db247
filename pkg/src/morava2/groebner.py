"""Buchberger completion, normal forms, staircases and elimination kernels.

Everything here is deterministic for a fixed input: pair selection, reducer
choice and basis ordering all use the context's monomial order with explicit
tie-breaks, so reduced bases and normal forms are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush
from itertools import product
from typing import Optional, Sequence

from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    NotInSubringError,
    TruncationRequiredError,
)
from .gf2poly import ELIM, GRLEX, Poly, RingContext, VarSpec


@dataclass(frozen=True)
class BuchbergerLimits:
    """Hard resource caps; exceeding one raises, never silently truncates."""

    max_pairs: int = 150_000
    max_basis: int = 4_000
    max_terms: int = 500_000


DEFAULT_LIMITS = BuchbergerLimits()


@dataclass(frozen=True)
class Ideal:
    generators: tuple[Poly, ...]
    context: RingContext

    def __init__(self, generators: Sequence[Poly], context: RingContext):
        gens = tuple(generators)
        for g in gens:
            if g.context != context:
                raise ContextMismatchError("generator context differs from ideal context")
            if not g:
                raise ValueError("ideal generators must be nonzero")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "context", context)


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis; ``truncated_at`` marks degree-bounded runs.

    When ``truncated_at`` is an integer N, pairs of weighted lcm-degree above
    N were discarded, so membership conclusions are only claimed below N.
    """

    context: RingContext
    basis: tuple[Poly, ...]
    truncated_at: Optional[int] = None

    def normal_form(self, p: Poly) -> Poly:
        return normal_form(p, self)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(f: Poly, g: Poly) -> Poly:
    lcm = _lcm(f.lead, g.lead)
    sf = tuple(l - e for l, e in zip(lcm, f.lead))
    sg = tuple(l - e for l, e in zip(lcm, g.lead))
    return f.mul_monomial(sf) + g.mul_monomial(sg)


def _reduce_terms(terms: set, basis: Sequence[Poly], ctx: RingContext) -> set:
    """Full reduction; always rewrites the largest reducible term first."""
    leads = [(g.lead, g.terms) for g in basis]
    irreducible: set = set()
    while True:
        candidates = [t for t in terms if t not in irreducible]
        if not candidates:
            return terms
        t = max(candidates, key=ctx.key)
        for lm, gterms in leads:
            if _divides(lm, t):
                shift = tuple(a - b for a, b in zip(t, lm))
                for m in gterms:
                    nt = tuple(a + b for a, b in zip(m, shift))
                    if nt in terms:
                        terms.discard(nt)
                    else:
                        terms.add(nt)
                break
        else:
            irreducible.add(t)


def normal_form(p: Poly, gb: GroebnerBasis) -> Poly:
    """Unique fully reduced representative of p modulo the basis."""
    if p.context != gb.context:
        raise ContextMismatchError("polynomial context differs from basis context")
    if not gb.basis or not p:
        return p
    terms = _reduce_terms(set(p.terms), gb.basis, p.context)
    return Poly(p.context, terms)


def _sorted_basis(polys: Sequence[Poly], ctx: RingContext) -> list[Poly]:
    return sorted(polys, key=lambda g: (ctx.key(g.lead), g.terms))


def _interreduce(polys: list[Poly], ctx: RingContext) -> list[Poly]:
    # minimalize: drop anything whose lead is divisible by another lead
    polys = _sorted_basis(polys, ctx)
    minimal: list[Poly] = []
    for g in polys:
        if not any(_divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    # reduce tails to a fixed point; leads are stable by minimality
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1 :]
            r = Poly(ctx, _reduce_terms(set(g.terms), others, ctx))
            if r != g:
                minimal[i] = r
                changed = True
    return _sorted_basis(minimal, ctx)


def buchberger(
    ideal: Ideal,
    *,
    bound: Optional[int] = None,
    limits: BuchbergerLimits = DEFAULT_LIMITS,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal under its context order.

    With ``bound`` set, critical pairs whose lcm has weighted degree above
    the bound are discarded and the result is marked as truncated.
    """
    if not ideal.generators:
        raise ValueError("ideal must have at least one generator")
    ctx = ideal.context
    G: list[Poly] = _sorted_basis(set(ideal.generators), ctx)
    heap: list = []

    def push_pairs(j: int):
        lmj = G[j].lead
        for i in range(j):
            lmi = G[i].lead
            if all(min(a, b) == 0 for a, b in zip(lmi, lmj)):
                continue  # coprime leads: S-polynomial reduces to zero
            lcm = _lcm(lmi, lmj)
            if bound is not None and ctx.wdeg(lcm) > bound:
                continue
            heappush(heap, (ctx.key(lcm), i, j))

    for j in range(len(G)):
        push_pairs(j)
    processed = 0
    while heap:
        _, i, j = heappop(heap)
        processed += 1
        if processed > limits.max_pairs:
            raise BudgetExceededError(f"pair budget {limits.max_pairs} exhausted")
        r = Poly(ctx, _reduce_terms(set(_spoly(G[i], G[j]).terms), G, ctx))
        if r:
            if len(r.terms) > limits.max_terms:
                raise BudgetExceededError("term budget exhausted")
            G.append(r)
            if len(G) > limits.max_basis:
                raise BudgetExceededError(f"basis budget {limits.max_basis} exhausted")
            push_pairs(len(G) - 1)
    return GroebnerBasis(ctx, tuple(_interreduce(G, ctx)), truncated_at=bound)


# -- staircases ---------------------------------------------------------------


@dataclass
class FiniteStaircase:
    """All standard monomials of a zero-dimensional quotient."""

    context: RingContext
    monomials: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.monomials)

    def as_polys(self) -> tuple[Poly, ...]:
        return tuple(Poly(self.context, (m,)) for m in self.monomials)

    def counts_by_degree(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for m in self.monomials:
            d = self.context.wdeg(m)
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))


@dataclass
class TruncatedStaircase:
    """Standard-monomial counts per weighted degree, up to a bound."""

    context: RingContext
    bound: int
    counts_by_degree: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts_by_degree.values())


QuotientBasis = FiniteStaircase | TruncatedStaircase


def _pure_power_bounds(gb: GroebnerBasis) -> Optional[list[int]]:
    n = len(gb.context.variables)
    bounds: list[Optional[int]] = [None] * n
    for g in gb.basis:
        lm = g.lead
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    if any(b is None for b in bounds):
        return None
    return bounds  # type: ignore[return-value]


def staircase_is_finite(gb: GroebnerBasis) -> bool:
    """True when every variable has a pure-power leading monomial.

    Only complete bases can certify finiteness; truncated ones cannot.
    """
    return gb.truncated_at is None and _pure_power_bounds(gb) is not None


def quotient_basis(gb: GroebnerBasis, bound: Optional[int] = None) -> QuotientBasis:
    ctx = gb.context
    lms = [g.lead for g in gb.basis]
    if staircase_is_finite(gb):
        bounds = _pure_power_bounds(gb)
        assert bounds is not None
        monos = []
        for cand in product(*(range(b) for b in bounds)):
            if not any(_divides(lm, cand) for lm in lms):
                monos.append(cand)
        monos.sort(key=ctx.key)
        return FiniteStaircase(ctx, tuple(monos))
    if bound is None:
        raise TruncationRequiredError("staircase is infinite; a degree bound is required")
    if gb.truncated_at is not None and bound > gb.truncated_at:
        raise ValueError("bound exceeds the validity range of a truncated basis")
    if any(d == 0 for d in ctx.degrees):
        raise TruncationRequiredError("cannot enumerate by degree with degree-0 variables")
    counts: dict[int, int] = {}
    degs = ctx.degrees
    n = len(degs)
    mono = [0] * n

    def rec(i: int, used: int):
        if i == n:
            cand = tuple(mono)
            if not any(_divides(lm, cand) for lm in lms):
                counts[used] = counts.get(used, 0) + 1
            return
        e = 0
        while used + e * degs[i] <= bound:
            mono[i] = e
            rec(i + 1, used + e * degs[i])
            e += 1
        mono[i] = 0

    rec(0, 0)
    return TruncatedStaircase(ctx, bound, dict(sorted(counts.items())))


def rank(gb: GroebnerBasis, bound: Optional[int] = None) -> int | TruncatedStaircase:
    """GF(2)-dimension of the quotient; truncated counts when infinite."""
    qb = quotient_basis(gb, bound)
    if isinstance(qb, FiniteStaircase):
        return qb.rank
    return qb


# -- elimination / subring kernels ---------------------------------------------


class KernelPresentation:
    """Kernel of GF(2)[new vars] -> context/I sending each new var to its image.

    ``verified_up_to`` is None for exact runs (finite-rank targets) and the
    weighted-degree bound for truncated ones, where completeness of the
    generator list is only asserted below the bound.
    """

    def __init__(self, new_vars, kernel_gens, verified_up_to, ext_gb, block, source_context, target_gb):
        self.new_vars: tuple[VarSpec, ...] = new_vars
        self.kernel_gens: tuple[Poly, ...] = kernel_gens
        self.verified_up_to: Optional[int] = verified_up_to
        self._ext_gb = ext_gb
        self._block = block
        self.source_context: RingContext = source_context
        self.target_gb: GroebnerBasis = target_gb

    def _lift_target(self, p: Poly) -> Poly:
        pad = (0,) * (len(self._ext_gb.context.variables) - self._block)
        return Poly(self._ext_gb.context, (m + pad for m in p.terms))

    def express(self, p: Poly) -> Poly:
        """Rewrite a target element in the new variables, modulo the ideal."""
        r = normal_form(self._lift_target(p), self._ext_gb)
        k = self._block
        if any(any(e for e in m[:k]) for m in r.terms):
            witness = Poly(self._ext_gb.context, (m for m in r.terms if any(m[:k])))
            raise NotInSubringError(f"element is not in the subring: residue {witness}", witness)
        return Poly(self.source_context, (m[k:] for m in r.terms))

    def quotient_rank(self, bound: Optional[int] = None, limits: BuchbergerLimits = DEFAULT_LIMITS):
        """Rank of GF(2)[new vars]/kernel, i.e. of the image subring."""
        if not self.kernel_gens:
            if not self.new_vars:
                return 1
            raise TruncationRequiredError("zero kernel of a free polynomial ring is infinite")
        gb = buchberger(Ideal(self.kernel_gens, self.source_context), limits=limits)
        return rank(gb, bound)


def kernel_of_map(
    source_vars: Sequence[VarSpec],
    images: Sequence[Poly],
    ideal: Ideal,
    *,
    bound: Optional[int] = None,
    limits: BuchbergerLimits = DEFAULT_LIMITS,
) -> KernelPresentation:
    """Compute the kernel of the induced map by block elimination.

    The original variables form the heavy block; basis elements that only
    involve the new variables generate the kernel.  Infinite-rank targets
    run degree-truncated and require ``bound``.
    """
    if len(source_vars) != len(images):
        raise ValueError("one image per source variable is required")
    ctx = ideal.context
    for img in images:
        if img.context != ctx:
            raise ContextMismatchError("images must live in the ideal's context")
    taken = set(ctx.names)
    tag_specs = []
    for v in source_vars:
        name = v.name
        while name in taken:
            name += "~"
        taken.add(name)
        tag_specs.append(VarSpec(name, v.degree))
    k = len(ctx.variables)
    ext = RingContext(ctx.s, ctx.variables + tuple(tag_specs), order=ELIM, elim_block=k)
    pad = (0,) * len(tag_specs)

    def lift(p: Poly) -> Poly:
        return Poly(ext, (m + pad for m in p.terms))

    gens = [lift(g) for g in ideal.generators]
    for spec, img in zip(tag_specs, images):
        gens.append(ext.var(spec.name) + lift(img))

    target_gb = buchberger(ideal, limits=limits)
    if staircase_is_finite(target_gb):
        ext_gb = buchberger(Ideal(gens, ext), limits=limits)
        verified_up_to = None
    else:
        if bound is None:
            raise TruncationRequiredError(
                "target quotient has infinite rank; kernel_of_map needs a degree bound"
            )
        ext_gb = buchberger(Ideal(gens, ext), bound=bound, limits=limits)
        verified_up_to = bound

    src_ctx = RingContext(ctx.s, tuple(source_vars), order=GRLEX)
    kernel = []
    for g in ext_gb.basis:
        if all(not any(m[:k]) for m in g.terms):
            kernel.append(Poly(src_ctx, (m[k:] for m in g.terms)))
    kernel.sort(key=lambda p: (src_ctx.key(p.lead), p.terms))
    return KernelPresentation(
        new_vars=tuple(source_vars),
        kernel_gens=tuple(kernel),
        verified_up_to=verified_up_to,
        ext_gb=ext_gb,
        block=k,
        source_context=src_ctx,
        target_gb=target_gb,
    )
