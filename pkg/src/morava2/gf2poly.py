"""Sparse multivariate polynomials over GF(2) with graded variables.

Polynomials are stored as sets of exponent tuples; a coefficient is either
present or absent, so addition is symmetric difference.  Every variable
carries a cohomological degree used for weighted-degree bookkeeping
(truncation, staircase counts, homogeneity checks), while the monomial
order itself compares plain exponent sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    ContextMismatchError,
    ExponentOverflowError,
    MissingImageError,
    NotDivisibleError,
)

# Exponents like 2**(m*s) grow quickly; fail loudly well before anything
# resembling a desk-scale computation could legitimately reach this.
EXPONENT_LIMIT = 1 << 20

GRLEX = "grlex"
LEX = "lex"
ELIM = "elim"


@dataclass(frozen=True)
class VarSpec:
    """A named generator with its cohomological degree."""

    name: str
    degree: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"variable {self.name!r} has negative degree")


class RingContext:
    """Ordered variable list, monomial order and height s for one ring.

    ``order`` is one of ``grlex`` (exponent-sum, then lex with earlier
    variables heavier; the default), ``lex``, or ``elim`` with
    ``elim_block`` leading variables forming the eliminated block.
    """

    __slots__ = ("s", "variables", "order", "elim_block", "_names", "_degrees", "_index")

    def __init__(self, s: int, variables: Sequence[VarSpec], order: str = GRLEX, elim_block: int = 0):
        if s < 1:
            raise ValueError("height s must be >= 1")
        if order not in (GRLEX, LEX, ELIM):
            raise ValueError(f"unknown monomial order {order!r}")
        if order == ELIM and not (0 < elim_block < len(variables)):
            raise ValueError("elimination block must be a proper nonempty prefix")
        if order != ELIM:
            elim_block = 0
        names = tuple(v.name for v in variables)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        self.s = s
        self.variables = tuple(variables)
        self.order = order
        self.elim_block = elim_block
        self._names = names
        self._degrees = tuple(v.degree for v in variables)
        self._index = {n: i for i, n in enumerate(names)}

    @property
    def period(self) -> int:
        """Degree period d = 2(2^s - 1) left over from normalizing the unit."""
        return 2 * (2 ** self.s - 1)

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def index_of(self, name: str) -> int:
        return self._index[name]

    def _signature(self):
        return (self.s, self.variables, self.order, self.elim_block)

    def __eq__(self, other):
        return isinstance(other, RingContext) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def __repr__(self):
        vs = " ".join(f"{v.name}:{v.degree}" for v in self.variables)
        return f"RingContext(s={self.s}, [{vs}], {self.order})"

    # -- monomial helpers ------------------------------------------------

    def key(self, mono: tuple[int, ...]):
        """Sort key: larger key = larger monomial under the context order."""
        if self.order == GRLEX:
            return (sum(mono), mono)
        if self.order == LEX:
            return mono
        k = self.elim_block
        head, tail = mono[:k], mono[k:]
        return (sum(head), head, sum(tail), tail)

    def wdeg(self, mono: tuple[int, ...]) -> int:
        """Weighted (cohomological) degree of a monomial."""
        return sum(e * d for e, d in zip(mono, self._degrees))

    def monomial_str(self, mono: tuple[int, ...]) -> str:
        parts = []
        for name, e in zip(self._names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    # -- element constructors --------------------------------------------

    def zero(self) -> "Poly":
        return Poly(self, ())

    def one(self) -> "Poly":
        return Poly(self, ((0,) * len(self.variables),))

    def var(self, name: str) -> "Poly":
        i = self.index_of(name)
        mono = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return Poly(self, (mono,))

    def monomial(self, **exponents: int) -> "Poly":
        """Build a single monomial, e.g. ``ctx.monomial(c=2, c2=1)``."""
        mono = [0] * len(self.variables)
        for name, e in exponents.items():
            mono[self.index_of(name)] = e
        return Poly(self, (tuple(mono),))


def _check_exponents(mono: tuple[int, ...]):
    for e in mono:
        if e > EXPONENT_LIMIT:
            raise ExponentOverflowError(f"exponent {e} exceeds limit {EXPONENT_LIMIT}")
        if e < 0:
            raise ValueError("negative exponent")


class Poly:
    """An element of GF(2)[context variables]; immutable and hashable.

    ``terms`` is the tuple of exponent tuples in strictly descending
    context order, so ``terms[0]`` is the leading monomial.
    """

    __slots__ = ("context", "terms", "_hash")

    def __init__(self, context: RingContext, monomials: Iterable[tuple[int, ...]]):
        seen = set()
        width = len(context.variables)
        for m in monomials:
            if len(m) != width:
                raise ValueError("monomial width does not match context")
            _check_exponents(m)
            if m in seen:
                seen.discard(m)
            else:
                seen.add(m)
        self.context = context
        self.terms = tuple(sorted(seen, key=context.key, reverse=True))
        self._hash = None

    # -- basics ------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.context == other.context
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.context, self.terms))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self.context.monomial_str(m) for m in self.terms)

    def __repr__(self):
        return f"Poly({self})"

    @property
    def lead(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0]

    def max_wdeg(self) -> int:
        return max((self.context.wdeg(m) for m in self.terms), default=0)

    def _require_same_context(self, other: "Poly"):
        if self.context != other.context:
            raise ContextMismatchError("polynomials live in different contexts")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._require_same_context(other)
        a, b = set(self.terms), set(other.terms)
        return Poly(self.context, a ^ b)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "Poly") -> "Poly":
        self._require_same_context(other)
        acc: set[tuple[int, ...]] = set()
        for m1 in self.terms:
            for m2 in other.terms:
                prod = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                if prod in acc:
                    acc.discard(prod)
                else:
                    acc.add(prod)
        return Poly(self.context, acc)

    def mul_monomial(self, mono: tuple[int, ...]) -> "Poly":
        """Multiply by a single monomial (no cancellation can occur)."""
        return Poly(self.context, (tuple(e1 + e2 for e1, e2 in zip(m, mono)) for m in self.terms))

    def square(self) -> "Poly":
        """Frobenius square: doubling every exponent equals self * self."""
        return Poly(self.context, (tuple(2 * e for e in m) for m in self.terms))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = self.context.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    # -- graded-ring operations ------------------------------------------------

    def substitute(self, images: Mapping[str, "Poly"]) -> "Poly":
        """Ring-homomorphic image; every variable occurring needs an image."""
        target = None
        for img in images.values():
            if target is None:
                target = img.context
            elif img.context != target:
                raise ContextMismatchError("images live in different contexts")
        names = self.context.names
        img_list: list[Poly | None] = [images.get(n) for n in names]
        used = [False] * len(names)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        for i, u in enumerate(used):
            if u and img_list[i] is None:
                raise MissingImageError(f"no image for variable {names[i]!r}")
        if target is None:
            raise MissingImageError("empty image map")
        out = Poly(target, ())
        for m in self.terms:
            term = target.one()
            for i, e in enumerate(m):
                if e:
                    term = term * (img_list[i] ** e)
            out = out + term
        return out

    def divide_exact(self, name: str) -> "Poly":
        """Divide by a variable; raises NotDivisibleError listing bad terms."""
        i = self.context.index_of(name)
        bad = [m for m in self.terms if m[i] == 0]
        if bad:
            witness = Poly(self.context, bad)
            raise NotDivisibleError(f"terms not divisible by {name}: {witness}", witness)
        return Poly(self.context, (m[:i] + (m[i] - 1,) + m[i + 1 :] for m in self.terms))

    def truncate_above(self, bound: int) -> "Poly":
        """Drop all terms of weighted degree > bound."""
        if bound < 0:
            raise ValueError("bound must be >= 0")
        ctx = self.context
        return Poly(ctx, (m for m in self.terms if ctx.wdeg(m) <= bound))

    def homogeneity_check(self, d: int) -> "CheckResult":
        """All terms share one weighted degree mod d; witness on failure."""
        if d < 1:
            raise ValueError("modulus must be >= 1")
        ctx = self.context
        first: tuple[int, tuple[int, ...]] | None = None
        for m in self.terms:
            deg = ctx.wdeg(m)
            if first is None:
                first = (deg, m)
            elif deg % d != first[0] % d:
                witness = ((ctx.monomial_str(first[1]), first[0]), (ctx.monomial_str(m), deg))
                return CheckResult(False, witness)
        return CheckResult(True, None)


@dataclass(frozen=True)
class CheckResult:
    """Boolean outcome plus an explanatory witness when it is False."""

    ok: bool
    witness: object

    def __bool__(self):
        return self.ok
