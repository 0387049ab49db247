"""Exact finite-group models used as presentation-independent oracles.

Binary polyhedral groups are built from unit quaternions with coordinates
in Q(sqrt(2)) or Q(sqrt(5)); generalized quaternion groups use the symbolic
normal form a^i b^eps.  All arithmetic is exact, equality is literal, and
multiplication tables are precomputed so enumeration stays cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceededError, GroupConstructionError

TUPLE_STEP_BUDGET = 50_000_000


@dataclass(frozen=True)
class QuadRational:
    """Exact element a + b*sqrt(d) of a real quadratic field, d in {2, 5}."""

    a: Fraction
    b: Fraction
    d: int

    @staticmethod
    def of(a, b=0, d: int = 2) -> "QuadRational":
        return QuadRational(Fraction(a), Fraction(b), d)

    def __add__(self, other: "QuadRational") -> "QuadRational":
        assert self.d == other.d
        return QuadRational(self.a + other.a, self.b + other.b, self.d)

    def __sub__(self, other: "QuadRational") -> "QuadRational":
        assert self.d == other.d
        return QuadRational(self.a - other.a, self.b - other.b, self.d)

    def __mul__(self, other: "QuadRational") -> "QuadRational":
        assert self.d == other.d
        return QuadRational(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    def __neg__(self) -> "QuadRational":
        return QuadRational(-self.a, -self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sort_key(self):
        return (self.a, self.b)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt{self.d}"


@dataclass(frozen=True)
class Quaternion:
    """Quaternion with QuadRational coordinates (real, i, j, k)."""

    w: QuadRational
    x: QuadRational
    y: QuadRational
    z: QuadRational

    def __mul__(self, o: "Quaternion") -> "Quaternion":
        w, x, y, z = self.w, self.x, self.y, self.z
        return Quaternion(
            w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w,
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> QuadRational:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def sort_key(self):
        return (self.w.sort_key(), self.x.sort_key(), self.y.sort_key(), self.z.sort_key())

    def __str__(self):
        return f"({self.w}, {self.x}, {self.y}, {self.z})"


def _q(vals, d: int) -> Quaternion:
    parts = []
    for v in vals:
        if isinstance(v, QuadRational):
            parts.append(v)
        else:
            parts.append(QuadRational.of(v, 0, d))
    return Quaternion(*parts)


class FiniteGroup:
    """Indexed element list with a full multiplication table."""

    def __init__(self, name: str, elements: Sequence, product, expected_order: Optional[int] = None):
        self.name = name
        self.elements = tuple(elements)
        n = len(self.elements)
        if expected_order is not None and n != expected_order:
            raise GroupConstructionError(f"{name}: got {n} elements, expected {expected_order}")
        index = {e: i for i, e in enumerate(self.elements)}
        if len(index) != n:
            raise GroupConstructionError(f"{name}: duplicate elements")
        table = []
        for a in self.elements:
            row = []
            for b in self.elements:
                p = product(a, b)
                if p not in index:
                    raise GroupConstructionError(f"{name}: product escapes the element set")
                row.append(index[p])
            table.append(row)
        self.table = table
        self._index = index
        self.identity = self._find_identity()
        self.inverse = [self._find_inverse(i) for i in range(n)]
        self._orders: list[Optional[int]] = [None] * n

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def index_of(self, element) -> int:
        return self._index[element]

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(n)):
                return e
        raise GroupConstructionError(f"{self.name}: no identity element")

    def _find_inverse(self, a: int) -> int:
        for b in range(self.order):
            if self.table[a][b] == self.identity:
                return b
        raise GroupConstructionError(f"{self.name}: element {a} has no inverse")

    def element_order(self, a: int) -> int:
        cached = self._orders[a]
        if cached is not None:
            return cached
        n, acc = 1, a
        while acc != self.identity:
            acc = self.mul(acc, a)
            n += 1
        self._orders[a] = n
        return n

    def is_p_element(self, a: int, p: int) -> bool:
        n = self.element_order(a)
        while n % p == 0:
            n //= p
        return n == 1

    def conjugate(self, g: int, a: int) -> int:
        return self.mul(self.mul(g, a), self.inverse[g])

    def commute(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def closure(self, generators: Iterable[int], cap: Optional[int] = None) -> frozenset[int]:
        seen = {self.identity} | set(generators)
        if cap is not None and len(seen) > cap:
            raise GroupConstructionError("closure exceeded expected size")
        frontier = list(seen)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(seen):
                    for c in (self.table[a][b], self.table[b][a]):
                        if c not in seen:
                            seen.add(c)
                            nxt.append(c)
                            if cap is not None and len(seen) > cap:
                                raise GroupConstructionError("closure exceeded expected size")
            frontier = nxt
        return frozenset(seen)

    def table_dump(self) -> str:
        """Text fixture format: order line, then the row-major index table."""
        lines = [str(self.order)]
        lines.extend(" ".join(str(v) for v in row) for row in self.table)
        return "\n".join(lines) + "\n"


def _closure_elements(generators: Sequence, product, expected_order: int, name: str):
    seen = set(generators)
    frontier = list(generators)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(seen):
                for c in (product(a, b), product(b, a)):
                    if c not in seen:
                        if len(seen) >= expected_order:
                            raise GroupConstructionError(f"{name}: closure exceeds order {expected_order}")
                        seen.add(c)
                        nxt.append(c)
        frontier = nxt
    return sorted(seen, key=lambda q: q.sort_key())


def hurwitz_units(d: int = 2) -> list[Quaternion]:
    """The 24 unit Hurwitz quaternions, with coordinates in Q(sqrt(d))."""
    half = Fraction(1, 2)
    out = []
    for axis in range(4):
        for sign in (1, -1):
            coords = [0, 0, 0, 0]
            coords[axis] = sign
            out.append(_q(coords, d))
    for sw in (half, -half):
        for sx in (half, -half):
            for sy in (half, -half):
                for sz in (half, -half):
                    out.append(_q([sw, sx, sy, sz], d))
    return out


def _binary_tetrahedral_gens(d: int = 2) -> list[Quaternion]:
    i = _q([0, 1, 0, 0], d)
    omega = _q([Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)], d)
    return [i, omega]


@lru_cache(maxsize=None)
def binary_tetrahedral() -> FiniteGroup:
    gens = _binary_tetrahedral_gens(2)
    elems = _closure_elements(gens, lambda a, b: a * b, 24, "2T")
    return FiniteGroup("2T", elems, lambda a, b: a * b, expected_order=24)


@lru_cache(maxsize=None)
def binary_octahedral() -> FiniteGroup:
    rt = QuadRational.of(0, Fraction(1, 2), 2)  # 1/sqrt(2) = sqrt(2)/2
    r = Quaternion(rt, rt, QuadRational.of(0, 0, 2), QuadRational.of(0, 0, 2))
    gens = _binary_tetrahedral_gens(2) + [r]
    elems = _closure_elements(gens, lambda a, b: a * b, 48, "2O")
    return FiniteGroup("2O", elems, lambda a, b: a * b, expected_order=48)


@lru_cache(maxsize=None)
def binary_icosahedral() -> FiniteGroup:
    phi_half = QuadRational.of(Fraction(1, 4), Fraction(1, 4), 5)        # phi/2
    phi_inv_half = QuadRational.of(Fraction(-1, 4), Fraction(1, 4), 5)   # (phi-1)/2
    zero = QuadRational.of(0, 0, 5)
    half = QuadRational.of(Fraction(1, 2), 0, 5)
    sigma = Quaternion(half, zero, phi_half, phi_inv_half)
    gens = _binary_tetrahedral_gens(5) + [sigma]
    elems = _closure_elements(gens, lambda a, b: a * b, 120, "2I")
    return FiniteGroup("2I", elems, lambda a, b: a * b, expected_order=120)


def octahedral_units(d: int = 2) -> list[Quaternion]:
    """The 24 coordinate permutations of (+-1 +-i)/sqrt(2)."""
    rt2 = QuadRational.of(0, Fraction(1, 2), d)
    zero = QuadRational.of(0, 0, d)
    out = []
    for p1 in range(4):
        for p2 in range(p1 + 1, 4):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    coords = [zero] * 4
                    coords[p1] = QuadRational.of(0, Fraction(s1, 2), d)
                    coords[p2] = QuadRational.of(0, Fraction(s2, 2), d)
                    out.append(Quaternion(*coords))
    return out


def icosahedral_units() -> list[Quaternion]:
    """The 96 even coordinate permutations of (0 +-1 +-1/phi +-phi)/2."""
    zero = QuadRational.of(0, 0, 5)
    even_perms = [p for p in _permutations4() if _parity(p) == 0]
    out = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                base = [
                    zero,
                    QuadRational.of(Fraction(s1, 2), 0, 5),
                    QuadRational.of(Fraction(-s2, 4), Fraction(s2, 4), 5),
                    QuadRational.of(Fraction(s3, 4), Fraction(s3, 4), 5),
                ]
                for p in even_perms:
                    out.append(Quaternion(*(base[p[i]] for i in range(4))))
    return sorted(set(out), key=lambda q: q.sort_key())


def _permutations4():
    from itertools import permutations

    return list(permutations(range(4)))


def _parity(perm) -> int:
    inv = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
    return inv % 2


@lru_cache(maxsize=None)
def quaternion_group(m: int) -> FiniteGroup:
    """Generalized quaternion group of order 2^(m+2) in a^i b^eps form."""
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 2 ** (m + 1)

    def product(p, q):
        i, e = p
        j, f = q
        if e == 0:
            return ((i + j) % n, f)
        if f == 0:
            return ((i - j) % n, 1)
        return ((i - j + n // 2) % n, 0)

    elems = [(i, e) for e in (0, 1) for i in range(n)]
    return FiniteGroup(f"Q{2 * n}", elems, product, expected_order=2 * n)


@lru_cache(maxsize=None)
def cyclic_group(k: int) -> FiniteGroup:
    """Cyclic 2-group of order 2^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2 ** k
    return FiniteGroup(f"Z{n}", range(n), lambda a, b: (a + b) % n, expected_order=n)


def build_group(which: str, param: Optional[int] = None) -> FiniteGroup:
    """Dispatch on a family tag: q(m), 2t, 2o, 2i, cyclic(k)."""
    tag = which.lower()
    if tag == "q":
        if param is None:
            raise ValueError("q needs the parameter m")
        return quaternion_group(param)
    if tag == "cyclic":
        if param is None:
            raise ValueError("cyclic needs the parameter k")
        return cyclic_group(param)
    if tag == "2t":
        return binary_tetrahedral()
    if tag == "2o":
        return binary_octahedral()
    if tag == "2i":
        return binary_icosahedral()
    raise ValueError(f"unknown group tag {which!r}")


# -- enumeration oracles --------------------------------------------------------


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Conjugation orbits, each sorted, listed by smallest member."""
    seen = [False] * G.order
    classes = []
    for a in range(G.order):
        if seen[a]:
            continue
        orbit = {G.conjugate(g, a) for g in range(G.order)}
        for b in orbit:
            seen[b] = True
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: c[0])
    return classes


def commuting_tuple_classes(G: FiniteGroup, s: int, p: int = 2, budget: int = TUPLE_STEP_BUDGET) -> int:
    """Orbit count of pairwise-commuting s-tuples of p-power-order elements
    under simultaneous conjugation."""
    if s < 1:
        raise ValueError("s must be >= 1")
    pelts = [a for a in range(G.order) if G.is_p_element(a, p)]
    cost = (len(pelts) ** s) * G.order
    if cost > budget:
        raise BudgetExceededError(
            f"tuple enumeration cost {cost} exceeds budget {budget} for {G.name}, s={s}"
        )
    canon: set[tuple[int, ...]] = set()
    everyone = range(G.order)

    def rec(chosen: list[int]):
        if len(chosen) == s:
            rep = min(tuple(G.conjugate(g, a) for a in chosen) for g in everyone)
            canon.add(rep)
            return
        for a in pelts:
            if all(G.commute(a, b) for b in chosen):
                chosen.append(a)
                rec(chosen)
                chosen.pop()

    rec([])
    return len(canon)


def sylow_2_subgroup(G: FiniteGroup) -> frozenset[int]:
    """A maximal 2-subgroup, grown greedily by closure."""
    target = 1
    n = G.order
    while n % 2 == 0:
        target *= 2
        n //= 2
    H = frozenset({G.identity})
    twos = [a for a in range(G.order) if G.is_p_element(a, 2)]
    while len(H) < target:
        for a in twos:
            if a in H:
                continue
            try:
                K = G.closure(H | {a}, cap=target)
            except GroupConstructionError:
                continue
            if len(K) & (len(K) - 1) == 0:  # still a 2-group
                H = K
                break
        else:
            raise GroupConstructionError("could not grow the 2-subgroup")
    return H


def sylow2_conjugates(G: FiniteGroup) -> int:
    """Number of conjugates of one maximal 2-subgroup."""
    H = sylow_2_subgroup(G)
    conjugates = {frozenset(G.conjugate(g, a) for a in H) for g in range(G.order)}
    return len(conjugates)


def subgroup_index(G: FiniteGroup, generators: Sequence) -> int:
    """Index |G| / |<generators>|.

    Generators are element values; plain ints are read as indices unless the
    group's elements are themselves ints (cyclic groups).
    """
    ints_as_values = isinstance(G.elements[0], int)
    idx = []
    for g in generators:
        if isinstance(g, int) and not ints_as_values:
            idx.append(g)
        else:
            idx.append(G.index_of(g))
    H = G.closure(idx)
    assert G.order % len(H) == 0
    return G.order // len(H)
