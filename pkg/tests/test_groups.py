import random
from fractions import Fraction
from itertools import product

import pytest

from morava2.errors import BudgetExceededError, GroupConstructionError
from morava2.groups import (
    FiniteGroup,
    QuadRational,
    Quaternion,
    _binary_tetrahedral_gens,
    _q,
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    build_group,
    commuting_tuple_classes,
    conjugacy_classes,
    cyclic_group,
    hurwitz_units,
    icosahedral_units,
    octahedral_units,
    quaternion_group,
    subgroup_index,
    sylow2_conjugates,
)


def test_orders():
    assert quaternion_group(1).order == 8
    assert quaternion_group(2).order == 16
    assert quaternion_group(3).order == 32
    assert binary_tetrahedral().order == 24
    assert binary_octahedral().order == 48
    assert binary_icosahedral().order == 120
    assert cyclic_group(3).order == 8


def test_quaternion_group_structure():
    q16 = quaternion_group(2)
    a = q16.index_of((1, 0))
    assert q16.element_order(a) == 8
    b = q16.index_of((0, 1))
    assert q16.element_order(b) == 4
    # b^2 = a^4 and b a b^-1 = a^-1
    assert q16.mul(b, b) == q16.index_of((4, 0))
    assert q16.conjugate(b, a) == q16.index_of((7, 0))


def test_element_sets_match_descriptions():
    assert set(binary_tetrahedral().elements) == set(hurwitz_units(2))
    assert set(binary_octahedral().elements) == set(hurwitz_units(2)) | set(octahedral_units(2))
    icosa = icosahedral_units()
    assert len(icosa) == 96
    assert set(binary_icosahedral().elements) == set(hurwitz_units(5)) | set(icosa)


def test_unit_norms():
    for g in binary_octahedral().elements:
        assert g.norm() == QuadRational.of(1, 0, 2)
    for g in binary_icosahedral().elements:
        assert g.norm() == QuadRational.of(1, 0, 5)


def test_quaternion_norm_multiplicative_spot_check():
    rng = random.Random(7)
    els = binary_icosahedral().elements
    for _ in range(50):
        a, b = rng.choice(els), rng.choice(els)
        assert (a * b).norm() == a.norm() * b.norm()


def test_conjugacy_class_counts():
    assert len(conjugacy_classes(quaternion_group(1))) == 5
    assert len(conjugacy_classes(quaternion_group(2))) == 7
    assert len(conjugacy_classes(quaternion_group(3))) == 11
    assert len(conjugacy_classes(binary_tetrahedral())) == 7
    assert len(conjugacy_classes(binary_octahedral())) == 8
    assert len(conjugacy_classes(binary_icosahedral())) == 9
    assert len(conjugacy_classes(cyclic_group(2))) == 4


def test_class_equation():
    for G in (quaternion_group(2), binary_tetrahedral(), binary_octahedral(), binary_icosahedral()):
        classes = conjugacy_classes(G)
        assert sum(len(c) for c in classes) == G.order
        for c in classes:
            assert G.order % len(c) == 0


EXPECTED_TUPLE_CLASSES = {
    ("q8", 1): 5,
    ("q8", 2): 22,
    ("q8", 3): 92,
    ("q16", 1): 7,
    ("q16", 2): 46,
    ("q32", 1): 11,
    ("2t", 1): 3,
    ("2t", 2): 10,
    ("2t", 3): 36,
    ("2o", 1): 6,
    ("2o", 2): 40,
    ("2i", 1): 3,
    ("2i", 2): 10,
}


def _group_for(tag):
    return {
        "q8": lambda: quaternion_group(1),
        "q16": lambda: quaternion_group(2),
        "q32": lambda: quaternion_group(3),
        "2t": binary_tetrahedral,
        "2o": binary_octahedral,
        "2i": binary_icosahedral,
    }[tag]()


@pytest.mark.parametrize("tag,s", sorted(EXPECTED_TUPLE_CLASSES))
def test_commuting_tuple_classes_frozen_values(tag, s):
    assert commuting_tuple_classes(_group_for(tag), s, 2) == EXPECTED_TUPLE_CLASSES[(tag, s)]


def _burnside_tuple_count(G: FiniteGroup, s: int, p: int) -> int:
    """Independent oracle: orbit counting via the averaging lemma."""
    pelts = [a for a in range(G.order) if G.is_p_element(a, p)]
    tuples = [t for t in product(pelts, repeat=s)
              if all(G.commute(a, b) for i, a in enumerate(t) for b in t[i + 1:])]
    total = 0
    for g in range(G.order):
        total += sum(1 for t in tuples if all(G.conjugate(g, a) == a for a in t))
    assert total % G.order == 0
    return total // G.order


@pytest.mark.parametrize("tag,s", [("q8", 1), ("q8", 2), ("q16", 1), ("q16", 2), ("2t", 1), ("2t", 2), ("2o", 1)])
def test_tuple_classes_against_burnside_oracle(tag, s):
    G = _group_for(tag)
    assert commuting_tuple_classes(G, s, 2) == _burnside_tuple_count(G, s, 2)


def test_tuple_classes_s1_equals_p_power_class_count():
    for G in (quaternion_group(1), quaternion_group(2), binary_tetrahedral(), binary_octahedral()):
        classes = conjugacy_classes(G)
        expected = sum(1 for c in classes if G.is_p_element(c[0], 2))
        assert commuting_tuple_classes(G, 1, 2) == expected


def test_tuple_classes_abelian():
    for k in (1, 2, 3):
        G = cyclic_group(k)
        for s in (1, 2, 3):
            assert commuting_tuple_classes(G, s, 2) == (2 ** k) ** s


def test_tuple_budget():
    with pytest.raises(BudgetExceededError):
        commuting_tuple_classes(binary_icosahedral(), 2, 2, budget=100)


def test_sylow2_conjugates():
    assert sylow2_conjugates(binary_octahedral()) == 3
    assert sylow2_conjugates(binary_tetrahedral()) == 1
    assert sylow2_conjugates(quaternion_group(2)) == 1


def test_subgroup_indices():
    ti = binary_icosahedral()
    assert subgroup_index(ti, _binary_tetrahedral_gens(5)) == 5

    to = binary_octahedral()
    rt = QuadRational.of(0, Fraction(1, 2), 2)
    zero = QuadRational.of(0, 0, 2)
    z = Quaternion(rt, rt, zero, zero)
    j = _q([0, 0, 1, 0], 2)
    assert subgroup_index(to, [z, j]) == 3

    q8 = quaternion_group(1)
    assert subgroup_index(q8, list(q8.elements)) == 1


def test_build_group_dispatch():
    assert build_group("q", 2).order == 16
    assert build_group("cyclic", 2).order == 4
    assert build_group("2t").order == 24
    assert build_group("2o").order == 48
    assert build_group("2i").order == 120
    with pytest.raises(ValueError):
        build_group("nope")
    with pytest.raises(ValueError):
        build_group("q")


def test_closure_cap():
    G = binary_octahedral()
    with pytest.raises(GroupConstructionError):
        G.closure(range(G.order), cap=10)


def test_table_dump_format():
    G = quaternion_group(1)
    dump = G.table_dump()
    lines = dump.splitlines()
    assert lines[0] == "8"
    assert len(lines) == 9
    rows = [[int(v) for v in line.split()] for line in lines[1:]]
    for a in range(8):
        for b in range(8):
            assert rows[a][b] == G.mul(a, b)
    assert dump == G.table_dump()


def test_associativity_spot_check():
    rng = random.Random(11)
    G = binary_octahedral()
    for _ in range(100):
        a, b, c = rng.randrange(48), rng.randrange(48), rng.randrange(48)
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
