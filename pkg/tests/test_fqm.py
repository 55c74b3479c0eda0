"""Tests for finite quadratic modules: censuses, the pairing-count table,
isotropic structure, reflections, and the orthogonal group."""

from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from igusa.fqm import (
    TYPE_ORDER_AMBIENT,
    TYPE_ORDER_RESTRICTION,
    FiniteQuadraticModule,
    FqmAutomorphism,
    direct_sum,
    element_types,
    find_isomorphism,
    isotropic_planes,
    isotropic_vectors,
    orthogonal_group,
    pairing_table,
    radical_class,
    reflection,
    type_census,
    type_census_mod_negation,
)
from igusa.lattices import (
    ambient_lattice,
    discriminant_module,
    restriction_lattice,
    standard,
)


@pytest.fixture(scope="module")
def AN():
    return discriminant_module(ambient_lattice())


@pytest.fixture(scope="module")
def AM():
    return discriminant_module(restriction_lattice())


# ---------------------------------------------------------------------------
# censuses
# ---------------------------------------------------------------------------


def test_ambient_census(AN):
    assert type_census(AN) == {
        "00": 1,
        "0": 15,
        "1": 15,
        "10": 1,
        "3/2": 20,
        "1/2": 12,
    }
    assert sum(type_census(AN).values()) == 64


def test_restriction_census_mod_negation(AM):
    assert type_census_mod_negation(AM) == {
        "00": 1,
        "0": 15,
        "1": 15,
        "10": 1,
        "3/4": 6,
        "7/4": 10,
    }
    assert sum(type_census_mod_negation(AM).values()) == 48


def test_negation_acts_by_kappa_shift_on_order_four(AM):
    kappa = radical_class(AM)
    for x in AM.elements():
        if AM.order_of(x) == 4:
            assert AM.neg(x) == AM.add(x, kappa)
        else:
            assert AM.neg(x) == x


def test_zero_element_type(AN):
    assert element_types(AN)[0] == "00"


# ---------------------------------------------------------------------------
# radical class
# ---------------------------------------------------------------------------


def test_radical_class_values(AN, AM):
    N = ambient_lattice()
    kappa = radical_class(AN)
    assert AN.class_of_vector(N.vector(a1=Fraction(1, 2), a2=Fraction(1, 2))) == kappa
    assert AN.q(kappa) == 1  # q = -1 = 1 mod 2
    assert element_types(AN)[kappa] == "10"

    M = restriction_lattice()
    kappa_m = radical_class(AM)
    assert AM.class_of_vector(M.vector(a=Fraction(1, 2))) == kappa_m
    # kappa_M pairs integrally with the whole 2-torsion subgroup
    for x in AM.elements():
        if AM.order_of(x) <= 2:
            assert AM.b(kappa_m, x) == 0


def test_radical_class_missing_is_an_error():
    AU2 = discriminant_module(standard("U", 2))
    with pytest.raises(ValueError):
        radical_class(AU2)


# ---------------------------------------------------------------------------
# pairing table
# ---------------------------------------------------------------------------

# Frozen 6x6x2 table: for a representative u of the row type, the pair
# (m0, m1) counts elements v of the column type with b(u, v) = 0 and 1/2.
PAIRING_TABLE = {
    "00": [(1, 0), (15, 0), (15, 0), (1, 0), (20, 0), (12, 0)],
    "0": [(1, 0), (7, 8), (7, 8), (1, 0), (12, 8), (4, 8)],
    "1": [(1, 0), (7, 8), (7, 8), (1, 0), (8, 12), (8, 4)],
    "10": [(1, 0), (15, 0), (15, 0), (1, 0), (0, 20), (0, 12)],
    "3/2": [(1, 0), (9, 6), (6, 9), (0, 1), (10, 10), (6, 6)],
    "1/2": [(1, 0), (5, 10), (10, 5), (0, 1), (10, 10), (6, 6)],
}


def test_pairing_table_matches_frozen_values(AN):
    table = pairing_table(AN)
    for tu in TYPE_ORDER_AMBIENT:
        got = [table[tu][tv] for tv in TYPE_ORDER_AMBIENT]
        assert got == PAIRING_TABLE[tu], f"row {tu}"


def test_pairing_table_row_sums(AN):
    table = pairing_table(AN)
    census = type_census(AN)
    for tu in TYPE_ORDER_AMBIENT:
        for tv in TYPE_ORDER_AMBIENT:
            m0, m1 = table[tu][tv]
            assert m0 + m1 == census[tv]


def test_pairing_table_double_count(AN):
    # #(u of type s) * m1(s -> t) must equal #(v of type t) * m1(t -> s)
    table = pairing_table(AN)
    census = type_census(AN)
    for s in TYPE_ORDER_AMBIENT:
        for t in TYPE_ORDER_AMBIENT:
            assert census[s] * table[s][t][1] == census[t] * table[t][s][1]


# ---------------------------------------------------------------------------
# isotropic structure
# ---------------------------------------------------------------------------


def test_isotropic_vectors_and_planes(AN):
    vecs = isotropic_vectors(AN)
    assert len(vecs) == 15
    planes = isotropic_planes(AN)
    assert len(planes) == 15
    incidence = Counter()
    for plane in planes:
        assert len(plane) == 3
        for x in plane:
            assert AN.q4[x] == 0
            incidence[x] += 1
        a, b, c = plane
        assert AN.add(a, b) == c or AN.add(a, c) == b or AN.add(b, c) == a
    # every nonzero isotropic vector lies in exactly 3 planes
    assert set(incidence) == set(vecs)
    assert all(v == 3 for v in incidence.values())
    # double count: 15 vectors x 3 = 15 planes x 3
    assert sum(incidence.values()) == 45


def test_isotropic_structure_of_restriction_module(AM):
    assert len(isotropic_vectors(AM)) == 15
    subgroups = isotropic_planes(AM)
    assert len(subgroups) == 15
    kappa_m = radical_class(AM)
    for s in subgroups:
        # each is a Klein four-group of 2-torsion classes
        assert all(AM.order_of(x) == 2 for x in s)
        for x in s:
            for y in s:
                assert AM.b(x, y) == 0
    # each contains three nonzero isotropic vectors
    assert all(len(s) == 3 for s in subgroups)


# ---------------------------------------------------------------------------
# reflections
# ---------------------------------------------------------------------------


def test_reflection_requires_q_one(AN):
    iso = isotropic_vectors(AN)
    with pytest.raises(ValueError):
        reflection(AN, iso[0])


def test_reflections_are_involutions(AN):
    q1 = [x for x in AN.elements() if AN.q4[x] == 4]
    assert len(q1) == 16
    for alpha in q1:
        t = reflection(AN, alpha)
        assert (t * t).is_identity()
        assert t.preserves_form()
        assert t.is_group_homomorphism()


def test_reflection_fixes_orthogonal_elements(AN):
    q1 = [x for x in AN.elements() if AN.q4[x] == 4]
    alpha = q1[0]
    t = reflection(AN, alpha)
    for beta in AN.elements():
        if AN.b(beta, alpha) == 0:
            assert t(beta) == beta
        else:
            assert t(beta) == AN.add(beta, alpha)


def test_kappa_reflection_moves_exactly_32(AN):
    kappa = radical_class(AN)
    t = reflection(AN, kappa)
    assert t.moved_points() == 32
    labels = element_types(AN)
    moved_types = {labels[x] for x in AN.elements() if t(x) != x}
    assert moved_types == {"3/2", "1/2"}
    # the moved classes are shifted by kappa itself
    for x in AN.elements():
        if t(x) != x:
            assert t(x) == AN.add(x, kappa)


def test_kappa_reflection_is_the_component_swap(AN):
    # swapping the two (-2)-generators of the ambient lattice induces the
    # same involution of the discriminant group as the kappa-reflection
    N = ambient_lattice()
    kappa = radical_class(AN)
    t = reflection(AN, kappa)
    i_a1 = N.labels.index("a1")
    i_a2 = N.labels.index("a2")
    for x in AN.elements():
        lift = list(AN.lift_vector(x))
        lift[i_a1], lift[i_a2] = lift[i_a2], lift[i_a1]
        assert AN.class_of_vector(lift) == t(x)


# ---------------------------------------------------------------------------
# orthogonal group
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def OQN(AN):
    return orthogonal_group(AN)


def test_orthogonal_group_order(OQN):
    assert OQN.order == 1440


def test_orthogonal_group_closed(OQN):
    assert OQN.is_closed()


def test_orthogonal_group_preserves_form(OQN, AN):
    perms = np.stack([g.perm for g in OQN.elements])
    assert np.all(AN.q4[perms] == AN.q4[None, :])
    for g in OQN.elements[:50]:
        assert g.preserves_form()


def test_all_reflections_are_members(OQN, AN):
    q1 = [x for x in AN.elements() if AN.q4[x] == 4]
    for alpha in q1:
        assert reflection(AN, alpha) in OQN


def test_reflections_generate_the_group(OQN, AN):
    # computed cross-check: the subgroup generated by the 16 reflections is
    # the whole orthogonal group
    q1 = [x for x in AN.elements() if AN.q4[x] == 4]
    refls = [reflection(AN, a) for a in q1]
    ident = FqmAutomorphism(AN, np.arange(AN.size))
    group = {ident.key}
    frontier = [ident]
    while frontier:
        new = []
        for g in frontier:
            for s in refls:
                p = g * s
                if p.key not in group:
                    group.add(p.key)
                    new.append(p)
        frontier = new
    assert len(group) == OQN.order == 1440


def test_center_is_identity_and_kappa_reflection(OQN, AN):
    center = OQN.center()
    assert len(center) == 2
    kappa = radical_class(AN)
    t = reflection(AN, kappa)
    keys = {g.key for g in center}
    assert t.key in keys
    orders = sorted(g.order() for g in center)
    assert orders == [1, 2]


def test_node_budget_is_enforced(AN):
    with pytest.raises(RuntimeError):
        orthogonal_group(AN, node_budget=10)


def test_orthogonal_group_rejects_mixed_orders(AM):
    with pytest.raises(ValueError):
        orthogonal_group(AM)


# ---------------------------------------------------------------------------
# module construction guards
# ---------------------------------------------------------------------------


def test_inconsistent_generator_data_rejected():
    # b(g,g) != q(g) mod 1
    with pytest.raises(ValueError):
        FiniteQuadraticModule((2,), (4,), ((2,),))
    # order incompatible with pairing: d*b must vanish mod 1
    with pytest.raises(ValueError):
        FiniteQuadraticModule((2,), (0,), ((1,),))


def test_direct_sum_of_modules():
    A1 = discriminant_module(standard("A1"))
    S = direct_sum(A1, A1)
    assert S.size == 4
    qs = sorted(S.q(x) for x in S.elements())
    assert qs == [Fraction(0), Fraction(1), Fraction(3, 2), Fraction(3, 2)]
    with pytest.raises(ValueError):
        direct_sum()


def test_find_isomorphism_positive_and_negative():
    u2 = discriminant_module(standard("U", 2))
    a1 = discriminant_module(standard("A1"))
    assert find_isomorphism(u2, u2) is not None
    # u is not isomorphic to A1 + A1: q-value multisets differ
    s = direct_sum(a1, a1)
    assert find_isomorphism(u2, s) is None
