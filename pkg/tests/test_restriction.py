"""Embedding, member-discriminant combinatorics, and restriction cases."""

from fractions import Fraction
from itertools import product

import pytest

import igusa.restriction as restriction
from igusa.fqm import element_types, isotropic_planes, radical_class
from igusa.lattices import ambient_lattice, restriction_lattice
from igusa.restriction import (
    all_v1_images,
    am_census,
    boundary_configuration,
    build_embedding,
    heegner_restriction_cases,
    restriction_case,
    restriction_module,
    seven_lines,
    v_to_v1,
)
from igusa.weil import ambient_module

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Embedding
# ---------------------------------------------------------------------------


def test_embedding_basis_and_complement():
    emb = build_embedding()
    N = emb.ambient
    diff = emb.member_basis[4]
    assert N.norm(diff) == -4
    assert N.norm(emb.complement_generator) == -4
    assert N.ip(diff, emb.complement_generator) == 0
    gram = [[N.ip(u, v) for v in emb.member_basis] for u in emb.member_basis]
    assert gram == [list(row) for row in restriction_lattice().gram]


def test_member_discriminant_group_structure():
    A = restriction_module()
    assert A.orders == (2, 2, 2, 2, 4)
    assert A.size == 64
    # the radical class is the half of the norm -4 generator
    lat = restriction_lattice()
    assert A.class_of_vector(lat.vector(a=HALF)) == radical_class(A)


def test_embed_split_roundtrip():
    emb = build_embedding()
    vec = emb.embed((1, 2, 0, -1, 3))
    assert vec == (1, 2, 0, -1, 3, -3)
    r1, m = emb.split(vec)
    assert m == 0 and r1 == vec
    assert emb.member_coordinates(r1) == (1, 2, 0, -1, 3)
    # a root generator splits with m = 1
    r1, m = emb.split((0, 0, 0, 0, 1, 0))
    assert m == 1
    assert r1 == (0, 0, 0, 0, HALF, -HALF)


def test_split_and_solve_rejections():
    emb = build_embedding()
    with pytest.raises(ValueError, match="integer m"):
        emb.split((0, 0, 0, 0, HALF, 0))
    with pytest.raises(ValueError, match="outside the member span"):
        emb.member_coordinates((0, 0, 0, 0, 1, 0))
    with pytest.raises(ValueError, match="length"):
        emb.embed((1, 2, 3))


# ---------------------------------------------------------------------------
# Census and boundary combinatorics
# ---------------------------------------------------------------------------


def test_census_counts():
    assert am_census() == {
        "00": 1,
        "0": 15,
        "1": 15,
        "10": 1,
        "3/4": 6,
        "7/4": 10,
    }


def test_negation_action():
    A = restriction_module()
    labels = element_types(A)
    kappa = radical_class(A)
    for x in A.elements():
        if labels[x] in ("3/4", "7/4"):
            assert A.order_of(x) == 4
            assert A.neg(x) == A.add(x, kappa)
        else:
            assert A.order_of(x) <= 2
            assert A.neg(x) == x


def test_boundary_configuration():
    assert boundary_configuration() == {
        "points": 15,
        "lines": 15,
        "lines_through_each_point": 3,
        "points_on_each_line": 3,
        "perpendicular_isotropic_count": 7,
    }


# ---------------------------------------------------------------------------
# Single-vector restriction cases
# ---------------------------------------------------------------------------


def test_root_generator_case():
    case = restriction_case((0, 0, 0, 0, 1, 0))
    assert case.m == 1
    assert case.r1 == (0, 0, 0, 0, HALF, -HALF)
    assert case.r_norm == -2 and case.r1_norm == -1
    assert case.ambient_type == "3/2"
    assert case.beta_type == "7/4"


def test_paired_root_generators_share_the_member_component():
    first = restriction_case((0, 0, 0, 0, 1, 0))
    second = restriction_case((0, 0, 0, 0, 0, -1))
    assert first.r1 == second.r1
    assert {first.m, second.m} == {1, -1}


def test_hyperbolic_difference_case():
    case = restriction_case((1, -1, 0, 0, 0, 0))
    assert case.m == 0
    assert case.r_norm == case.r1_norm == -4
    assert case.ambient_type == "1" and case.beta_type == "1"


def test_characteristic_vector_case():
    case = restriction_case((0, 0, 0, 0, 1, -1))
    assert case.m == 0 and case.r1_norm == -4
    assert case.ambient_type == "10" and case.beta_type == "10"


def test_case_requires_integral_vector():
    with pytest.raises(ValueError, match="integral"):
        restriction_case((HALF, 0, 0, 0, 0, 0))


# ---------------------------------------------------------------------------
# Box enumeration
# ---------------------------------------------------------------------------


def test_case_table_at_bound_three():
    rep = heegner_restriction_cases(3)
    cases = rep["cases"]
    assert cases[-4]["m_values"] == (0,)
    assert cases[-4]["r1_norms"] == (-4,)
    assert cases[-4]["ambient_types"] == ("1", "10")
    assert cases[-4]["beta_types"] == ("1", "10")
    assert cases[-4]["hyperplane_multiplicity"] == 1
    assert cases[-2]["m_values"] == (-1, 1)
    assert cases[-2]["r1_norms"] == (-1,)
    assert cases[-2]["ambient_types"] == ("3/2",)
    assert cases[-2]["beta_types"] == ("7/4",)
    assert cases[-2]["hyperplane_multiplicity"] == 2
    assert cases[-6]["m_values"] == (-1, 1)
    assert cases[-6]["r1_norms"] == (-5,)
    assert cases[-6]["ambient_types"] == ("1/2",)
    assert cases[-6]["beta_types"] == ("3/4",)
    assert cases[-6]["hyperplane_multiplicity"] == 2
    # every odd-m vector found a partner
    assert 2 * cases[-2]["paired_hyperplanes"] == cases[-2]["relevant"]
    assert 2 * cases[-6]["paired_hyperplanes"] == cases[-6]["relevant"]


def test_box_totals_match_a_direct_count():
    rep = heegner_restriction_cases(3)
    N = ambient_lattice()
    counts = {-4: 0, -2: 0, -6: 0}
    for r in product(range(-3, 4), repeat=6):
        n = 4 * (r[0] * r[1] + r[2] * r[3]) - 2 * (r[4] ** 2 + r[5] ** 2)
        if n in counts:
            counts[n] += 1
            assert N.norm(r) == n
    for norm, count in counts.items():
        assert rep["cases"][norm]["vectors_in_box"] == count


def test_case_classification_is_box_stable():
    def strip(rep):
        keep = ("m_values", "r1_norms", "ambient_types", "beta_types")
        return {
            k: tuple(v[kk] for kk in keep) for k, v in rep["cases"].items()
        }

    assert strip(heegner_restriction_cases(3)) == strip(
        heegner_restriction_cases(4)
    )


def test_bound_guard():
    with pytest.raises(ValueError, match="at least 3"):
        heegner_restriction_cases(2)


def test_vectorized_classification_is_cross_checked(monkeypatch):
    original = restriction._vectorized_classes

    def corrupted(module, K):
        out = original(module, K)
        return (out + 1) % module.size

    monkeypatch.setattr(restriction, "_vectorized_classes", corrupted)
    with pytest.raises((AssertionError, ValueError)):
        heegner_restriction_cases(3)


# ---------------------------------------------------------------------------
# Plane correspondence
# ---------------------------------------------------------------------------


def test_all_plane_images_are_distinct_null_subspaces():
    AM = restriction_module()
    labels = element_types(AM)
    kappa_m = radical_class(AM)
    images = all_v1_images()
    assert len(images) == 15
    assert len(set(images.values())) == 15
    for v1 in images.values():
        assert len(v1) == 8
        assert kappa_m in v1
        assert all(AM.order_of(x) <= 2 for x in v1)
        assert all(AM.b4[x, y] == 0 for x in v1 for y in v1)
        betas = [x for x in v1 if labels[x] == "1"]
        assert len(betas) == 3
        total = 0
        for b in betas:
            total = AM.add(total, b)
        assert total == kappa_m


def test_v_to_v1_rejects_non_planes():
    with pytest.raises(ValueError, match="isotropic planes"):
        v_to_v1((1, 2, 3))


def test_seven_lines_for_all_planes():
    AM = restriction_module()
    member_lines = set(isotropic_planes(AM))
    for plane in isotropic_planes(ambient_module()):
        lines = seven_lines(v_to_v1(plane))
        assert len(lines) == 7
        assert set(lines) <= member_lines


def test_seven_lines_structure():
    AM = restriction_module()
    labels = element_types(AM)
    kappa_m = radical_class(AM)
    plane = isotropic_planes(ambient_module())[0]
    v1 = v_to_v1(plane)
    lines = seven_lines(v1)
    common = tuple(sorted(x for x in v1 if x and AM.q4[x] == 0))
    assert common in lines
    for beta in (x for x in v1 if labels[x] == "1"):
        holding = [line for line in lines if all(AM.b4[beta, y] == 0 for y in line)]
        assert len(holding) == 3
        assert all(AM.add(beta, kappa_m) in line for line in holding)


def test_seven_lines_input_validation():
    with pytest.raises(ValueError, match="order-8"):
        seven_lines(frozenset({0, 1, 2}))
