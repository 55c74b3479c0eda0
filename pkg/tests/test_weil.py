"""Tests for the Weil representation: generators, image group, character
theory, theta vectors, and the irreducibility certificate."""

from fractions import Fraction

import pytest

from igusa.exact import CYC_I, CYC_ONE, CYC_ZERO, Cyclotomic, CycMatrix
from igusa.fqm import (
    element_types,
    isotropic_planes,
    radical_class,
    reflection,
)
from igusa.weil import (
    CHARACTER_TABLE,
    CLASS_ORDER,
    GroupRingVector,
    ambient_module,
    ambient_orthogonal_group,
    character_degrees,
    class_sizes,
    conjugacy_classes,
    conjugacy_traces,
    conjugate_decomposition,
    decompose_character,
    image_group,
    irreducibility_check,
    isotypic_projector,
    isotypic_subspace,
    permutation_commutes_with_rep,
    theta_span_rank,
    theta_vector,
    theta_vectors,
    verify_character_table,
    w0_vector,
    w_basis,
    weil_generator,
)

MINUS_I = -CYC_I


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def test_generator_t_is_diagonal_with_unit_entries():
    A = ambient_module()
    T = weil_generator("T")
    for x in A.elements():
        expected = Cyclotomic.e_half(A.q(x))
        assert T.entry(x, x) == expected
    # isotropic classes get eigenvalue 1
    assert T.entry(0, 0) == CYC_ONE


def test_generator_relations():
    S = weil_generator("S")
    T = weil_generator("T")
    E = CycMatrix.identity(64)
    assert S @ S == -E
    assert (S ** 4).is_identity()
    assert (T ** 4).is_identity()
    assert ((S @ T) ** 3) == S @ S


def test_unknown_generator_rejected():
    with pytest.raises(ValueError):
        weil_generator("R")


# ---------------------------------------------------------------------------
# image group and conjugacy classes
# ---------------------------------------------------------------------------


def test_image_group_order_48():
    assert len(image_group()) == 48


def test_minus_identity_in_group():
    E = CycMatrix.identity(64)
    keys = {el.matrix.key() for el in image_group()}
    assert (-E).key() in keys


def test_class_sizes():
    assert class_sizes() == [1, 1, 6, 6, 6, 6, 3, 3, 8, 8]
    assert sum(class_sizes()) == 48


def test_conjugacy_traces_frozen():
    traces = conjugacy_traces()
    expected = [
        Cyclotomic(64),
        Cyclotomic(-64),
        CYC_ZERO,
        CYC_ZERO,
        -8 * CYC_I,
        8 * CYC_I,
        CYC_ZERO,
        CYC_ZERO,
        -CYC_ONE,
        CYC_ONE,
    ]
    assert traces == expected


def test_st_word_has_trace_minus_one():
    classes = conjugacy_classes()
    assert classes["ST"][0].trace == -CYC_ONE
    assert classes["(ST)^2"][0].trace == CYC_ONE


# ---------------------------------------------------------------------------
# character table and decomposition
# ---------------------------------------------------------------------------


def test_character_table_orthonormal():
    verify_character_table()  # raises on failure


def test_character_degrees():
    assert character_degrees() == [1, 1, 1, 1, 2, 2, 3, 3, 3, 3]


def test_decomposition_multiplicities():
    mults = decompose_character()
    assert mults == [0, 0, 1, 5, 0, 5, 0, 0, 6, 10]
    total = sum(m * d for m, d in zip(mults, character_degrees()))
    assert total == 64


def test_conjugate_decomposition_differs():
    conj = conjugate_decomposition()
    assert conj == [0, 0, 5, 1, 0, 5, 0, 0, 10, 6]
    assert conj != decompose_character()


# ---------------------------------------------------------------------------
# isotypic projectors and subspaces
# ---------------------------------------------------------------------------


def test_projectors_idempotent_and_orthogonal():
    P3 = isotypic_projector(3)
    P4 = isotypic_projector(4)
    assert P3 @ P3 == P3  # also checked internally
    zero = P3 @ P4
    assert zero == CycMatrix.from_rows(
        [[CYC_ZERO] * 64 for _ in range(64)]
    )


def test_isotypic_dimensions():
    assert len(isotypic_subspace(4, expected_dim=5)) == 5
    assert len(isotypic_subspace(3, expected_dim=1)) == 1
    with pytest.raises(ValueError):
        isotypic_subspace(4, expected_dim=7)


# ---------------------------------------------------------------------------
# theta vectors
# ---------------------------------------------------------------------------


def test_theta_count_and_support():
    A = ambient_module()
    labels = element_types(A)
    thetas = theta_vectors()
    assert len(thetas) == 15
    for th in thetas:
        assert len(th.support) == 8
        assert all(labels[x] == "3/2" for x in th.support)
        assert sorted(
            c.as_rational() for c in th.dense if c
        ) == [-1, -1, -1, -1, 1, 1, 1, 1]


def test_theta_eigenvalue_identities():
    S = weil_generator("S")
    T = weil_generator("T")
    for th in theta_vectors():
        assert th.apply(S) == th.scale(MINUS_I)
        assert th.apply(T) == th.scale(MINUS_I)


def test_theta_reflection_negation():
    A = ambient_module()
    kappa = radical_class(A)
    planes = isotropic_planes(A)
    for plane, th in zip(planes, theta_vectors()):
        I = [0] + list(plane)
        V = sorted({A.add(c, k) for c in I for k in (0, kappa)})
        assert len(V) == 8
        q_one = [v for v in V if A.q4[v] == 4]
        assert len(q_one) == 4  # kappa plus the three translates
        for beta in q_one:
            t = reflection(A, beta)
            assert th.permute(t) == -th


def test_theta_in_w():
    P4 = isotypic_projector(4)
    for th in theta_vectors():
        assert th.apply(P4) == th


def test_theta_rank_five():
    assert theta_span_rank() == 5
    assert len(w_basis()) == 5


def test_theta_base_point_sign_choices():
    # all eight admissible base points of a plane give the same vector up
    # to sign
    A = ambient_module()
    kappa = radical_class(A)
    plane = isotropic_planes(A)[0]
    th = theta_vector(plane)
    I = [0] + list(plane)
    candidates = [
        x
        for x in A.elements()
        if A.q4[x] == 6 and all(A.b4[x, c] == 0 for c in I)
    ]
    assert len(candidates) == 8
    seen = set()
    for alpha0 in candidates:
        m_plus = [A.add(alpha0, c) for c in I]
        dense = [CYC_ZERO] * A.size
        for x in m_plus:
            dense[x] = CYC_ONE
        for x in m_plus:
            dense[A.add(x, kappa)] = -CYC_ONE
        seen.add(GroupRingVector(A, dense))
    assert seen == {th, -th}


def test_theta_rejects_non_isotropic_plane():
    A = ambient_module()
    labels = element_types(A)
    bad = [x for x in A.elements() if labels[x] == "1"][:3]
    with pytest.raises(ValueError):
        theta_vector(tuple(bad))


# ---------------------------------------------------------------------------
# W0
# ---------------------------------------------------------------------------


def test_w0_properties():
    A = ambient_module()
    labels = element_types(A)
    kappa = radical_class(A)
    v0 = w0_vector()
    assert {labels[x] for x in v0.support} == {"1/2"}
    assert len(v0.support) == 12
    S = weil_generator("S")
    T = weil_generator("T")
    assert v0.apply(S) == v0.scale(CYC_I)
    assert v0.apply(T) == v0.scale(CYC_I)
    t = reflection(A, kappa)
    assert v0.permute(t) == -v0
    for x in A.elements():
        assert v0.dense[A.add(x, kappa)] == -v0.dense[x]


# ---------------------------------------------------------------------------
# O(q)-equivariance and irreducibility
# ---------------------------------------------------------------------------


def test_permutation_action_commutes_with_generators():
    G = ambient_orthogonal_group()
    assert all(permutation_commutes_with_rep(g) for g in G.elements)


def test_irreducibility_certificate():
    rep = irreducibility_check()
    assert rep["frobenius_norm"] == CYC_ONE
    assert rep["is_irreducible"] is True
    assert rep["identity_character"] == Cyclotomic(5)
    assert rep["central_involution_is_minus_one"] is True


# ---------------------------------------------------------------------------
# group ring vector mechanics
# ---------------------------------------------------------------------------


def test_group_ring_vector_roundtrip():
    A = ambient_module()
    v = GroupRingVector.from_dict(A, {3: 2, 5: -CYC_I})
    assert v.coefficients == {3: Cyclotomic(2), 5: -CYC_I}
    assert v.support == {3, 5}
    w = v + v
    assert w.coefficients[3] == Cyclotomic(4)
    assert (v - v).support == frozenset()
    assert (-v).coefficients[5] == CYC_I
