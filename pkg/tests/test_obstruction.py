"""Six-type collapse, dimension formula, Eisenstein expansions, weights."""

from fractions import Fraction

import pytest

from igusa.exact import CYC_I, CYC_ONE, CYC_ZERO, Cyclotomic, CycMatrix, QSeries
from igusa.fqm import element_types, radical_class
from igusa import obstruction
from igusa.obstruction import (
    E_LABELS,
    TYPE_ORDER,
    DivisorSpec,
    borcherds_weight,
    borcherds_weights_table,
    collapsed_rep,
    cusp_dimension,
    dim_modular_forms,
    dimension_formula_data,
    dual_generator,
    eisenstein_G3,
    eisenstein_subspace,
    f_tuple,
    heegner_divisor,
    numeric_double_sum,
    obstruction_vanishing,
    per_element_coefficient,
    transformation_bookkeeping,
    type_orbit_check,
)
from igusa.weil import ambient_module, weil_generator

MINUS_I_OVER_8 = Cyclotomic(Fraction(-1, 8)) * CYC_I

S_INTEGERS = (
    (1, 1, 1, 1, 1, 1),
    (15, -1, -1, 15, 3, -5),
    (15, -1, -1, 15, -3, 5),
    (1, 1, 1, 1, -1, -1),
    (20, 4, -4, -20, 0, 0),
    (12, -4, 4, -12, 0, 0),
)


def test_dual_generator_is_entrywise_conjugate():
    for name in ("S", "T"):
        primal = weil_generator(name)
        dual = dual_generator(name)
        assert dual == primal.conjugate()
    # the dual S has constant entries -i/8 times a sign pattern on the
    # 2-torsion block; spot the zero-row entry
    dual_s = dual_generator("S")
    assert dual_s.entry(0, 0) == MINUS_I_OVER_8


def test_collapsed_s_matches_reference():
    rep = collapsed_rep()
    for a in range(6):
        for b in range(6):
            assert rep.S_matrix.entry(a, b) == MINUS_I_OVER_8 * S_INTEGERS[a][b]


def test_collapsed_t_diagonal():
    rep = collapsed_rep()
    expected = (CYC_ONE, CYC_ONE, -CYC_ONE, -CYC_ONE, CYC_I, -CYC_I)
    for a in range(6):
        for b in range(6):
            want = expected[a] if a == b else CYC_ZERO
            assert rep.T_matrix.entry(a, b) == want


def test_collapsed_s_squares_to_minus_identity():
    rep = collapsed_rep()
    square = rep.S_matrix @ rep.S_matrix
    assert square == CycMatrix.identity(6).scale(-1)


def test_collapsed_type_sizes():
    rep = collapsed_rep()
    assert rep.type_order == TYPE_ORDER
    assert rep.type_sizes == (1, 15, 15, 1, 20, 12)


def test_collapse_mismatch_error_names_entry(monkeypatch):
    bad = tuple(
        tuple(7 if (a, b) == (1, 2) else v for b, v in enumerate(row))
        for a, row in enumerate(S_INTEGERS)
    )
    collapsed_rep.cache_clear()
    monkeypatch.setattr(obstruction, "_COLLAPSED_S_INTEGERS", bad)
    try:
        with pytest.raises(ValueError, match=r"\(0, 1\)"):
            collapsed_rep()
    finally:
        monkeypatch.undo()
        collapsed_rep.cache_clear()
    rep = collapsed_rep()  # rebuild cleanly for later tests
    assert rep.S_matrix.entry(0, 0) == MINUS_I_OVER_8


def test_dimension_formula_values():
    data = dimension_formula_data()
    assert data["d"] == 6
    assert (data["alpha_S"], data["alpha_ST"], data["alpha_T"]) == (
        Fraction(3, 2),
        Fraction(2),
        Fraction(2),
    )
    assert data["dimension"] == 2
    assert dim_modular_forms(3) == 2
    with pytest.raises(ValueError):
        dim_modular_forms(4)


def test_eisenstein_subspace_and_cusp():
    basis = eisenstein_subspace()
    assert len(basis) == 2
    supports = sorted(
        tuple(TYPE_ORDER[i] for i, c in enumerate(vec) if c) for vec in basis
    )
    assert supports == [("0",), ("00",)]
    assert cusp_dimension() == 0
    assert dim_modular_forms(3) == len(basis) + cusp_dimension()


def test_e2_expansion():
    series = eisenstein_G3(1, 0, 8).series
    assert series.coefficient(Fraction(1, 4)) == CYC_ONE
    assert series.coefficient(Fraction(1, 2)) == Cyclotomic(4)
    assert series.coefficient(Fraction(3, 4)) == Cyclotomic(8)
    assert series.coefficient(Fraction(1)) == Cyclotomic(16)
    assert series.coefficient(Fraction(0)) == CYC_ZERO


def test_e6_expansion():
    series = eisenstein_G3(2, 1, 8).series
    assert series.coefficient(Fraction(1, 2)) == Cyclotomic(2) * CYC_I
    assert series.coefficient(Fraction(1)) == CYC_ZERO
    assert series.coefficient(Fraction(1, 4)) == CYC_ZERO


def test_e1_expansion():
    series = eisenstein_G3(0, 1, 8).series
    assert series.coefficient(Fraction(0)) == Cyclotomic(Fraction(-1, 2)) * CYC_I
    assert series.coefficient(Fraction(1)) == Cyclotomic(2) * CYC_I
    assert series.coefficient(Fraction(1, 4)) == CYC_ZERO


def test_divisor_sum_coefficient_by_hand():
    # q^2 coefficient of the (1, 2) series: factorizations 8 = r*m with
    # m = 1 give r = 8 and i^(16) = 1, hence 64; no m = 3 mod 4 divides 8.
    series = eisenstein_G3(1, 2, 8).series
    assert series.coefficient(Fraction(2)) == Cyclotomic(64)


def test_negated_label_gives_negated_series():
    for a1, a2 in E_LABELS:
        plus = eisenstein_G3(a1, a2, 8).series
        minus = eisenstein_G3((-a1) % 4, (-a2) % 4, 8).series
        assert minus == -plus


def test_eisenstein_guards():
    with pytest.raises(ValueError):
        eisenstein_G3(0, 0, 8)
    with pytest.raises(ValueError):
        eisenstein_G3(1, 0, 0)
    with pytest.raises(ValueError):
        eisenstein_G3(1, 0, 65)


def test_oracle_disagreement_raises():
    # an absurd tolerance cannot be met by the truncated double sum
    with pytest.raises(ValueError, match="double-sum oracle"):
        eisenstein_G3(1, 2, 8, box=300, tolerance=1e-13)


def test_t_rule_on_expansions():
    # shifting tau by one multiplies the coefficient of q^(j/4) by i^j; the
    # result must be the (sign-reduced) series of the label acted on by T
    for src_pos, (a1, a2) in enumerate(E_LABELS):
        src = eisenstein_G3(a1, a2, 8).series
        twisted = QSeries(
            {e: c * (CYC_I ** int(4 * e)) for e, c in src.terms.items()},
            src.truncation,
        )
        dst_pos, sign = obstruction._label_action((a1, a2), "T")
        dst = eisenstein_G3(*E_LABELS[dst_pos], 8).series
        assert twisted == (dst if sign > 0 else -dst)


def test_s_rule_at_numeric_fixed_point():
    # tau = i is fixed by the inversion, so the series of the transformed
    # label equals i times the original double sum there
    for a1, a2 in E_LABELS:
        base = numeric_double_sum(a1, a2, box=800)
        image = numeric_double_sum(a2 % 4, (-a1) % 4, box=800)
        rel = abs(image - 1j * base) / max(abs(base), abs(image))
        assert rel < 1e-5


def test_f_tuple_leading_terms():
    f = f_tuple()
    assert f["00"].coefficient(Fraction(0)) == Cyclotomic(Fraction(-1, 2))
    assert f["00"].coefficient(Fraction(1)) == Cyclotomic(10)
    assert f["0"].coefficient(Fraction(0)) == CYC_ZERO
    assert f["0"].coefficient(Fraction(1)) == Cyclotomic(120)
    assert f["1"].coefficient(Fraction(1, 2)) == Cyclotomic(30)
    assert f["10"].coefficient(Fraction(1, 2)) == Cyclotomic(4)
    assert f["3/2"].coefficient(Fraction(1, 4)) == Cyclotomic(10)
    assert f["1/2"].coefficient(Fraction(3, 4)) == Cyclotomic(48)


def test_f_tuple_exponent_supports():
    f = f_tuple()
    residues = {
        "00": {Fraction(0)},
        "0": {Fraction(0)},
        "1": {Fraction(1, 2)},
        "10": {Fraction(1, 2)},
        "3/2": {Fraction(1, 4)},
        "1/2": {Fraction(3, 4)},
    }
    for t, series in f.items():
        for e in series.terms:
            assert e - int(e) in residues[t] or (e.denominator == 1 and Fraction(0) in residues[t])


def test_f_tuple_second_parameter_normalization():
    f = f_tuple(Fraction(0), Fraction(1))
    assert f["0"].coefficient(Fraction(0)) == Cyclotomic(Fraction(1, 2))
    assert f["00"].coefficient(Fraction(0)) == CYC_ZERO


def test_transformation_bookkeeping():
    report = transformation_bookkeeping()
    assert report["T_consistent"] and report["S_consistent"]
    assert report["rules_match_frozen"]
    assert len(report["parameter_points"]) == 2


def test_bookkeeping_detects_broken_rules(monkeypatch):
    bad = dict(obstruction._FROZEN_RULES)
    bad["T"] = ((0, 1), (3, 1), (2, 1), (4, 1), (1, 1), (5, -1))
    monkeypatch.setattr(obstruction, "_FROZEN_RULES", bad)
    with pytest.raises(ValueError, match="T"):
        transformation_bookkeeping()


def test_type_orbit_partition():
    assert type_orbit_check() is True


def test_per_element_shares_constant_on_classes():
    A = ambient_module()
    labels = element_types(A)
    exponents = {
        "00": Fraction(1),
        "0": Fraction(1),
        "1": Fraction(1, 2),
        "10": Fraction(1, 2),
        "3/2": Fraction(1, 4),
        "1/2": Fraction(3, 4),
    }
    expected = {
        "00": Fraction(10),
        "0": Fraction(8),
        "1": Fraction(2),
        "10": Fraction(4),
        "3/2": Fraction(1, 2),
        "1/2": Fraction(4),
    }
    for t in TYPE_ORDER:
        members = [x for x in range(A.size) if labels[x] == t][:2]
        shares = {per_element_coefficient(x, exponents[t]) for x in members}
        assert shares == {expected[t]}


def test_weights_table():
    table = borcherds_weights_table()
    assert table == {
        "kappa": Fraction(4),
        "3/2": Fraction(10),
        "1": Fraction(30),
        "1/2": Fraction(48),
    }


def test_weight_by_single_elements_matches_class_family():
    A = ambient_module()
    labels = element_types(A)
    members = [x for x in range(A.size) if labels[x] == "3/2"]
    assert len(members) == 20
    singles = DivisorSpec.from_entries(
        [(x, Fraction(-1, 2), 1) for x in members]
    )
    assert borcherds_weight(singles) == Fraction(10)
    kappa = radical_class(A)
    one = DivisorSpec.from_entries(((kappa, Fraction(-1), 1),))
    assert borcherds_weight(one) == Fraction(4)


def test_weight_linearity_and_empty():
    d1 = heegner_divisor("3/2")
    d2 = heegner_divisor("1/2")
    combined = DivisorSpec.from_entries(
        (("3/2", Fraction(-1, 2), 2), ("1/2", Fraction(-3, 2), -1))
    )
    assert borcherds_weight(combined) == 2 * borcherds_weight(d1) - borcherds_weight(d2)
    assert borcherds_weight(DivisorSpec.empty()) == 0


def test_divisor_validation():
    with pytest.raises(ValueError, match="isotropic"):
        borcherds_weight(DivisorSpec.from_entries((("0", Fraction(-1), 1),)))
    with pytest.raises(ValueError, match="incompatible"):
        borcherds_weight(DivisorSpec.from_entries((("3/2", Fraction(-1), 1),)))
    with pytest.raises(ValueError, match="unknown"):
        borcherds_weight(DivisorSpec.from_entries((("5/2", Fraction(-1), 1),)))
    with pytest.raises(ValueError, match="out of range"):
        borcherds_weight(DivisorSpec.from_entries(((64, Fraction(-1), 1),)))
    with pytest.raises(ValueError):
        heegner_divisor("00")


def test_obstruction_vanishing():
    report = obstruction_vanishing()
    assert report == {"cusp_dimension": 0, "vacuously_satisfied": True}
