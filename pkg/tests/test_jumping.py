from math import comb

import pytest

from verlinde.jumping import (
    PushPullMismatchError,
    bookkeeping_dim,
    class_from_formula,
    class_from_pushpull,
    dim_z_formula,
    dim_z_jacobian,
    reconcile,
)
from verlinde.schubert import GrContext, SchubertClass


def test_dim_formula_values():
    assert dim_z_formula(2, 2) == 6
    assert dim_z_formula(3, 2) == 8
    assert dim_z_formula(2, 3) == 9


def test_dim_formula_validation():
    with pytest.raises(ValueError):
        dim_z_formula(4, 2)
    with pytest.raises(ValueError):
        dim_z_formula(2, 1)


def test_jacobian_dimension_22():
    assert dim_z_jacobian(2, 2, trials=3, seed=0) == 4


@pytest.mark.parametrize("n,d", [(2, 2), (2, 3), (3, 2)])
def test_jacobian_seed_stability_and_bookkeeping(n, d):
    values = {dim_z_jacobian(n, d, trials=2, seed=s) for s in (0, 1, 2)}
    assert len(values) == 1
    dim = values.pop()
    assert dim == bookkeeping_dim(n, d)
    assert dim < GrContext(comb(n + d, n)).dim  # Z is a proper subvariety


def test_class_from_formula_22_at_oracle_dim():
    ev = class_from_formula(2, 2, 4)
    assert ev.cls == SchubertClass(GrContext(6), {(3, 1): 6, (2, 2): 3})
    assert ev.out_of_range == []


def test_class_from_formula_22_at_stated_dim_flags_indices():
    ev = class_from_formula(2, 2, 6)
    # index shift (codim - dim)/2 = -2 pushes b = 1 to b' = -1
    assert ev.out_of_range == [(3, -1, 15)]
    assert ev.cls == SchubertClass(GrContext(6), {(2, 0): 15, (1, 1): 6})


def test_class_from_formula_23():
    # hand-evaluated binomials at the measured dimension 7 (shift 1)
    ev = class_from_formula(2, 3, 7)
    assert ev.cls == SchubertClass(GrContext(10), {(7, 2): 21, (6, 3): 24, (5, 4): 15})
    assert ev.out_of_range == []


@pytest.mark.parametrize("n,d,dim", [(2, 2, 4), (2, 3, 7), (3, 2, 7)])
def test_pushpull_agrees_with_formula(n, d, dim):
    assert class_from_pushpull(n, d, dim).cls == class_from_formula(n, d, dim).cls


def test_pushpull_rejects_wrong_dimension():
    with pytest.raises(PushPullMismatchError):
        class_from_pushpull(2, 2, 6)


def test_middle_term_case_32():
    ev = class_from_formula(3, 2, 8)
    assert ev.middle == {"index": [4, 4], "stated": 80}
    assert ev.cls.coefficient(4, 4) == 80


def test_reconcile_22():
    rep = reconcile(2, 2, trials=3, seed=0)
    assert rep.dim_z_stated == 6 and rep.dim_z_oracle == 4
    assert rep.flags == ["DIM_MISMATCH", "OUT_OF_RANGE_INDEX"]
    assert all(row["equal"] for row in rep.coefficient_table)
    assert rep.class_pushpull.cls == SchubertClass(GrContext(6), {(3, 1): 6, (2, 2): 3})


def test_reconcile_32_middle_flags():
    rep = reconcile(3, 2, trials=2, seed=0)
    assert "DIM_MISMATCH" in rep.flags
    assert "MIDDLE_TERM_DISAGREEMENT" in rep.flags
    assert "NEGATIVE_COEFFICIENT" in rep.flags
    (rec,) = rep.middle_terms
    assert rec["stated"] == 80 and rec["from_pairing"] == -80 and not rec["agree"]


def test_reconcile_flags_deterministic_across_seeds():
    reports = [reconcile(2, 3, trials=2, seed=s) for s in (0, 5, 9)]
    assert len({tuple(r.flags) for r in reports}) == 1
    assert len({r.dim_z_oracle for r in reports}) == 1


def test_reconcile_desk_scale_bound():
    with pytest.raises(ValueError, match="desk-scale"):
        reconcile(2, 20)


def test_report_json_schema():
    rep = reconcile(2, 2, trials=2, seed=1)
    obj = rep.to_json()
    assert set(obj) >= {"n", "d", "N", "dim_z", "class_theorem", "class_pushpull",
                        "coefficient_table", "flags"}
    assert obj["dim_z"] == {"paper": 6, "oracle": 4}
    assert {t["a"] for t in obj["class_pushpull"]["terms"]} == {3, 2}
    assert obj["class_theorem"]["paper"]["out_of_range"] == [{"a": 3, "b": -1, "c": 15}]


def test_codimension_consistency():
    for n, d in [(2, 2), (2, 3), (3, 2)]:
        rep = reconcile(n, d, trials=2, seed=0)
        codim = 2 * (rep.N - 2) - rep.dim_z_oracle
        for a, b in rep.class_formula_at_oracle.cls.coeffs:
            assert a + b == codim
        for a, b in rep.class_pushpull.cls.coeffs:
            assert a + b == codim
