import pytest

from pcyclic.constructions import (
    corollary_verdict, criterion_systems, derive_u, exponent_for_code, family_T1, family_T2,
    family_T4, family_T5, residue_criteria, t4_exponent, theorem5_condition, verify_instance,
)
from pcyclic.errors import HypothesisFailed, PCyclicError

from conftest import STATED_MODULI, field


def test_derive_u():
    info = derive_u(5, 4)
    assert info.u == 313 and info.self_inverse
    assert info.u * info.u_inv % 624 == 1


def test_t1_example_exponents():
    # v(p^k+1) = p^h+1 with (h,k) = (1,0) gives v = 3, w = 315 and the
    # swapped reading gives v = 315, w = 3
    vs = {(i.v, tuple(i.distinct_w())) for i in family_T1(5, 4, 1, 0)}
    assert (315, (3,)) in vs
    assert family_T1(5, 4, 0, 1) == []  # 6v = 2 (mod 624) has no solution


def test_t1_example2_exponents():
    ws = set()
    for h, k in ((1, 2), (2, 1)):
        for inst in family_T1(5, 5, h, k):
            ws.update(inst.distinct_w())
    assert {2087, 2163} <= ws


def test_t4_exponents():
    assert t4_exponent(5, 4, 1, 1) == 318
    assert t4_exponent(5, 4, 2, 1) == 322
    assert t4_exponent(5, 4, 3) == 623
    assert t4_exponent(5, 4, 4) == 311
    assert family_T4(5, 4, 3).distinct_w() == [311]
    assert family_T4(5, 4, 4).distinct_w() == [623]


def test_t4_case_failure_is_recorded():
    inst = family_T4(5, 3, 3)
    assert inst.failed == ["m even"] and inst.predicted_d is None


def test_t5():
    inst = family_T5(13, 3)
    assert inst.distinct_w() == [2194]
    assert inst.criterion.witness == {"b": 3, "x": 9}
    assert inst.predicted_d == 3
    with pytest.raises(HypothesisFailed):
        family_T5(7, 3)
    with pytest.raises(HypothesisFailed):
        family_T5(5, 2)


def test_quadratic_condition():
    assert theorem5_condition(5) == (True, None)
    assert theorem5_condition(13) == (False, (3, 9))
    holds, wit = theorem5_condition(29)
    assert not holds and wit == (2, 20)


def test_criterion_systems_witness_is_a_solution():
    res = criterion_systems(7, 1, 1)
    assert res.has_solution
    x, y, b1, b2 = (res.witness[k] for k in ("x", "y", "b1", "b2"))
    assert (1 + b1 + b2) % 7 == 0 and (x + b1 + b2 * y) % 7 == 0
    with pytest.raises(PCyclicError):
        criterion_systems(3, 1, 1)


def test_residue_criteria_rejects_bad_input():
    with pytest.raises(ValueError):
        residue_criteria(7, 4)
    with pytest.raises(ValueError):
        residue_criteria(7, 7)


def test_exponent_for_code_skips_non_invertible():
    tags = [t for _, t in exponent_for_code(5, 3, 63, 122)]
    assert tags == ["u^{-1}v"]


def test_t4_case3_counterexample_at_7_2():
    # hypotheses hold, the argument predicts 4, yet a weight-3 word exists
    inst = family_T4(7, 2, 3)
    assert inst.hypotheses_pass and inst.predicted_d == 4
    ver = verify_instance(inst, field(7, 2))
    assert ver.verified_d == 3 and not ver.agrees
    wit = ver.reports[0].witness
    assert wit.is_codeword(field(7, 2), (0, 1, 23))


def test_t4_example6_moduli_all_optimal():
    ctx = field(5, 4, STATED_MODULI[5, 4])
    for inst in (family_T4(5, 4, 1, 1), family_T4(5, 4, 2, 1), family_T4(5, 4, 3), family_T4(5, 4, 4)):
        ver = verify_instance(inst, ctx)
        assert inst.predicted_d == 4 and ver.agrees and ver.verified_d == 4


def test_verify_rejects_wrong_context():
    with pytest.raises(PCyclicError):
        verify_instance(family_T5(5, 3), field(5, 2))


def test_corollary_none_when_hypotheses_fail():
    inst = family_T2(5, 4, 1, 1)[0]  # m even
    assert not inst.hypotheses_pass
    assert corollary_verdict(inst) is None
