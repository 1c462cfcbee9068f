import pytest

from pcyclic.code import (
    build_code, brute_force_min_distance, brute_force_witness, classify, hamming_ball,
    parity_check_matrix, sphere_packing_max_d, weight2_exists, weight3_search,
)
from pcyclic.errors import DegenerateDefiningSet, OracleTooLarge, PCyclicError

from conftest import STATED_MODULI, field


def test_sphere_packing():
    assert hamming_ball(5, 624, 1) == 1 + 624 * 4
    assert sphere_packing_max_d(5, 624, 9) == 4
    assert sphere_packing_max_d(7, 48, 5) == 4
    assert sphere_packing_max_d(2, 7, 3) == 4  # the bound alone does not exclude [7,4,4]
    assert sphere_packing_max_d(2, 7, 4) == 4


def test_weight2():
    ctx = field(5, 2)
    assert weight2_exists(ctx, (0, 1, 11)) is None
    wit = weight2_exists(ctx, (0, 6, 12))
    assert wit is not None and wit.is_codeword(ctx, (0, 6, 12))


def test_classify_example5_modulus():
    rep = classify(field(5, 3, STATED_MODULI[5, 3]), 122)
    assert rep.params == (124, 117, 4) and rep.optimal
    assert rep.code.generator == (2, 2, 1, 4, 2, 0, 3, 1)


def test_classify_weight3_witness():
    ctx = field(7, 2)
    rep = classify(ctx, 4)
    assert rep.params == (48, 43, 3) and not rep.optimal
    assert rep.witness.support == (32, 0, 16) and rep.witness.coefficients == (1, 2, 4)
    assert rep.witness.is_codeword(ctx, (0, 1, 4))


@pytest.mark.parametrize("w", [0, 1, 5, 6, 12])
def test_degenerate(w):
    with pytest.raises(DegenerateDefiningSet):
        classify(field(5, 2), w)


def test_witness_rejects_bad_words():
    ctx = field(7, 2)
    wit = classify(ctx, 4).witness
    assert not wit.is_codeword(ctx, (0, 1, 5))


@pytest.mark.parametrize("p,m,w,d", [(5, 2, 11, 4), (5, 2, 15, 4), (7, 2, 4, 3)])
def test_oracle_frozen(p, m, w, d):
    code = build_code(field(p, m), (0, 1, w))
    assert brute_force_min_distance(code) == d
    wit = brute_force_witness(code)
    assert wit.is_codeword(code.ctx, code.exponents)


def test_oracle_limits():
    code = build_code(field(5, 3), (0, 1, 2))
    with pytest.raises(OracleTooLarge):
        brute_force_witness(code)


def test_parity_check_annihilates_generator_shifts():
    code = build_code(field(5, 2), (0, 1, 11))
    H = parity_check_matrix(code)
    g = list(code.generator) + [0] * (code.n - len(code.generator))
    assert H.shape == (3 * 2, 24)
    assert not ((H @ g) % 5).any()


def test_merged_cosets_and_dimension():
    code = build_code(field(5, 2), (0, 1, 5))
    assert code.merged == (5,)
    assert code.k == 24 - 3
    with pytest.raises(PCyclicError):
        build_code(field(5, 2), (0, 30))


def test_weight3_search_range():
    with pytest.raises(PCyclicError):
        weight3_search(field(5, 2), 1)


def test_printed_generators_for_c013_and_c01122_are_those_of_c0wu():
    # the published polynomials for C_5(0,1,3) and C_5(0,1,122) are the
    # generators of C_5(0,3,313) and C_5(0,122,63)
    g1 = build_code(field(5, 4, STATED_MODULI[5, 4]), (0, 3, 313)).generator
    assert g1 == (4, 2, 3, 2, 0, 2, 0, 0, 1, 1)
    g5 = build_code(field(5, 3, STATED_MODULI[5, 3]), (0, 122, 63)).generator
    assert g5 == (3, 2, 4, 1, 1, 0, 3, 1)
    assert build_code(field(5, 4, STATED_MODULI[5, 4]), (0, 1, 3)).generator == (4, 3, 3, 2, 3, 0, 3, 0, 1, 1)


@pytest.mark.parametrize("w,g", [
    (50, (1, 1, 3, 3, 3, 4, 5, 1)),
    (278, (1, 3, 1, 6, 4, 0, 5, 1)),
    (164, (1, 0, 4, 5, 6, 6, 5, 1)),
])
def test_gf343_generators_with_corrected_modulus(w, g):
    # x^3 + 6x^2 + 4 reproduces all three published degree-7 generators
    ctx = field(7, 3, (4, 0, 6, 1))
    rep = classify(ctx, w)
    assert rep.code.generator == g and rep.params == (342, 335, 4) and rep.optimal
