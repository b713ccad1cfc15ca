import pytest

from critgraph.seq import (
    SeqKind,
    derived_seq,
    observed_valuation,
    predicted_valuation,
    u_prefix,
    u_seq,
    v_partial_sum,
    v_prefix,
    v_seq,
)


def test_u_initial_and_known_values():
    assert u_seq(2, 0) == 0
    assert u_seq(2, 1) == 1
    assert u_seq(2, 4) == 56
    assert u_seq(4, 6) == 6930
    assert u_prefix(2, 7) == [0, 1, 4, 15, 56, 209, 780]
    assert u_prefix(4, 7) == [0, 1, 6, 35, 204, 1189, 6930]


def test_v_initial_and_known_values():
    assert v_seq(2, 0) == 2
    assert v_seq(2, 2) == 14
    assert v_seq(4, 2) == 34  # two recurrence steps: 6*6 - 2
    assert v_prefix(2, 6) == [2, 4, 14, 52, 194, 724]


def test_rejects_degenerate_parameter():
    with pytest.raises(ValueError):
        u_seq(0, 3)
    with pytest.raises(ValueError):
        v_seq(0, 3)
    with pytest.raises(ValueError):
        u_seq(2, -1)


def test_derived_sequences():
    assert derived_seq(SeqKind.E, 3) == 15
    assert derived_seq(SeqKind.H, 2) == 19  # e_2 + e_3 = 4 + 15
    assert derived_seq(SeqKind.G, 0) == 1  # f_0 + f_1
    assert derived_seq(SeqKind.F, 5) == 1189


def test_kind_fixes_parameter():
    assert SeqKind.E.m == 2 and SeqKind.H.m == 2
    assert SeqKind.F.m == 4 and SeqKind.G.m == 4


def test_partial_sum_base_cases():
    for m in (1, 2, 3, 4):
        for p in (0, 1, 2, 5):
            assert v_partial_sum(m, p, 1) == 1
    assert v_partial_sum(2, 1, 3) == 15  # v_2(2) + v_0(2) - 1
    assert v_partial_sum(2, 1, 2) == 4  # v_1(2)
    with pytest.raises(ValueError):
        v_partial_sum(2, 1, 0)


def test_factorization_identity():
    # u_{pq}(m) = v_partial_sum(m, p, q) * u_p(m)
    for m in range(1, 7):
        us = u_prefix(m, 65)
        for p in range(1, 65):
            for q in range(1, 64 // p + 1):
                assert us[p * q] == v_partial_sum(m, p, q) * us[p]


def test_composition_identity():
    # u_{pq} = v_{p(q-1)} u_p + u_{p(q-2)} for q >= 2
    for m in range(1, 7):
        us = u_prefix(m, 65)
        vs = v_prefix(m, 65)
        for p in range(0, 33):
            for q in range(2, (64 // p if p else 32) + 1):
                assert us[p * q] == vs[p * (q - 1)] * us[p] + us[p * (q - 2)]


def test_congruences():
    for m in (2, 3, 4, 5):
        a, b = 0, 1
        c, d = 2, m + 2
        for p in range(200):
            assert a % m == p % m
            assert c % m == 2 % m
            a, b = b, (m + 2) * b - a
            c, d = d, (m + 2) * d - c


def test_doubling_identity():
    for m in (2, 4):
        us = u_prefix(m, 101)
        vs = v_prefix(m, 201)
        for p in range(101):
            assert vs[2 * p] == m * (m + 4) * us[p] ** 2 + 2


def test_strict_growth():
    for m in range(1, 7):
        us = u_prefix(m, 52)
        for p in range(1, 51):
            assert us[p + 1] > us[p]


def test_observed_valuation():
    assert observed_valuation(8, 2) == 3
    assert observed_valuation(1, 3) == 0
    assert observed_valuation(6930, 3) == 2
    assert observed_valuation(-24, 2) == 3
    with pytest.raises(ValueError):
        observed_valuation(0, 2)
    with pytest.raises(ValueError):
        observed_valuation(8, 1)


def test_predicted_valuation_cases():
    for n in (3, 5, 7, 9, 999):
        assert predicted_valuation(SeqKind.E, 2, n).predicted_exponent == 0
    # e_4 = 56 = 2^3 * 7
    assert predicted_valuation(SeqKind.E, 2, 4).predicted_exponent == 3
    # f_6 = 6930 = 2 * 3^2 * 5 * 7 * 11
    assert predicted_valuation(SeqKind.F, 3, 6).predicted_exponent == 2
    assert predicted_valuation(SeqKind.F, 2, 6).predicted_exponent == 1
    assert predicted_valuation(SeqKind.E, 3, 9).predicted_exponent == 2


def test_predicted_valuation_rejections():
    with pytest.raises(ValueError):
        predicted_valuation(SeqKind.H, 2, 4)
    with pytest.raises(ValueError):
        predicted_valuation(SeqKind.E, 5, 4)
    with pytest.raises(ValueError):
        predicted_valuation(SeqKind.E, 2, 0)


def test_predicted_matches_observed_small_sweep():
    for n in range(2, 200):
        for kind in (SeqKind.E, SeqKind.F):
            x = derived_seq(kind, n)
            for prime in (2, 3):
                assert (
                    observed_valuation(x, prime)
                    == predicted_valuation(kind, prime, n).predicted_exponent
                ), (kind, prime, n)


def test_predictions_hold_at_index_one():
    # e_1 = f_1 = 1: every valuation is 0, matching the formulas at n=1.
    for kind in (SeqKind.E, SeqKind.F):
        for prime in (2, 3):
            assert predicted_valuation(kind, prime, 1).predicted_exponent == 0
