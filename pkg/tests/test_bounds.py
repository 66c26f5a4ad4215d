import math

import pytest

from oddqft.bounds import (
    choose_parameters,
    closed_form_exponents,
    denominator_sum_bound,
    main_bound,
    minimal_exponents,
    qubit_count,
    qubit_estimate,
    shift_bound,
    tail_bound,
    tv_bound,
    weighted_sum_bound,
)
from paper_tables import TABLE1, TABLE1_EPSILONS, TABLE1_NS

# Frozen by direct, independent evaluation of the closed forms.
TAIL_13_25_15 = 0.0423102442545991
SHIFT_13_25_15 = 0.02302674974125472
MAIN_13_24_15 = 0.08836376729418835
TAIL_501_27_13 = 0.2050997473840457
SHIFT_501_27_13 = 0.05546346932869526
MAIN_501_27_13 = 0.26056321671274096
DSUM_COR_13_256 = 0.5210053382343747
DSUM_GEN_13_256 = 0.4966702073204845
WSUM_13_2048 = 0.9355039912177305
WSUM_13_256 = 8.422691597710594


class TestTailShiftMain:
    def test_tail_values(self):
        assert tail_bound(13, 2**25, 2**15) == pytest.approx(TAIL_13_25_15, rel=1e-12)
        assert tail_bound(501, 2**27, 2**13) == pytest.approx(TAIL_501_27_13, rel=1e-12)

    def test_shift_values(self):
        assert shift_bound(13, 2**25, 2**15) == pytest.approx(SHIFT_13_25_15, rel=1e-12)
        assert shift_bound(501, 2**27, 2**13) == pytest.approx(SHIFT_501_27_13, rel=1e-12)

    def test_main_meets_target_at_25_but_not_24(self):
        ok = main_bound(13, 2**25, 2**15, epsilon=0.10)
        assert ok.main == pytest.approx(TAIL_13_25_15 + SHIFT_13_25_15, rel=1e-12)
        assert ok.meets_target
        short = main_bound(13, 2**24, 2**15, epsilon=0.10)
        assert short.main == pytest.approx(MAIN_13_24_15, rel=1e-12)
        assert not short.meets_target

    def test_main_501(self):
        rep = main_bound(501, 2**27, 2**13, epsilon=0.40)
        assert rep.main == pytest.approx(MAIN_501_27_13, rel=1e-12)
        assert rep.meets_target

    def test_tail_strictly_decreases_in_L(self):
        vals = [tail_bound(13, 2**20, 2**l) for l in range(4, 12)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_shift_halves_with_M(self):
        assert shift_bound(13, 2**20, 2**10) == pytest.approx(
            2 * shift_bound(13, 2**21, 2**10), rel=1e-14
        )

    def test_hypothesis_flags(self):
        rep = main_bound(11, 2**10, 8)
        h = rep.hypotheses
        assert not h.n_ge_13_odd and not h.l_ge_16
        assert h.m_ge_ln and h.m_ge_16n
        assert not h.all_ok
        assert main_bound(13, 2**11, 16).hypotheses.all_ok


class TestExponents:
    def test_closed_form_examples(self):
        assert closed_form_exponents(13, 0.10) == (26, 15)
        assert closed_form_exponents(25, 0.30) == (22, 12)
        assert closed_form_exponents(501, 0.001)[0] == 53

    def test_minimal_examples(self):
        assert minimal_exponents(13, 0.10) == (25, 15)
        assert minimal_exponents(501, 0.40) == (27, 13)
        assert minimal_exponents(13, 0.001) == (45, 28)

    def test_all_42_cells(self):
        for eps in TABLE1_EPSILONS:
            for N in TABLE1_NS:
                g_ref, m_ref, l_ref = TABLE1[eps][N]
                g, _ = closed_form_exponents(N, eps)
                assert g == g_ref, (N, eps)
                assert minimal_exponents(N, eps) == (m_ref, l_ref), (N, eps)

    def test_closed_form_pair_is_feasible(self):
        # the closed-form sizes always satisfy the bound and M >= L*N
        for eps in TABLE1_EPSILONS:
            for N in TABLE1_NS:
                g, l_cf = closed_form_exponents(N, eps)
                assert 2**g >= 2**l_cf * N and l_cf >= 4
                assert main_bound(N, 2**g, 2**l_cf).main <= eps / math.sqrt(2)

    def test_unique_l_at_minimal_m_for_13_01(self):
        m = 25
        valid = [
            l
            for l in range(4, m)
            if 2**l * 13 <= 2**m
            and main_bound(13, 2**m, 2**l).main <= 0.1 / math.sqrt(2)
        ]
        assert valid == [15]

    @pytest.mark.parametrize("N,eps", [(12, 0.1), (11, 0.1), (13, 0.0), (13, 1.5)])
    def test_rejects_bad_arguments(self, N, eps):
        with pytest.raises(ValueError):
            closed_form_exponents(N, eps)
        with pytest.raises(ValueError):
            minimal_exponents(N, eps)


class TestQubits:
    def test_count(self):
        assert qubit_count(2**25) == 27
        assert qubit_count(1024) == 12

    def test_estimate(self):
        assert qubit_estimate(13, 0.1) == 29

    def test_count_below_estimate_on_all_cells(self):
        for eps in TABLE1_EPSILONS:
            for N in TABLE1_NS:
                g, _ = closed_form_exponents(N, eps)
                assert qubit_count(2**g) <= qubit_estimate(N, eps)

    def test_rejects_non_pow2(self):
        with pytest.raises(ValueError):
            qubit_count(1000)


class TestTvBound:
    @pytest.mark.parametrize("eps,expected", [(0.0, 0.0), (0.1, 0.21), (1.0, 3.0)])
    def test_values(self, eps, expected):
        assert tv_bound(eps) == pytest.approx(expected)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            tv_bound(-0.1)


class TestSumBounds:
    def test_corollary_value(self):
        assert denominator_sum_bound(13, 256) == pytest.approx(DSUM_COR_13_256, rel=1e-12)

    def test_general_value(self):
        assert denominator_sum_bound(13, 256, general=True) == pytest.approx(
            DSUM_GEN_13_256, rel=1e-12
        )

    def test_corollary_dominates_general_on_its_domain(self):
        for N in (13, 25, 51):
            for mexp in range((16 * N - 1).bit_length(), 18):
                M = 2**mexp
                assert denominator_sum_bound(N, M) >= denominator_sum_bound(
                    N, M, general=True
                )

    def test_domain_rejections(self):
        with pytest.raises(ValueError):
            denominator_sum_bound(11, 2**10)  # corollary needs N >= 13
        with pytest.raises(ValueError):
            denominator_sum_bound(13, 128)  # corollary needs M >= 16N
        with pytest.raises(ValueError):
            denominator_sum_bound(13, 26, general=True)  # general needs M > 2N

    def test_weighted_sum_values(self):
        assert weighted_sum_bound(13, 2**11) == pytest.approx(WSUM_13_2048, rel=1e-12)
        assert weighted_sum_bound(13, 2**8) == pytest.approx(WSUM_13_256, rel=1e-12)

    def test_weighted_sum_decreases_in_M(self):
        vals = [weighted_sum_bound(13, 2**m) for m in range(8, 16)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_weighted_sum_domain(self):
        with pytest.raises(ValueError):
            weighted_sum_bound(11, 2**10)
        with pytest.raises(ValueError):
            weighted_sum_bound(13, 128)


def test_choose_parameters_bundle():
    choice = choose_parameters(13, 0.10)
    assert (choice.g, choice.l_closed_form) == (26, 15)
    assert (choice.m, choice.l) == (25, 15)
    assert choice.qubits == 27
    assert choice.qubit_upper_estimate == 29
    assert choice.c1_range == (65, 130)
    assert choice.c2_range == (735, 1470)
