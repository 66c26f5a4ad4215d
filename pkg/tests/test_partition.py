import math

import numpy as np
import pytest

from oddqft.bounds import shift_bound
from oddqft.partition import (
    GroupParams,
    a_coefficient,
    amplitude_vector,
    build_decomposition,
    delta_map,
    interval_set,
    nearest_index,
    vector_family,
)

GP32 = GroupParams(N=5, L=2, M=32)


def direct_a_coefficient(i, k, params):
    """Oracle: the defining double sum, O(LN) per entry."""
    N, L, M = params.N, params.L, params.M
    a = np.arange(L * N)
    terms = np.exp(-2j * np.pi * a * i / N) * np.exp(2j * np.pi * ((a * k) % M) / M)
    return terms.sum() / math.sqrt(L * M * N)


class TestGroupParams:
    def test_valid(self):
        p = GroupParams(N=13, L=16, M=2**11)
        assert (p.m, p.l) == (11, 4)
        assert GroupParams.from_exponents(13, 11, 4) == p

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(N=4, L=2, M=32),  # even N
            dict(N=1, L=2, M=32),  # too small
            dict(N=5, L=3, M=32),  # L not a power of two
            dict(N=5, L=2, M=30),  # M not a power of two
            dict(N=5, L=8, M=32),  # M < L*N
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            GroupParams(**kwargs)


class TestNearestIndex:
    @pytest.mark.parametrize(
        "i,expected",
        [(0, (0, 0.0)), (1, (6, -0.4)), (2, (13, 0.2)), (3, (19, -0.2)), (4, (26, 0.4))],
    )
    def test_examples(self, i, expected):
        ip, delta = nearest_index(i, 32, 5)
        assert ip == expected[0]
        assert delta == pytest.approx(expected[1], abs=1e-12)

    def test_offset_within_half(self):
        for M, N in [(32, 5), (256, 13), (2048, 51)]:
            for i in range(N):
                ip, delta = nearest_index(i, M, N)
                assert 0 <= ip <= M - 1
                assert abs(delta) <= 0.5

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            nearest_index(5, 32, 5)


class TestIntervalSet:
    def test_window_zero_wraps(self):
        np.testing.assert_array_equal(interval_set(0, 32, 5), [0, 1, 2, 30, 31])

    def test_window_one(self):
        np.testing.assert_array_equal(interval_set(1, 32, 5), [4, 5, 6, 7, 8])

    @pytest.mark.parametrize("M,N", [(32, 5), (256, 13), (1024, 37), (4096, 51)])
    def test_equal_cardinality_and_disjoint(self, M, N):
        sets = [interval_set(i, M, N) for i in range(N)]
        sizes = {len(s) for s in sets}
        assert len(sizes) == 1
        combined = np.concatenate(sets)
        assert np.unique(combined).size == combined.size

    def test_rejects_small_M(self):
        with pytest.raises(ValueError):
            interval_set(0, 8, 5)


class TestDeltaMap:
    @pytest.mark.parametrize(
        "k,expected", [(0, (0, 0)), (13, (2, 0)), (31, (0, -1)), (16, (3, -3)), (3, (0, 3))]
    )
    def test_examples(self, k, expected):
        assert delta_map(k, 32, 5) == expected

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            delta_map(32, 32, 5)

    @pytest.mark.parametrize("M,N", [(32, 5), (512, 13), (2048, 13)])
    def test_injective_with_bounded_remainder(self, M, N):
        dec = build_decomposition(M, N)
        pairs = {(int(s), int(t)) for s, t in zip(dec.s_of_k, dec.t_of_k)}
        assert len(pairs) == M
        assert all(abs(t) <= dec.alpha for _, t in pairs)


class TestDecomposition:
    def test_alpha_beta_at_32_5(self):
        dec = build_decomposition(32, 5)
        assert (dec.alpha, dec.beta) == (3, 2)
        assert sum(len(c) for c in dec.c_sets) == 32

    def test_sandwich_at_2048_13(self):
        dec = build_decomposition(2048, 13)
        inner = set(range(-dec.beta, dec.beta + 1))
        outer = set(range(-dec.alpha, dec.alpha + 1))
        for c in dec.c_sets:
            cs = set(c.tolist())
            assert inner <= cs <= outer

    def test_lambda_is_from_closed_interval(self):
        # floor(M/2N - 1/2) on each side, not the remainder set of s=0:
        # at (32, 5) the s=0 remainders also include +-alpha.
        dec = build_decomposition(32, 5)
        np.testing.assert_array_equal(dec.lambda_set, np.arange(-2, 3))
        assert set(dec.c_sets[0].tolist()) == set(range(-3, 4))
        assert set(dec.lambda_set.tolist()) < set(dec.c_sets[0].tolist())

    def test_alpha_equals_beta_plus_one_across_grid(self):
        for N in (5, 13, 37, 51):
            M = 16 * N
            M = 1 << (M - 1).bit_length()
            for _ in range(4):
                dec = build_decomposition(M, N)
                assert dec.alpha == dec.beta + 1
                M *= 2


class TestACoefficient:
    def test_degenerate_entry(self):
        assert a_coefficient(0, 0, GP32) == pytest.approx(math.sqrt(10 / 32))

    def test_single_value_against_direct_sum(self):
        got = a_coefficient(1, 6, GP32)
        assert got == pytest.approx(direct_a_coefficient(1, 6, GP32), abs=1e-10)

    @pytest.mark.parametrize(
        "params",
        [
            GP32,
            GroupParams(N=5, L=8, M=64),
            GroupParams(N=13, L=4, M=256),
            GroupParams(N=51, L=2, M=128),
        ],
    )
    def test_closed_form_equals_direct_sum_everywhere(self, params):
        for i in range(params.N):
            vec = amplitude_vector(i, params)
            direct = np.array(
                [direct_a_coefficient(i, k, params) for k in range(params.M)]
            )
            np.testing.assert_allclose(vec, direct, atol=1e-10)

    def test_magnitude_bound_at_32_5(self):
        # |A^i_k| <= sqrt(M/LN) * 2 / (pi |k - Mi/N|_M) away from (0, 0)
        M, N, L = GP32.M, GP32.N, GP32.L
        for i in range(N):
            vec = np.abs(amplitude_vector(i, GP32))
            for k in range(M):
                if i == 0 and k == 0:
                    continue
                d = abs((k * N - M * i) % (M * N))
                d = min(d, M * N - d) / N
                assert vec[k] <= math.sqrt(M / (L * N)) * 2 / (math.pi * d) + 1e-12

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            a_coefficient(5, 0, GP32)
        with pytest.raises(ValueError):
            a_coefficient(0, 32, GP32)


class TestVectorFamily:
    def test_unit_norm_and_split(self):
        for i in range(GP32.N):
            fam = vector_family(i, GP32)
            assert np.linalg.norm(fam.full) == pytest.approx(1.0, abs=1e-10)
            np.testing.assert_allclose(fam.full, fam.bump + fam.tail, atol=0)
            assert np.all(fam.bump[fam.support] == fam.full[fam.support])
            assert np.all(fam.tail[fam.support] == 0)

    def test_zero_shift_is_identity(self):
        fam = vector_family(0, GP32)
        np.testing.assert_array_equal(fam.shifted, fam.bump)

    def test_shifted_and_bump_share_support(self):
        fam = vector_family(2, GP32)
        sup_b = np.sort(np.nonzero(fam.bump)[0])
        sup_s = np.sort(np.nonzero(fam.shifted)[0])
        np.testing.assert_array_equal(sup_b, fam.support)
        np.testing.assert_array_equal(sup_s, fam.support)

    def test_shift_distance_within_bound(self):
        bound = shift_bound(GP32.N, GP32.M, GP32.L)
        for i in range(GP32.N):
            fam = vector_family(i, GP32)
            assert np.linalg.norm(fam.shifted - fam.bump) <= bound + 1e-12
