from fractions import Fraction

import pytest

from dasq import (
    IntSquare,
    NotNilpotentError,
    RationalSquare,
    SquareError,
    catalog,
    compound,
    constancy_onset,
    char_poly,
    is_constant,
    mat_mul,
    mat_pow,
    nilpotency_index,
    nilpotent_part,
    ones,
    predicted_constancy_power,
    zero_jordan_profile,
    zero_multiplicity,
)


class TestNilpotentPart:
    def test_sud4a(self):
        n = nilpotent_part(catalog("sud4a"))
        shift = Fraction(5, 2)
        expected = [
            [Fraction(v) - shift for v in row] for row in catalog("sud4a").to_rows()
        ]
        assert n.to_rows() == expected
        for i in range(4):
            assert sum(n.to_rows()[i]) == 0
        cols = n.to_rows()
        assert all(sum(cols[i][j] for i in range(4)) == 0 for j in range(4))

    def test_constant_square(self):
        n = nilpotent_part(ones(3))
        assert all(v == 0 for v in n.entries)

    def test_f360_shift(self):
        n = nilpotent_part(catalog("f360"))
        assert n.at(0, 0) == 2 - Fraction(17, 2)

    def test_requires_da(self):
        with pytest.raises(SquareError):
            nilpotent_part(IntSquare.from_rows([[1, 2], [3, 4]]))


class TestNilpotencyIndex:
    def test_sud4a(self):
        assert nilpotency_index(nilpotent_part(catalog("sud4a"))) == 3

    def test_laa44(self):
        assert nilpotency_index(nilpotent_part(catalog("laa44"))) == 4

    def test_zero_matrix(self):
        zero = RationalSquare(3, (Fraction(0),) * 9)
        assert nilpotency_index(zero) == 1

    def test_not_nilpotent(self):
        with pytest.raises(NotNilpotentError):
            nilpotency_index(nilpotent_part(catalog("lat4a")))


class TestZeroJordanProfile:
    def test_sud4a_single_block(self):
        profile = zero_jordan_profile(catalog("sud4a"))
        assert profile.block_sizes == (3,)
        assert profile.max_block == 3
        assert profile.zero_rank_sequence == (4, 3, 2, 1, 1)

    def test_compound_two_blocks(self):
        c16 = compound(catalog("sud4a"), catalog("sud4a"), "latin")
        profile = zero_jordan_profile(c16)
        assert profile.block_sizes == (3, 3) + (1,) * 9
        assert profile.max_block == 3

    def test_f181_empty(self):
        profile = zero_jordan_profile(catalog("f181"))
        assert profile.block_sizes == ()
        assert profile.max_block == 0
        assert profile.zero_rank_sequence == (4, 4)

    def test_block_sum_equals_zero_multiplicity(self):
        for name in ("sud4a", "lat4a", "f360", "f175", "laa44", "BF", "loshu"):
            a = catalog(name)
            profile = zero_jordan_profile(a)
            mu = zero_multiplicity(char_poly(a))
            assert sum(profile.block_sizes) == mu, name


class TestPredictedConstancy:
    def test_sud4a(self):
        a = catalog("sud4a")
        k = predicted_constancy_power(a)
        assert k == 3
        assert is_constant(mat_pow(a, k)) == 10**3 // 4
        assert is_constant(mat_pow(a, k - 1)) is None

    def test_laa44(self):
        a = catalog("laa44")
        k = predicted_constancy_power(a)
        assert k == 4
        assert is_constant(mat_pow(a, k)) == 65**4 // 5 == 3_570_125

    def test_bf(self):
        a = catalog("BF")
        k = predicted_constancy_power(a)
        assert k == 3
        assert is_constant(mat_pow(a, k)) == 260**3 // 8

    def test_rejects_non_1ev(self):
        with pytest.raises(SquareError):
            predicted_constancy_power(catalog("lat4a"))

    def test_matches_observed_onset(self):
        for name in ("sud4a", "f360", "f299", "laa44", "BF", "prime"):
            a = catalog(name)
            assert predicted_constancy_power(a) == constancy_onset(a, 12), name

    def test_max_block_is_nilpotency_index_for_1ev(self):
        for name in ("sud4a", "f360", "f299", "laa44", "BF", "prime"):
            a = catalog(name)
            profile = zero_jordan_profile(a)
            assert profile.max_block == nilpotency_index(nilpotent_part(a)), name


class TestOnesIdentities:
    def test_ones_powers(self):
        # ones(n)^k = n^(k-1) * ones(n)
        for n in (2, 3, 4, 5):
            e = ones(n)
            for k in (2, 3, 4):
                assert mat_pow(e, k).entries == (n ** (k - 1),) * (n * n)

    def test_nilpotent_annihilates_ones(self):
        # zero line sums of the nilpotent part make N * ones = ones * N = 0
        for name in ("sud4a", "f360", "laa44", "BF"):
            npart = nilpotent_part(catalog(name))
            n = npart.order
            rows = npart.to_rows()
            assert all(sum(rows[i]) == 0 for i in range(n))
            assert all(sum(rows[i][j] for i in range(n)) == 0 for j in range(n))

    def test_cayley_hamilton_shortcut_for_1ev(self):
        # A^n = L * A^(n-1) exactly
        for name, linesum in (("sud4a", 10), ("f360", 34), ("laa44", 65)):
            a = catalog(name)
            n = a.order
            lhs = mat_pow(a, n)
            rhs = mat_pow(a, n - 1)
            assert lhs.entries == tuple(linesum * v for v in rhs.entries), name


def test_profile_not_confused_by_mixed_spectrum():
    # lat4a has one zero eigenvalue and three nonzero ones: single 1-block
    profile = zero_jordan_profile(catalog("lat4a"))
    assert profile.block_sizes == (1,)
    assert profile.zero_rank_sequence == (4, 3, 3)
