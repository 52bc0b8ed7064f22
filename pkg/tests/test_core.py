import json

import pytest

from dasq import (
    CharPoly,
    IntSquare,
    OrderMismatchError,
    ParseError,
    RationalSquare,
    SquareError,
    catalog,
    catalog_names,
    char_poly,
    determinant,
    gramian,
    identity,
    is_constant,
    mat_mul,
    mat_pow,
    ones,
    parse_square,
    poly_eval_matrix,
    rank,
    trace,
    transpose,
)

SUD4A_ROWS = [[1, 2, 3, 4], [3, 4, 1, 2], [4, 3, 2, 1], [2, 1, 4, 3]]
SUD4A_SQUARED = [[27, 23, 27, 23], [23, 27, 23, 27], [23, 27, 23, 27], [27, 23, 27, 23]]


def naive_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)
    ]


class TestParse:
    def test_two_by_two(self):
        sq = parse_square("1 2\n3 4")
        assert sq.order == 2
        assert sq.to_rows() == [[1, 2], [3, 4]]

    def test_sud4a_text(self):
        text = "1 2 3 4\n3 4 1 2\n4 3 2 1\n2 1 4 3"
        assert parse_square(text) == catalog("sud4a")

    def test_commas_and_no_row_breaks(self):
        sq = parse_square("1, 2, 3, 4, 5, 6, 7, 8, 9")
        assert sq.order == 3

    def test_not_a_square_count(self):
        with pytest.raises(ParseError):
            parse_square("1 2 3")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_square("   ")

    def test_bad_token(self):
        with pytest.raises(ParseError):
            parse_square("1 2 3 x")

    def test_json_form(self):
        text = json.dumps({"order": 2, "rows": [[1, 2], [3, 4]]})
        assert parse_square(text).to_rows() == [[1, 2], [3, 4]]

    def test_json_bad_shape(self):
        with pytest.raises(ParseError):
            parse_square(json.dumps({"order": 2, "rows": [[1, 2, 3], [4, 5, 6]]}))

    def test_json_non_integer(self):
        with pytest.raises(ParseError):
            parse_square(json.dumps({"order": 2, "rows": [[1, 2], [3, 4.5]]}))

    def test_negative_entries_ok(self):
        assert parse_square("-1 2 3 -4").to_rows() == [[-1, 2], [3, -4]]


class TestIntSquare:
    def test_validation(self):
        with pytest.raises(SquareError):
            IntSquare(0, ())
        with pytest.raises(SquareError):
            IntSquare(2, (1, 2, 3))
        with pytest.raises(SquareError):
            IntSquare.from_rows([[1, 2], [3]])

    def test_value_semantics(self):
        sq = catalog("sud4a")
        entries_before = sq.entries
        mat_pow(sq, 3)
        assert sq.entries == entries_before


class TestMatMul:
    def test_sud4a_square(self):
        a = catalog("sud4a")
        assert mat_mul(a, a).to_rows() == SUD4A_SQUARED

    def test_identity(self):
        a = catalog("f360")
        assert mat_mul(a, identity(4)) == a
        assert mat_mul(identity(4), a) == a

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            mat_mul(catalog("sud4a"), catalog("loshu"))

    def test_against_naive(self):
        a, b = catalog("f360"), catalog("f181")
        assert mat_mul(a, b).to_rows() == naive_mul(a.to_rows(), b.to_rows())


class TestMatPow:
    def test_sud4a_cube_constant(self):
        cube = mat_pow(catalog("sud4a"), 3)
        assert cube.entries == (250,) * 16

    def test_loshu_square(self):
        assert mat_pow(catalog("loshu"), 2).to_rows() == [
            [59, 83, 83],
            [83, 59, 83],
            [83, 83, 59],
        ]

    def test_p_one(self):
        a = catalog("lat4a")
        assert mat_pow(a, 1) == a

    def test_p_zero_rejected(self):
        with pytest.raises(SquareError):
            mat_pow(catalog("sud4a"), 0)


class TestGramian:
    def test_sud4a(self):
        # oracle: direct transpose-times-self multiplication
        a = catalog("sud4a")
        rows = a.to_rows()
        t = [[rows[j][i] for j in range(4)] for i in range(4)]
        assert gramian(a).to_rows() == naive_mul(t, rows)
        assert gramian(a).to_rows() == [
            [30, 28, 22, 20],
            [28, 30, 20, 22],
            [22, 20, 30, 28],
            [20, 22, 28, 30],
        ]

    def test_sud4a_spectrally_matches_other_orientation(self):
        # A*A^T has the same characteristic polynomial as A^T*A
        a = catalog("sud4a")
        other = mat_mul(a, transpose(a))
        assert other.to_rows() == [
            [30, 22, 20, 28],
            [22, 30, 28, 20],
            [20, 28, 30, 22],
            [28, 20, 22, 30],
        ]
        assert char_poly(other) == char_poly(gramian(a))

    def test_identity(self):
        assert gramian(identity(5)) == identity(5)

    def test_lat4a_symmetric_base(self):
        # lat4a is symmetric, so its Gramian equals its square
        a = catalog("lat4a")
        g = gramian(a)
        assert g == mat_pow(a, 2)
        assert all(sum(g.row(i)) == 100 for i in range(4))


class TestCharPoly:
    def test_sud4a(self):
        assert char_poly(catalog("sud4a")).coefficients == (0, 0, 0, -10, 1)

    def test_f181_factored_form(self):
        expected = CharPoly.from_roots([34, -8]).mul_factor([24, -8, 1])
        assert char_poly(catalog("f181")) == expected

    def test_zero_square(self):
        zero3 = IntSquare(3, (0,) * 9)
        assert char_poly(zero3).coefficients == (0, 0, 0, 1)

    def test_trace_and_det_coefficients(self):
        for name in catalog_names():
            a = catalog(name)
            p = char_poly(a)
            n = a.order
            assert p.coefficients[n - 1] == -trace(a)
            assert p.coefficients[0] == (-1) ** n * determinant(a)

    def test_from_roots_evaluates_to_zero(self):
        p = CharPoly.from_roots([3, -7, 0, 2])
        for r in (3, -7, 0, 2):
            assert p(r) == 0
        assert p(1) != 0

    def test_monic_required(self):
        with pytest.raises(SquareError):
            CharPoly((1, 2))


class TestRank:
    def test_sud4a_power_chain(self):
        a = catalog("sud4a")
        assert [rank(mat_pow(a, p)) for p in (1, 2, 3)] == [3, 2, 1]

    def test_all_ones(self):
        assert rank(ones(4)) == 1

    def test_identity(self):
        assert rank(identity(6)) == 6

    def test_rational_rank(self):
        from fractions import Fraction

        full = RationalSquare.from_rows(
            [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(1, 7)]]
        )
        assert rank(full) == 2
        # second row = 3 * first row -> rank 1
        dependent = RationalSquare.from_rows(
            [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1)]]
        )
        assert rank(dependent) == 1


class TestIsConstant:
    def test_sud4a_cube(self):
        assert is_constant(mat_pow(catalog("sud4a"), 3)) == 250

    def test_sud4a_itself(self):
        assert is_constant(catalog("sud4a")) is None

    def test_f360_cube(self):
        assert is_constant(mat_pow(catalog("f360"), 3)) == 9826


class TestCayleyHamilton:
    def test_catalog_squares(self):
        for name in catalog_names():
            a = catalog(name)
            residual = poly_eval_matrix(char_poly(a), a)
            assert all(v == 0 for v in residual.entries), name


def test_determinant_known_values():
    assert determinant(catalog("f181")) == -6528  # 34 * (-8) * 24
    assert determinant(catalog("sud4a")) == 0
    assert determinant(identity(4)) == 1
