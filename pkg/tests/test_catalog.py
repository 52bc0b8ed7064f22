import pytest

from dasq import (
    CharPoly,
    IntSquare,
    SquareError,
    catalog,
    catalog_entry,
    catalog_names,
    char_poly,
    classify,
    commutator,
    compound,
    constancy_onset,
    da_linesum,
    is_1ev,
    line_sums,
    mat_mul,
    mat_pow,
    products_suite,
    r_index,
    zero_multiplicity,
)


def blocks_16(order4_blocks):
    """Assemble an order-16 square from a 4x4 grid of order-4 blocks."""
    rows = []
    for block_row in order4_blocks:
        for i in range(4):
            row = []
            for block in block_row:
                row.extend(block.row(i))
            rows.append(row)
    return IntSquare.from_rows(rows)


class TestCatalog:
    def test_names_stable(self):
        assert catalog_names() == [
            "sud4a",
            "lat4a",
            "loshu",
            "f360",
            "f299",
            "f175",
            "f181",
            "laa44",
            "BF",
            "freitag",
            "prime",
        ]

    def test_sud4a_cells(self):
        assert catalog("sud4a").to_rows() == [
            [1, 2, 3, 4],
            [3, 4, 1, 2],
            [4, 3, 2, 1],
            [2, 1, 4, 3],
        ]

    def test_bf_corrected_cell(self):
        assert catalog("BF").at(0, 7) == 19

    def test_loshu_row_sums(self):
        assert line_sums(catalog("loshu")).row_sums == (15, 15, 15)

    def test_unknown_name(self):
        with pytest.raises(SquareError):
            catalog("nope")

    def test_expected_spot_values(self):
        for name in catalog_names():
            entry = catalog_entry(name)
            expected = entry.expected
            assert da_linesum(entry.square) == expected["linesum"], name
            assert is_1ev(entry.square) == expected["one_ev"], name
            if "r_index" in expected:
                assert r_index(entry.square) == expected["r_index"], name

    def test_laa44_is_associative_classic(self):
        flags = classify(catalog("laa44"))
        assert flags.is_classic_magic and flags.is_associative


class TestCompoundLatin:
    def test_order16_cells(self):
        sud4a = catalog("sud4a")
        result = compound(sud4a, sud4a, "latin")
        from dasq.core import add, constant_square

        a = sud4a
        b = add(sud4a, constant_square(4, 4))
        c = add(sud4a, constant_square(4, 8))
        d = add(sud4a, constant_square(4, 12))
        expected = blocks_16(
            [[a, b, c, d], [c, d, a, b], [d, c, b, a], [b, a, d, c]]
        )
        assert result == expected
        assert result.row(0) == tuple(range(1, 17))

    def test_order16_spectra(self):
        result = compound(catalog("sud4a"), catalog("sud4a"), "latin")
        assert is_1ev(result)
        p = char_poly(result)
        assert p.coefficients == (0,) * 15 + (-136, 1)
        assert zero_multiplicity(p) == 15
        flags = classify(result)
        assert flags.is_classic_latin and flags.is_diagonal_latin
        assert flags.linesum == 136

    def test_precondition(self):
        with pytest.raises(SquareError):
            compound(catalog("sud4a"), catalog("prime"), "latin")


class TestCompoundMagic:
    def test_f360_compound(self):
        result = compound(catalog("f360"), catalog("f360"), "magic")
        flags = classify(result)
        assert flags.is_classic_magic
        assert flags.linesum == 2056
        assert is_1ev(result)
        assert constancy_onset(result, 6) == 3
        assert sorted(result.entries) == list(range(1, 257))

    def test_order_20_composite(self):
        from dasq import rank

        result = compound(catalog("laa44"), catalog("f360"), "magic")
        assert result.order == 20
        assert classify(result).is_classic_magic
        assert classify(result).linesum == 4010
        assert rank(result) == 6
        assert is_1ev(result)
        assert constancy_onset(result, 6) == 4

    def test_fibonacci_compound_allowed(self):
        from dasq import rank

        freitag = catalog("freitag")
        result = compound(freitag, freitag, "magic")
        assert result.order == 16
        assert rank(result) == 7
        assert classify(result).is_DDA

    def test_latin_pattern_magic_base(self):
        result = compound(catalog("sud4a"), catalog("f360"), "magic")
        flags = classify(result)
        assert flags.is_DA
        assert flags.linesum == 4 * 34 + 4 * 16 * (10 - 4)
        assert sorted(set(result.entries)) == list(range(1, 65))

    def test_preconditions(self):
        with pytest.raises(SquareError):
            compound(catalog("f360"), catalog("lat4a"), "magic")  # base not DDA
        with pytest.raises(SquareError):
            compound(IntSquare.from_rows([[1, 2], [3, 4]]), catalog("f360"), "magic")
        with pytest.raises(SquareError):
            compound(catalog("f360"), catalog("f360"), "other")

    def test_compound_of_1ev_is_1ev(self):
        # every catalog pairing of orders 4 and 5 that satisfies the
        # compounding preconditions
        onev_magic = ["f360", "f299", "laa44"]
        patterns = ["sud4a", "f360", "f299", "laa44"]
        for pname in patterns:
            for bname in onev_magic:
                result = compound(catalog(pname), catalog(bname), "magic")
                assert is_1ev(result), (pname, bname)
        assert is_1ev(compound(catalog("sud4a"), catalog("sud4a"), "latin"))


class TestCommutator:
    def test_self_commutes(self):
        a = catalog("f360")
        assert all(v == 0 for v in commutator(a, a).entries)

    def test_zero_line_sums(self):
        comm = commutator(catalog("f360"), catalog("f299"))
        report = line_sums(comm)
        assert set(report.row_sums) == {0}
        assert set(report.col_sums) == {0}


class TestProductsSuite:
    @pytest.fixture(scope="class")
    def suite(self, census):
        assert census.calibrated
        return products_suite()

    def test_pair1(self, suite):
        info = suite["pairs"]["pair1=f360.f790"]
        assert info["char_poly"] == CharPoly.from_roots([1156, 80, 80, 0])
        assert (info["d1"], info["d2"]) == (1316, 1156)
        assert info["mu"] == 1
        assert not info["one_ev"]

    def test_pair2(self, suite):
        info = suite["pairs"]["pair2=f489.f790"]
        assert info["char_poly"] == CharPoly.from_roots([1156, -32, 16, 0])
        assert (info["d1"], info["d2"]) == (1140, 1204)
        assert info["mu"] == 1

    def test_commutators(self, suite):
        comm1 = suite["commutators"]["comm1=[f360,f790]"]
        assert comm1["char_poly"] == CharPoly.from_roots([-80, 80, 0, 0])
        assert (comm1["d1"], comm1["d2"]) == (0, 0)
        comm2 = suite["commutators"]["comm2=[f489,f790]"]
        assert comm2["char_poly"] == CharPoly.from_roots([48, -32, -16, 0])
        assert (comm2["d1"], comm2["d2"]) == (0, 96)

    def test_triples(self, suite):
        expected_onsets = {
            "f360.pair1": 2,
            "pair1.f360": 3,
            "pair1.f790": 2,
            "f790.pair1": 3,
            "f489.pair2": 2,
            "pair2.f489": 3,
            "pair2.f790": 2,
            "f790.pair2": 3,
        }
        for name, onset in expected_onsets.items():
            info = suite["triples"][name]
            assert info["one_ev"], name
            assert info["constancy_onset"] == onset, name

    def test_pairs_stay_3ev_through_power_4(self, census):
        from dasq import census_square_by_index

        f360 = catalog("f360")
        f790 = census_square_by_index(790)
        f489 = census_square_by_index(489)
        for pair in (mat_mul(f360, f790), mat_mul(f489, f790)):
            for p in range(1, 5):
                power = mat_pow(pair, p)
                assert zero_multiplicity(char_poly(power)) == 1
                assert classify(power).is_DA
