"""Built-in catalog of reference squares, compounding, and products.

The catalog holds the named squares used throughout the test corpus:
the mini-sudoku diagonal Latin square sud4a and its row-moved variant
lat4a, the ancient order-3 Loshu, four order-4 classic magic squares
named by their Frenicle census index (f360, f299, f175, f181), the
order-5 associative 1EV square laa44, the order-8 row-permuted
Alejandre/Franklin magic square BF, Herta Freitag's Fibonacci magic
square, and a prime-arithmetic-progression Latin square.

``compound`` builds order m*n squares by tiling increment-shifted
copies of an order-n base according to an order-m pattern square,
the classical construction that multiplies magic squares.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify
from .core import IntSquare, SquareError, mat_mul, sub


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    square: IntSquare
    provenance: str
    expected: dict


def _sq(rows) -> IntSquare:
    return IntSquare.from_rows(rows)


_ENTRIES = [
    CatalogEntry(
        "sud4a",
        _sq([[1, 2, 3, 4], [3, 4, 1, 2], [4, 3, 2, 1], [2, 1, 4, 3]]),
        "order-4 diagonal Latin mini-sudoku; single nonzero eigenvalue",
        {"linesum": 10, "one_ev": True, "r_index": 272},
    ),
    CatalogEntry(
        "lat4a",
        _sq([[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]]),
        "order-4 Latin square (sud4a with row 2 moved last); 3 nonzero eigenvalues",
        {"linesum": 10, "one_ev": False, "r_index": 272},
    ),
    CatalogEntry(
        "loshu",
        _sq([[4, 9, 2], [3, 5, 7], [8, 1, 6]]),
        "the ancient order-3 magic square (associative, nonsingular)",
        {"linesum": 15, "one_ev": False, "r_index": 2448},
    ),
    CatalogEntry(
        "f360",
        _sq([[2, 11, 7, 14], [13, 8, 12, 1], [16, 5, 9, 4], [3, 10, 6, 15]]),
        "Frenicle #360: associative order-4 classic magic, 1EV, clan alpha",
        {"linesum": 34, "one_ev": True, "r_index": 102800},
    ),
    CatalogEntry(
        "f299",
        _sq([[2, 7, 13, 12], [16, 9, 3, 6], [11, 14, 8, 1], [5, 4, 10, 15]]),
        "Frenicle #299: associative order-4 classic magic, 1EV, clan beta",
        {"linesum": 34, "one_ev": True, "r_index": 78608},
    ),
    CatalogEntry(
        "f175",
        _sq([[1, 12, 8, 13], [14, 7, 11, 2], [15, 6, 10, 3], [4, 9, 5, 16]]),
        "Frenicle #175: associative order-4 classic magic, 3EV, clan alpha",
        {"linesum": 34, "one_ev": False, "r_index": 102800},
    ),
    CatalogEntry(
        "f181",
        _sq([[1, 12, 13, 8], [16, 9, 4, 5], [2, 7, 14, 11], [15, 6, 3, 10]]),
        "Frenicle #181: nonsingular order-4 classic magic, not associative",
        {"linesum": 34, "one_ev": False, "r_index": 93584},
    ),
    CatalogEntry(
        "laa44",
        _sq(
            [
                [2, 11, 21, 23, 8],
                [16, 14, 7, 6, 22],
                [25, 17, 13, 9, 1],
                [4, 20, 19, 12, 10],
                [18, 3, 5, 15, 24],
            ]
        ),
        "order-5 associative classic magic square with a single nonzero eigenvalue",
        {"linesum": 65, "one_ev": True, "r_index": 706000},
    ),
    CatalogEntry(
        "BF",
        _sq(
            [
                [14, 3, 62, 51, 46, 35, 30, 19],
                [52, 61, 4, 13, 20, 29, 36, 45],
                [11, 6, 59, 54, 43, 38, 27, 22],
                [53, 60, 5, 12, 21, 28, 37, 44],
                [55, 58, 7, 10, 23, 26, 39, 42],
                [9, 8, 57, 56, 41, 40, 25, 24],
                [50, 63, 2, 15, 18, 31, 34, 47],
                [16, 1, 64, 49, 48, 33, 32, 17],
            ]
        ),
        "order-8 classic magic square obtained by row-permuting a Franklin "
        "bent-diagonal square; 1EV but not bent-magic",
        {"linesum": 260, "one_ev": True, "r_index": 463223040},
    ),
    CatalogEntry(
        "freitag",
        _sq(
            [
                [13, 89, 97, 34],
                [110, 21, 63, 39],
                [68, 94, 55, 16],
                [42, 29, 18, 144],
            ]
        ),
        "Herta Freitag's Fibonacci magic square (nonsingular, not associative)",
        {"linesum": 233, "one_ev": False},
    ),
    CatalogEntry(
        "prime",
        _sq(
            [
                [199, 409, 619, 829],
                [619, 829, 199, 409],
                [829, 619, 409, 199],
                [409, 199, 829, 619],
            ]
        ),
        "Latin square of primes in arithmetic progression (step 210), 1EV",
        {"linesum": 2056, "one_ev": True},
    ),
]

_CATALOG = {entry.name: entry for entry in _ENTRIES}


def catalog_names() -> list[str]:
    return [entry.name for entry in _ENTRIES]


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise SquareError(f"unknown catalog name {name!r}") from None


def catalog(name: str) -> IntSquare:
    return catalog_entry(name).square


def compound(pattern: IntSquare, base: IntSquare, kind: str) -> IntSquare:
    """Tile increment-shifted copies of ``base`` following ``pattern``.

    Block (i, j) of the order m*n result is base + (pattern[i][j] - 1)
    * delta * ones, with delta = n for kind="latin" and delta = n^2 for
    kind="magic".  Latin compounding of classic Latin squares yields a
    classic Latin square of order m*n; magic compounding of classic
    magic squares yields a classic magic square on 1..(mn)^2.
    """
    pflags = classify(pattern)
    bflags = classify(base)
    if kind == "latin":
        if not (pflags.is_classic_latin and bflags.is_classic_latin):
            raise SquareError("latin compounding needs classic Latin pattern and base")
        delta = base.order
    elif kind == "magic":
        # Classic inputs give the element-complete classic result; any
        # diagonal doubly-affine inputs still give a DDA compound.
        if not bflags.is_DDA:
            raise SquareError("magic compounding needs a DDA base")
        if not (pflags.is_DDA or pflags.is_latin):
            raise SquareError("magic compounding needs a DDA or Latin pattern")
        delta = base.order * base.order
    else:
        raise SquareError("kind must be 'latin' or 'magic'")
    m = pattern.order
    n = base.order
    big = m * n
    out = [0] * (big * big)
    for bi in range(m):
        for bj in range(m):
            offset = (pattern.at(bi, bj) - 1) * delta
            for i in range(n):
                row = (bi * n + i) * big + bj * n
                for j in range(n):
                    out[row + j] = base.at(i, j) + offset
    return IntSquare(big, tuple(out))


def commutator(a: IntSquare, b: IntSquare) -> IntSquare:
    """AB - BA, exact."""
    return sub(mat_mul(a, b), mat_mul(b, a))


def products_suite() -> dict:
    """Pair products, triple products and commutators of the associative
    order-4 1EV squares f360, f790 and f489, f790.

    f790 and f489 are resolved by Frenicle index from the census, so
    this raises CalibrationError when the census ordering is off.
    Triple products with the repeated factor adjacent become constant
    when squared; with the factors separated, at the cube.
    """
    from .census import census_square_by_index
    from .classify import line_sums
    from .core import char_poly
    from .powering import constancy_onset
    from .spectra import is_1ev, zero_multiplicity

    f360 = catalog("f360")
    f790 = census_square_by_index(790)
    f489 = census_square_by_index(489)

    def describe(sq: IntSquare) -> dict:
        report = line_sums(sq)
        p = char_poly(sq)
        return {
            "char_poly": p,
            "mu": zero_multiplicity(p),
            "d1": report.d1,
            "d2": report.d2,
            "one_ev": is_1ev(sq),
        }

    pair1 = mat_mul(f360, f790)
    pair2 = mat_mul(f489, f790)
    triples = {
        "f360.pair1": mat_mul(f360, pair1),
        "pair1.f360": mat_mul(pair1, f360),
        "pair1.f790": mat_mul(pair1, f790),
        "f790.pair1": mat_mul(f790, pair1),
        "f489.pair2": mat_mul(f489, pair2),
        "pair2.f489": mat_mul(pair2, f489),
        "pair2.f790": mat_mul(pair2, f790),
        "f790.pair2": mat_mul(f790, pair2),
    }
    return {
        "pairs": {
            "pair1=f360.f790": describe(pair1),
            "pair2=f489.f790": describe(pair2),
        },
        "commutators": {
            "comm1=[f360,f790]": describe(commutator(f360, f790)),
            "comm2=[f489,f790]": describe(commutator(f489, f790)),
        },
        "triples": {
            name: {
                "one_ev": is_1ev(sq),
                "constancy_onset": constancy_onset(sq, 6),
            }
            for name, sq in triples.items()
        },
    }
