"""Line sums and structural classification of integer squares.

Covers the doubly-affine hierarchy (DA: equal row and column sums;
DDA: DA plus both main diagonals), Latin and diagonal-Latin checks,
associativity (equal antipodal pair sums), pandiagonality (broken
diagonals), Ben Franklin's bent diagonals / half sums / 2x2 quartets,
and the 8-fold symmetry canonical form used to index order-4 magic
squares (Frenicle standard form).

Bent diagonals are the V-shaped wrap-around paths: with indices mod n
and n a multiple of 4, the downward V anchored at row r visits cells
(r + min(j, n-1-j), j) for j = 0..n-1, and the upward / rightward /
leftward families are the mirror images.  Each family has n anchors,
giving the classical 4n bent diagonals (for n = 8 the anchor r = 0
visits rows 0,1,2,3,3,2,1,0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import IntSquare, SquareError, is_constant


@dataclass(frozen=True)
class LineSumReport:
    """All exact line sums of a square.

    ``broken_diag_sums`` holds both wrap directions (forward diagonals
    first, i.e. parallel to the main diagonal); ``d1`` is the main
    diagonal, ``d2`` the antidiagonal.  Half sums are populated for even
    order only, bent sums only when the order is a multiple of 4.
    """

    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    d1: int
    d2: int
    broken_diag_sums: tuple[tuple[int, ...], tuple[int, ...]]
    half_row_sums: tuple[int, ...] | None
    half_col_sums: tuple[int, ...] | None
    bent_sums: tuple[tuple[int, ...], ...] | None


@dataclass(frozen=True)
class ClassificationFlags:
    is_DA: bool
    is_DDA: bool
    is_latin: bool
    is_diagonal_latin: bool
    is_classic_magic: bool
    is_classic_latin: bool
    is_associative: bool
    is_pandiagonal: bool
    is_ultramagic: bool
    franklin_half_sums: bool
    franklin_bent: bool
    franklin_quartet: bool
    linesum: int | None
    type_label: str  # constant | DDA | DA | none
    assoc_constant: int | None


def bent_diagonal_sums(a: IntSquare) -> tuple[tuple[int, ...], ...]:
    """The 4n bent-diagonal sums as (down, up, right, left) families."""
    n = a.order
    e = a.entries
    offs = [min(j, n - 1 - j) for j in range(n)]
    down = tuple(
        sum(e[((r + offs[j]) % n) * n + j] for j in range(n)) for r in range(n)
    )
    up = tuple(
        sum(e[((r - offs[j]) % n) * n + j] for j in range(n)) for r in range(n)
    )
    right = tuple(
        sum(e[i * n + (c + offs[i]) % n] for i in range(n)) for c in range(n)
    )
    left = tuple(
        sum(e[i * n + (c - offs[i]) % n] for i in range(n)) for c in range(n)
    )
    return (down, up, right, left)


def line_sums(a: IntSquare) -> LineSumReport:
    n = a.order
    e = a.entries
    row_sums = tuple(sum(e[i * n:(i + 1) * n]) for i in range(n))
    col_sums = tuple(sum(e[i * n + j] for i in range(n)) for j in range(n))
    d1 = sum(e[i * n + i] for i in range(n))
    d2 = sum(e[i * n + (n - 1 - i)] for i in range(n))
    fwd = tuple(sum(e[i * n + (i + s) % n] for i in range(n)) for s in range(n))
    bwd = tuple(sum(e[i * n + (s - i) % n] for i in range(n)) for s in range(n))
    half_rows = half_cols = None
    if n % 2 == 0:
        h = n // 2
        half_rows = tuple(
            sum(e[i * n + j] for j in cols)
            for i in range(n)
            for cols in (range(h), range(h, n))
        )
        half_cols = tuple(
            sum(e[i * n + j] for i in rows)
            for j in range(n)
            for rows in (range(h), range(h, n))
        )
    bent = bent_diagonal_sums(a) if n % 4 == 0 else None
    return LineSumReport(row_sums, col_sums, d1, d2, (fwd, bwd), half_rows, half_cols, bent)


def da_linesum(a: IntSquare) -> int | None:
    """The common row/column sum when A is doubly-affine, else None."""
    report = line_sums(a)
    s = report.row_sums[0]
    if all(v == s for v in report.row_sums) and all(v == s for v in report.col_sums):
        return s
    return None


def classify(a: IntSquare) -> ClassificationFlags:
    n = a.order
    e = a.entries
    report = line_sums(a)
    s = report.row_sums[0]
    is_da = all(v == s for v in report.row_sums) and all(v == s for v in report.col_sums)
    linesum = s if is_da else None
    is_dda = is_da and report.d1 == s and report.d2 == s

    symbols = set(e)
    is_latin = len(symbols) == n and all(
        set(a.row(i)) == symbols for i in range(n)
    ) and all({e[i * n + j] for i in range(n)} == symbols for j in range(n))
    is_diag_latin = is_latin and (
        {e[i * n + i] for i in range(n)} == symbols
        and {e[i * n + (n - 1 - i)] for i in range(n)} == symbols
    )
    is_classic_latin = is_latin and symbols == set(range(1, n + 1))
    is_classic_magic = is_dda and sorted(e) == list(range(1, n * n + 1))

    pair0 = e[0] + e[n * n - 1]
    is_assoc = all(
        e[i * n + j] + e[(n - 1 - i) * n + (n - 1 - j)] == pair0
        for i in range(n)
        for j in range(n)
    )
    assoc_constant = pair0 if is_assoc else None

    fwd, bwd = report.broken_diag_sums
    is_pan = is_da and all(v == s for v in fwd) and all(v == s for v in bwd)
    is_ultra = is_assoc and is_pan and is_dda

    fr_half = bool(
        is_da
        and report.half_row_sums is not None
        and all(2 * h == s for h in report.half_row_sums)
        and all(2 * h == s for h in report.half_col_sums)
    )
    fr_bent = bool(
        is_da
        and report.bent_sums is not None
        and all(v == s for fam in report.bent_sums for v in fam)
    )
    fr_quartet = is_da and _quartets_ok(a, s)

    if is_constant(a) is not None:
        label = "constant"
    elif is_dda:
        label = "DDA"
    elif is_da:
        label = "DA"
    else:
        label = "none"

    return ClassificationFlags(
        is_DA=is_da,
        is_DDA=is_dda,
        is_latin=is_latin,
        is_diagonal_latin=is_diag_latin,
        is_classic_magic=is_classic_magic,
        is_classic_latin=is_classic_latin,
        is_associative=is_assoc,
        is_pandiagonal=is_pan,
        is_ultramagic=is_ultra,
        franklin_half_sums=fr_half,
        franklin_bent=fr_bent,
        franklin_quartet=fr_quartet,
        linesum=linesum,
        type_label=label,
        assoc_constant=assoc_constant,
    )


def _quartets_ok(a: IntSquare, linesum: int) -> bool:
    """Every wrapping 2x2 quartet sums to 4*linesum/n (checked exactly)."""
    n = a.order
    e = a.entries
    for i in range(n):
        i2 = (i + 1) % n
        for j in range(n):
            j2 = (j + 1) % n
            q = e[i * n + j] + e[i * n + j2] + e[i2 * n + j] + e[i2 * n + j2]
            if q * n != 4 * linesum:
                return False
    return True


def _rot90(a: IntSquare) -> IntSquare:
    """Clockwise quarter turn: result[i][j] = a[n-1-j][i]."""
    n = a.order
    e = a.entries
    return IntSquare(n, tuple(e[(n - 1 - j) * n + i] for i in range(n) for j in range(n)))


def _transpose(a: IntSquare) -> IntSquare:
    n = a.order
    e = a.entries
    return IntSquare(n, tuple(e[j * n + i] for i in range(n) for j in range(n)))


def symmetries(a: IntSquare) -> tuple[IntSquare, ...]:
    """The 8 rotation/reflection images of a square, in a fixed order.

    Index k in 0..3 is k clockwise quarter turns; 4..7 are the same
    rotations of the transpose.
    """
    out = []
    cur = a
    for _ in range(4):
        out.append(cur)
        cur = _rot90(cur)
    cur = _transpose(a)
    for _ in range(4):
        out.append(cur)
        cur = _rot90(cur)
    return tuple(out)


def frenicle_canonical(a: IntSquare) -> tuple[IntSquare, int]:
    """Frenicle standard form of an order-4 square and the phase reaching it.

    The canonical image places the smallest of the four corners top-left
    with the cell right of it smaller than the cell below it.  For
    squares with repeated corners or a[0][1] == a[1][0] the rule has no
    unique answer and a SquareError is raised.
    """
    if a.order != 4:
        raise SquareError("canonical form is defined for order 4 only")
    n = a.order
    corners = (a.entries[0], a.entries[n - 1], a.entries[n * (n - 1)], a.entries[n * n - 1])
    lo = min(corners)
    picks = [
        (img, phase)
        for phase, img in enumerate(symmetries(a))
        if img.entries[0] == lo and img.entries[1] < img.entries[n]
    ]
    if not picks:
        raise SquareError("no canonical image (tied corner cells)")
    if len(picks) > 1 and any(p[0].entries != picks[0][0].entries for p in picks[1:]):
        raise SquareError("canonical form is ambiguous (repeated corners)")
    return picks[0]
