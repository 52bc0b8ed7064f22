"""Exhaustive census of the 880 order-4 classic magic squares.

The raw search enumerates every arrangement of 1..16 with all rows,
columns and both diagonals summing to 34 (8 * 880 = 7040 raw hits), via
the compiled kernel when available and the pure-Python twin otherwise.
Solutions are reduced to Frenicle standard form, deduplicated and
sorted lexicographically row-major; the 1-based position in that order
is the square's Frenicle index.

Calibration: the ordering is trusted only when the four catalog squares
named by index (f360, f299, f175, f181) land exactly on indices 360,
299, 175 and 181.  Everything that resolves squares *by index* (the
1EV census table, the product suites) is gated on that flag.

Squares are grouped into singular-value clans by their exact Gramian
characteristic polynomial: two squares share a clan exactly when they
share the multiset of squared singular values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classify import classify, frenicle_canonical
from .core import IntSquare, SquareError
from .spectra import is_1ev, r_index, sv_squared_charpoly

try:  # compiled kernel with pure-Python fallback
    from . import _enum4_cy as _kernel

    KERNEL_NAME = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _enum4_py as _kernel

    KERNEL_NAME = "python"

ANCHOR_NAMES = ("f360", "f299", "f175", "f181")
ANCHOR_INDICES = {"f360": 360, "f299": 299, "f175": 175, "f181": 181}


class CalibrationError(SquareError):
    """An index-based feature was requested but the census ordering did
    not reproduce the published anchor indices."""


@dataclass(frozen=True)
class Census:
    canonical_squares: tuple[IntSquare, ...]
    index_of: dict[tuple[int, ...], int]
    clans: dict[tuple[int, ...], tuple[int, ...]]
    onev_members: tuple[tuple[int, int], ...]
    raw_count: int
    calibrated: bool
    anchor_report: dict[str, int]

    def square(self, index: int) -> IntSquare:
        """Census member by 1-based Frenicle index."""
        if not 1 <= index <= len(self.canonical_squares):
            raise SquareError(f"census index {index} out of range")
        return self.canonical_squares[index - 1]

    def clan_id_map(self) -> dict[tuple[int, ...], int]:
        """Stable 1-based clan ids (clan keys sorted lexicographically)."""
        return {key: i for i, key in enumerate(sorted(self.clans), start=1)}


def search_raw() -> list[tuple[int, ...]]:
    """All raw solutions from the active kernel (search order)."""
    return _kernel.search_raw()


def enumerate_classic_magic4() -> Census:
    """Build the full census; deterministic regardless of kernel."""
    from .catalog import catalog  # late import: catalog does not need census

    raw = search_raw()
    canon: set[tuple[int, ...]] = set()
    for flat in raw:
        img, _ = frenicle_canonical(IntSquare(4, flat))
        canon.add(img.entries)
    squares = tuple(IntSquare(4, entries) for entries in sorted(canon))
    index_of = {sq.entries: i for i, sq in enumerate(squares, start=1)}

    clans: dict[tuple[int, ...], list[int]] = {}
    onev: list[tuple[int, int]] = []
    for i, sq in enumerate(squares, start=1):
        key = sv_squared_charpoly(sq).coefficients
        clans.setdefault(key, []).append(i)
        if is_1ev(sq):
            onev.append((i, r_index(sq)))

    anchor_report = {}
    for name in ANCHOR_NAMES:
        img, _ = frenicle_canonical(catalog(name))
        anchor_report[name] = index_of.get(img.entries, 0)
    calibrated = all(
        anchor_report[name] == ANCHOR_INDICES[name] for name in ANCHOR_NAMES
    )

    return Census(
        canonical_squares=squares,
        index_of=index_of,
        clans={k: tuple(v) for k, v in clans.items()},
        onev_members=tuple(onev),
        raw_count=len(raw),
        calibrated=calibrated,
        anchor_report=anchor_report,
    )


@lru_cache(maxsize=1)
def get_census() -> Census:
    return enumerate_classic_magic4()


def frenicle_index(a: IntSquare, census: Census | None = None) -> int:
    """1-based position of the square's canonical form in the census."""
    census = census or get_census()
    if a.order != 4:
        raise SquareError("Frenicle index is defined for order 4 only")
    img, _ = frenicle_canonical(a)
    try:
        return census.index_of[img.entries]
    except KeyError:
        raise SquareError("not an order-4 classic magic square") from None


def onev_census(
    census: Census, associative_only: bool = False
) -> list[tuple[int, int, tuple[int, ...]]]:
    """All 1EV members as (index, R, clan key), optionally only the
    associative ones."""
    out = []
    for index, r_val in census.onev_members:
        sq = census.square(index)
        if associative_only and not classify(sq).is_associative:
            continue
        out.append((index, r_val, sv_squared_charpoly(sq).coefficients))
    return out


def clan_partition(census: Census, subset=None) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Clans restricted to ``subset`` (iterable of indices); full census
    partition when subset is None."""
    if subset is None:
        return dict(census.clans)
    wanted = set(subset)
    out: dict[tuple[int, ...], list[int]] = {}
    for key, members in census.clans.items():
        kept = [i for i in members if i in wanted]
        if kept:
            out[key] = kept
    return {k: tuple(v) for k, v in out.items()}


def census_square_by_index(index: int, census: Census | None = None) -> IntSquare:
    """Index-based lookup; refuses to answer when uncalibrated."""
    census = census or get_census()
    if not census.calibrated:
        raise CalibrationError(
            f"census ordering failed calibration (anchors: {census.anchor_report})"
        )
    return census.square(index)
