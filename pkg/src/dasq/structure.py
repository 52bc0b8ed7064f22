"""Nilpotent decomposition and Jordan structure of the zero eigenvalue.

A doubly-affine square Z with linesum l splits as Z = N + (l/n) * ones
where N has zero line sums; when Z has a single nonzero eigenvalue N is
nilpotent and its index k is exactly the first power at which Z^k is a
constant matrix (the cross terms in the binomial expansion vanish
because N annihilates the all-ones square, and ones^k = n^(k-1) * ones).

No Jordan transform is ever computed: the block sizes for eigenvalue 0
follow from the exact rank sequence of A^p (the Weyr characteristic),
since the nonzero eigenvalues contribute a rank that is stable under
powering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import da_linesum
from .core import (
    IntSquare,
    RationalSquare,
    SquareError,
    mat_mul,
    rank,
)
from .spectra import is_1ev


class NotNilpotentError(SquareError):
    """The rational square has a nonzero power at its order (so the
    source square was not a single-nonzero-eigenvalue square)."""


@dataclass(frozen=True)
class JordanZeroProfile:
    """Jordan block sizes for eigenvalue 0, recovered from ranks.

    ``zero_rank_sequence[p]`` is rank(A^p), recorded from p = 0 until
    the first repeated value (stabilization).  block_sizes is the
    multiset of zero-block sizes, descending; max_block is 0 when the
    square is nonsingular.
    """

    block_sizes: tuple[int, ...]
    max_block: int
    zero_rank_sequence: tuple[int, ...]


def nilpotent_part(z: IntSquare) -> RationalSquare:
    """N = Z - (l/n) * ones, exact rational with zero line sums."""
    linesum = da_linesum(z)
    if linesum is None:
        raise SquareError("nilpotent part requires a doubly-affine square")
    shift = Fraction(linesum, z.order)
    return RationalSquare(z.order, tuple(Fraction(v) - shift for v in z.entries))


def _rational_mul(a: RationalSquare, b: RationalSquare) -> RationalSquare:
    n = a.order
    ae, be = a.entries, b.entries
    out = []
    for i in range(n):
        for j in range(n):
            out.append(sum(ae[i * n + k] * be[k * n + j] for k in range(n)))
    return RationalSquare(n, tuple(out))


def nilpotency_index(nsq: RationalSquare) -> int:
    """Smallest k >= 1 with N^k = 0, checked by exact rational powering."""
    zero = (Fraction(0),) * (nsq.order * nsq.order)
    acc = nsq
    for k in range(1, nsq.order + 1):
        if acc.entries == zero:
            return k
        acc = _rational_mul(acc, nsq)
    raise NotNilpotentError(f"matrix is not nilpotent within order {nsq.order}")


def zero_jordan_profile(a: IntSquare) -> JordanZeroProfile:
    """Block sizes for eigenvalue 0 from the exact rank sequence.

    The number of zero-blocks of size >= p equals
    rank(A^(p-1)) - rank(A^p); the stable rank contribution of the
    nonzero eigenvalues cancels in the difference.
    """
    n = a.order
    ranks = [n]
    ap = None
    for _ in range(1, n + 1):
        ap = a if ap is None else mat_mul(ap, a)
        ranks.append(rank(ap))
        if ranks[-1] == ranks[-2]:
            break
    at_least = [ranks[p - 1] - ranks[p] for p in range(1, len(ranks))]
    sizes: list[int] = []
    for size in range(len(at_least), 0, -1):
        geq_here = at_least[size - 1]
        geq_above = at_least[size] if size < len(at_least) else 0
        sizes.extend([size] * (geq_here - geq_above))
    sizes.sort(reverse=True)
    return JordanZeroProfile(
        block_sizes=tuple(sizes),
        max_block=sizes[0] if sizes else 0,
        zero_rank_sequence=tuple(ranks),
    )


def predicted_constancy_power(a: IntSquare) -> int:
    """Nilpotency index of the nilpotent part of a 1EV square: the first
    power at which the square becomes a constant matrix."""
    if not is_1ev(a):
        raise SquareError("constancy prediction requires a 1EV square")
    return nilpotency_index(nilpotent_part(a))
