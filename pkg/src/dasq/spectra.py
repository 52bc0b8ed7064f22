"""Spectral measures of integer squares.

Structural quantities (rank, zero multiplicity, the single-nonzero-
eigenvalue test, the R-index) are computed exactly; floats appear only
in the reported singular values and the entropy-based Compression.

Singular values come from the eigenvalues of the Gramian A^T A, found
by the cyclic Jacobi rotation method on a float copy (rotation
threshold 1e-14 times the Frobenius scale, 100-sweep cap).  Whenever
the Gramian is exactly representable in doubles, each nonzero numeric
eigenvalue is validated as a root of the exact Gramian characteristic
polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classify import da_linesum
from .core import CharPoly, IntSquare, SquareError, char_poly, gramian, rank

_SV_TOL = 1e-12
_ROOT_RESIDUAL_TOL = 1e-6
_FLOAT_EXACT_LIMIT = 1 << 53


class ConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted or numeric output failed exact validation."""


@dataclass(frozen=True)
class Disk:
    """Gerschgorin disk: center on the real axis, nonnegative radius."""

    center: int
    radius: int
    axis: str  # "row" | "column"


@dataclass(frozen=True)
class SpectralSummary:
    rank: int
    mu: int
    one_ev: bool
    linesum: int | None
    char_poly: CharPoly
    gramian_char_poly: CharPoly
    singular_values: tuple[float, ...]
    r_index: int | None
    compression_pct: float | None
    spread: Fraction | None


def zero_multiplicity(p: CharPoly) -> int:
    """Algebraic multiplicity of the root 0 (trailing zero coefficients)."""
    mu = 0
    for c in p.coefficients:
        if c != 0:
            break
        mu += 1
    return mu


def is_1ev(a: IntSquare) -> bool:
    """True iff A is doubly-affine with linesum L != 0 and its
    characteristic polynomial is x^n - L*x^(n-1)."""
    linesum = da_linesum(a)
    if linesum is None or linesum == 0:
        return False
    n = a.order
    expected = (0,) * (n - 1) + (-linesum, 1)
    return char_poly(a).coefficients == expected


def sv_squared_charpoly(a: IntSquare) -> CharPoly:
    """Exact characteristic polynomial of A^T A; roots are the squared SVs."""
    return char_poly(gramian(a))


def _jacobi_eigenvalues(g: list[list[float]]) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps."""
    n = len(g)
    a = [row[:] for row in g]
    fro = math.sqrt(sum(x * x for row in a for x in row))
    if fro == 0.0:
        return [0.0] * n
    thresh = 1e-14 * fro
    for _ in range(100):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) <= thresh:
                    continue
                rotated = True
                tau = (a[q][q] - a[p][p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                app = a[p][p]
                aqq = a[q][q]
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i][p]
                    aiq = a[i][q]
                    a[i][p] = a[p][i] = c * aip - s * aiq
                    a[i][q] = a[q][i] = s * aip + c * aiq
        if not rotated:
            return [a[i][i] for i in range(n)]
    raise ConvergenceError("Jacobi sweeps did not converge")


def _validate_roots(values: list[float], poly: CharPoly) -> None:
    """Check each nonzero numeric eigenvalue against the exact polynomial.

    Residuals are evaluated in exact rational arithmetic and compared
    with the coefficient scale sum(|c_i| * x^i).
    """
    for x in values:
        if x == 0.0:
            continue
        fx = Fraction(x)
        acc = Fraction(0)
        scale = Fraction(0)
        for c in reversed(poly.coefficients):
            acc = acc * fx + c
            scale = scale * fx + abs(c)
        if scale == 0:
            continue
        if abs(acc) / scale > _ROOT_RESIDUAL_TOL:
            raise ConvergenceError(
                f"numeric eigenvalue {x!r} is not a root of the exact polynomial"
            )


def singular_values(a: IntSquare, tol: float = _SV_TOL) -> tuple[float, ...]:
    """Numeric singular values, descending, zeros clamped.

    ``tol`` is relative: Gramian eigenvalues below tol times the largest
    are treated as exact zeros.
    """
    if tol <= 0:
        raise SquareError("tolerance must be positive")
    g = gramian(a)
    n = a.order
    biggest = max(abs(v) for v in g.entries)
    if biggest > 1e300:
        raise SquareError("entries too large for numeric singular values")
    rows = [[float(v) for v in g.row(i)] for i in range(n)]
    evs = _jacobi_eigenvalues(rows)
    top = max(evs + [0.0])
    cleaned = [0.0 if v < tol * top else v for v in (max(ev, 0.0) for ev in evs)]
    if biggest <= _FLOAT_EXACT_LIMIT:
        _validate_roots(cleaned, char_poly(g))
    return tuple(sorted((math.sqrt(v) for v in cleaned), reverse=True))


def r_index(a: IntSquare) -> int:
    """Sum of fourth powers of all singular values except the leading one.

    Exact: R = trace((A^T A)^2) - L^4, valid because the top singular
    value of a nonnegative doubly-affine square equals its linesum.
    """
    linesum = da_linesum(a)
    if linesum is None:
        raise SquareError("R-index requires a doubly-affine square")
    if any(v < 0 for v in a.entries):
        raise SquareError("R-index requires nonnegative entries")
    g = gramian(a)
    trace_g2 = sum(v * v for v in g.entries)  # G symmetric
    return trace_g2 - linesum**4


def compression(a: IntSquare, tol: float = _SV_TOL) -> float:
    """Entropy-based uniformity percentage on normalized singular values.

    With sigma_hat the nonzero singular values normalized by their sum
    and H their Shannon entropy, C = (1 - H/ln n) * 100; rank 1 gives
    exactly 100.
    """
    if all(v == 0 for v in a.entries):
        raise SquareError("compression is undefined for the zero square")
    svs = [v for v in singular_values(a, tol) if v > 0.0]
    total = sum(svs)
    h = -sum((v / total) * math.log(v / total) for v in svs)
    return (1.0 - h / math.log(a.order)) * 100.0


def spread(a: IntSquare) -> Fraction:
    """n * (max entry - min entry) / linesum, exact."""
    linesum = da_linesum(a)
    if linesum is None:
        raise SquareError("spread requires a doubly-affine square")
    if linesum == 0:
        raise SquareError("spread requires a nonzero linesum")
    return Fraction(a.order * (max(a.entries) - min(a.entries)), linesum)


def gerschgorin_disks(a: IntSquare, axis: str = "column") -> list[Disk]:
    """Disks centered at the diagonal entries; radius is the absolute
    off-diagonal column (default) or row sum."""
    if axis not in ("row", "column"):
        raise SquareError("axis must be 'row' or 'column'")
    n = a.order
    e = a.entries
    disks = []
    for i in range(n):
        if axis == "column":
            radius = sum(abs(e[k * n + i]) for k in range(n) if k != i)
        else:
            radius = sum(abs(e[i * n + k]) for k in range(n) if k != i)
        disks.append(Disk(center=e[i * n + i], radius=radius, axis=axis))
    return disks


def spectral_summary(a: IntSquare, tol: float = _SV_TOL) -> SpectralSummary:
    """Full spectral report; measures that need a doubly-affine or
    nonzero square degrade to None instead of raising."""
    p = char_poly(a)
    gp = sv_squared_charpoly(a)
    linesum = da_linesum(a)
    try:
        r = r_index(a)
    except SquareError:
        r = None
    try:
        c = compression(a, tol)
    except SquareError:
        c = None
    try:
        s = spread(a)
    except SquareError:
        s = None
    return SpectralSummary(
        rank=rank(a),
        mu=zero_multiplicity(p),
        one_ev=is_1ev(a),
        linesum=linesum,
        char_poly=p,
        gramian_char_poly=gp,
        singular_values=singular_values(a, tol),
        r_index=r,
        compression_pct=c,
        spread=s,
    )
