"""Exact kernels for dense integer and rational square matrices.

Everything here is arbitrary precision: entries are Python ints (or
``fractions.Fraction``), characteristic polynomials carry exact integer
coefficients, and rank/determinant use fraction-free elimination.  No
tolerance ever enters a structural result; floats appear only in the
spectral measures built on top (see ``dasq.spectra``).

Conventions:
  * the characteristic polynomial is the monic ``p(x) = det(x*I - A)``,
  * matrix powers use iterated multiplication so every intermediate
    power is available to trajectory code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class SquareError(ValueError):
    """Base class for domain errors raised by dasq operations."""


class ParseError(SquareError):
    """Malformed matrix input (bad token, non-square count, empty)."""


class OrderMismatchError(SquareError):
    """Binary operation on squares of different orders."""


@dataclass(frozen=True)
class IntSquare:
    """Dense order-n square of arbitrary-precision integers.

    Value-semantic and immutable; ``entries`` is the row-major flat
    tuple of the n*n cells.
    """

    order: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise SquareError("order must be >= 1")
        if len(self.entries) != self.order * self.order:
            raise SquareError(
                f"expected {self.order * self.order} entries, got {len(self.entries)}"
            )
        if not all(isinstance(v, int) for v in self.entries):
            raise SquareError("entries must be integers")

    @classmethod
    def from_rows(cls, rows) -> "IntSquare":
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SquareError("rows must form a square")
        return cls(n, tuple(int(v) for r in rows for v in r))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.order + j]

    def row(self, i: int) -> tuple[int, ...]:
        n = self.order
        return self.entries[i * n:(i + 1) * n]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.order)]

    def __str__(self) -> str:
        rows = self.to_rows()
        width = max(len(str(v)) for v in self.entries)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in rows)


@dataclass(frozen=True)
class RationalSquare:
    """Dense order-n square of exact rationals (always in lowest terms)."""

    order: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise SquareError("order must be >= 1")
        if len(self.entries) != self.order * self.order:
            raise SquareError("entry count must equal order squared")
        object.__setattr__(
            self, "entries", tuple(Fraction(v) for v in self.entries)
        )

    @classmethod
    def from_rows(cls, rows) -> "RationalSquare":
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SquareError("rows must form a square")
        return cls(n, tuple(Fraction(v) for r in rows for v in r))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.order + j]

    def to_rows(self) -> list[list[Fraction]]:
        n = self.order
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial with exact integer coefficients, low degree first.

    ``coefficients[k]`` is the coefficient of x^k; the leading
    coefficient is always 1, matching the det(x*I - A) convention.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[-1] != 1:
            raise SquareError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        """Evaluate exactly at an int/Fraction by Horner's rule."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    @classmethod
    def from_roots(cls, roots) -> "CharPoly":
        """Monic polynomial with the given integer roots (with multiplicity)."""
        coeffs = [1]
        for r in roots:
            r = int(r)
            coeffs = [0] + coeffs
            for k in range(len(coeffs) - 1):
                coeffs[k] -= r * coeffs[k + 1]
        return cls(tuple(coeffs))

    def mul_factor(self, factor) -> "CharPoly":
        """Multiply by another monic integer polynomial (low-first coeffs)."""
        f = list(factor)
        out = [0] * (len(self.coefficients) + len(f) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(f):
                out[i + j] += a * b
        return CharPoly(tuple(out))

    def pretty(self) -> str:
        """Human-readable form, highest power first."""
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            term = f"x^{k}" if k > 1 else ("x" if k == 1 else "")
            mag = abs(c)
            coeff = "" if (mag == 1 and k > 0) else str(mag)
            body = f"{coeff}{term}" if term else str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def identity(n: int) -> IntSquare:
    return IntSquare(n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))


def ones(n: int) -> IntSquare:
    """The all-ones square (n-by-n unit matrix of 1s)."""
    return IntSquare(n, (1,) * (n * n))


def constant_square(n: int, c: int) -> IntSquare:
    return IntSquare(n, (int(c),) * (n * n))


def add(a: IntSquare, b: IntSquare) -> IntSquare:
    if a.order != b.order:
        raise OrderMismatchError("order mismatch in add")
    return IntSquare(a.order, tuple(x + y for x, y in zip(a.entries, b.entries)))


def sub(a: IntSquare, b: IntSquare) -> IntSquare:
    if a.order != b.order:
        raise OrderMismatchError("order mismatch in sub")
    return IntSquare(a.order, tuple(x - y for x, y in zip(a.entries, b.entries)))


def scale(a: IntSquare, c: int) -> IntSquare:
    return IntSquare(a.order, tuple(int(c) * x for x in a.entries))


def transpose(a: IntSquare) -> IntSquare:
    n = a.order
    e = a.entries
    return IntSquare(n, tuple(e[j * n + i] for i in range(n) for j in range(n)))


def trace(a: IntSquare) -> int:
    n = a.order
    return sum(a.entries[i * n + i] for i in range(n))


def parse_square(text: str) -> IntSquare:
    """Parse matrix text into an IntSquare.

    Accepts integers separated by whitespace and/or commas (row breaks
    optional; the count must be a perfect square), or the JSON form
    ``{"order": n, "rows": [[...], ...]}``.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
        try:
            n = int(obj["order"])
            rows = obj["rows"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("JSON form needs integer 'order' and 'rows'") from exc
        if n < 1:
            raise ParseError("order must be >= 1")
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ParseError(f"'rows' must be {n} lists of {n} values")
        try:
            flat = tuple(int(v) for r in rows for v in r)
        except (TypeError, ValueError) as exc:
            raise ParseError("non-integer entry in 'rows'") from exc
        if any(not isinstance(v, int) or isinstance(v, bool) for r in rows for v in r):
            raise ParseError("entries must be integers")
        return IntSquare(n, flat)
    tokens = stripped.replace(",", " ").split()
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError as exc:
            raise ParseError(f"non-integer token {tok!r}") from exc
    count = len(values)
    n = isqrt(count)
    if n * n != count or n == 0:
        raise ParseError(f"{count} values do not form a square")
    return IntSquare(n, tuple(values))


def _mul_flat(a: tuple[int, ...], b: tuple[int, ...], n: int) -> tuple[int, ...]:
    out = [0] * (n * n)
    for i in range(n):
        ai = a[i * n:(i + 1) * n]
        row = out[i * n:(i + 1) * n]
        for k in range(n):
            aik = ai[k]
            if aik == 0:
                continue
            bk = b[k * n:(k + 1) * n]
            for j in range(n):
                row[j] += aik * bk[j]
        out[i * n:(i + 1) * n] = row
    return tuple(out)


def mat_mul(a: IntSquare, b: IntSquare) -> IntSquare:
    """Exact product A*B; orders must match."""
    if a.order != b.order:
        raise OrderMismatchError(
            f"cannot multiply order {a.order} by order {b.order}"
        )
    return IntSquare(a.order, _mul_flat(a.entries, b.entries, a.order))


def mat_pow(a: IntSquare, p: int) -> IntSquare:
    """Exact A^p for p >= 1 via iterated multiplication."""
    if p < 1:
        raise SquareError("power must be >= 1")
    acc = a
    for _ in range(p - 1):
        acc = mat_mul(acc, a)
    return acc


def gramian(a: IntSquare) -> IntSquare:
    """A^T * A, symmetric and positive semidefinite over the rationals."""
    return mat_mul(transpose(a), a)


def is_constant(a: IntSquare) -> int | None:
    """The common entry c when A = c * ones, else None."""
    first = a.entries[0]
    return first if all(v == first for v in a.entries) else None


def char_poly(a: IntSquare) -> CharPoly:
    """Exact monic characteristic polynomial det(x*I - A).

    Faddeev-LeVerrier recurrence: with M_1 = I and
    c_{n-k} = -trace(A*M_k)/k,  M_{k+1} = A*M_k + c_{n-k}*I,
    every division by k is exact by construction.
    """
    n = a.order
    e = a.entries
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = identity(n).entries
    for k in range(1, n + 1):
        am = _mul_flat(e, m, n)
        tr = sum(am[i * n + i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:  # cannot happen: the recurrence divides exactly
            raise ArithmeticError("inexact division in Faddeev-LeVerrier")
        coeffs[n - k] = q
        if k < n:
            m = list(am)
            for i in range(n):
                m[i * n + i] += q
            m = tuple(m)
    return CharPoly(tuple(coeffs))


def poly_eval_matrix(p: CharPoly, a: IntSquare) -> IntSquare:
    """Exact p(A) by Horner's rule (used for Cayley-Hamilton checks)."""
    n = a.order
    acc = constant_square(n, 0).entries
    for c in reversed(p.coefficients):
        acc = _mul_flat(acc, a.entries, n)
        acc = list(acc)
        for i in range(n):
            acc[i * n + i] += c
        acc = tuple(acc)
    return IntSquare(n, acc)


def _integer_rows(a: IntSquare | RationalSquare) -> list[list[int]]:
    """Rows as exact integers; rational rows are scaled (rank-invariant)."""
    if isinstance(a, IntSquare):
        return a.to_rows()
    rows = []
    for r in a.to_rows():
        lcm = 1
        for v in r:
            d = v.denominator
            g = _gcd(lcm, d)
            lcm = lcm // g * d
        rows.append([int(v * lcm) for v in r])
    return rows


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


def _bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination; returns (rank, determinant).

    Pivots are chosen as the first nonzero entry in the current column
    (lowest row index), for determinism.  The two-term Sylvester
    identity keeps every division exact.  The determinant is the last
    pivot when the matrix has full rank, else 0.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    prev = 1
    rank = 0
    sign = 1
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        pivot = m[rank][col]
        for i in range(rank + 1, nr):
            mic = m[i][col]
            for j in range(col + 1, nc):
                m[i][j] = (m[i][j] * pivot - mic * m[rank][j]) // prev
            m[i][col] = 0
        prev = pivot
        rank += 1
    det = sign * prev if (nr == nc and rank == nr) else 0
    return rank, det


def rank(a: IntSquare | RationalSquare) -> int:
    """Exact rank via fraction-free (Bareiss) elimination."""
    return _bareiss(_integer_rows(a))[0]


def determinant(a: IntSquare | RationalSquare) -> int | Fraction:
    """Exact determinant via fraction-free elimination."""
    if isinstance(a, IntSquare):
        return _bareiss(a.to_rows())[1]
    rows = a.to_rows()
    scaling = Fraction(1)
    int_rows = []
    for r in rows:
        lcm = 1
        for v in r:
            d = v.denominator
            g = _gcd(lcm, d)
            lcm = lcm // g * d
        scaling *= lcm
        int_rows.append([int(v * lcm) for v in r])
    return Fraction(_bareiss(int_rows)[1]) / scaling


def rational_from_int(a: IntSquare) -> RationalSquare:
    return RationalSquare(a.order, tuple(Fraction(v) for v in a.entries))
