"""Report rendering: markdown tables, deterministic JSON, and SVG plots.

Formatting rules, fixed so reports are byte-stable for a given input:
floats carry 6 significant digits; exact rationals render as the exact
decimal when it terminates, else as ``p/q`` plus a 6-digit float.
Eigenvalues are displayed only when available exactly (integer roots of
the characteristic polynomial, plus the roots of a leftover quadratic
factor); nothing is ever computed with a general complex eigensolver.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .classify import ClassificationFlags
from .core import CharPoly, IntSquare
from .powering import PowerTrajectory
from .spectra import Disk, SpectralSummary
from .structure import JordanZeroProfile

_FLAG_FIELDS = (
    "is_DA",
    "is_DDA",
    "is_latin",
    "is_diagonal_latin",
    "is_classic_magic",
    "is_classic_latin",
    "is_associative",
    "is_pandiagonal",
    "is_ultramagic",
    "franklin_half_sums",
    "franklin_bent",
    "franklin_quartet",
)


def f6(x: float) -> str:
    """6 significant digits."""
    return format(x, ".6g")


def f6_num(x: float) -> float:
    """Float rounded through the 6-significant-digit rendering."""
    return float(f6(x))


def rational_str(q: Fraction) -> str:
    """Exact decimal when terminating, else 'p/q (float)'."""
    q = Fraction(q)
    den = q.denominator
    reduced = den
    twos = fives = 0
    while reduced % 2 == 0:
        reduced //= 2
        twos += 1
    while reduced % 5 == 0:
        reduced //= 5
        fives += 1
    if reduced != 1:
        return f"{q.numerator}/{q.denominator} ({float(q):.6g})"
    k = max(twos, fives)
    scaled = abs(q.numerator) * 10**k // den
    sign = "-" if q.numerator < 0 else ""
    if k == 0:
        return f"{sign}{scaled}"
    digits = str(scaled).rjust(k + 1, "0")
    whole, frac = digits[:-k], digits[-k:]
    frac = frac.rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def _divisors(n: int, limit: int = 10**12) -> list[int]:
    """Positive divisors of |n| by trial division; [] when too large."""
    n = abs(n)
    if n == 0 or n > limit:
        return []
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def exact_eigenvalues(p: CharPoly) -> tuple[list[str], CharPoly | None]:
    """Exactly-known roots of a monic integer polynomial, as strings.

    Strips the zero roots, divides out integer roots found by the
    rational-root test, and resolves a leftover quadratic by formula
    (rendered as a ± pair, possibly imaginary).  Returns the root list
    and the unfactored remainder polynomial, if any.
    """
    coeffs = list(p.coefficients)
    roots: list[str] = []
    while coeffs and coeffs[0] == 0 and len(coeffs) > 1:
        roots.append("0")
        coeffs = coeffs[1:]
    changed = True
    while changed and len(coeffs) > 1:
        changed = False
        for cand in _divisors(coeffs[0]):
            for r in (cand, -cand):
                if _poly_at(coeffs, r) == 0:
                    coeffs = _deflate(coeffs, r)
                    roots.append(str(r))
                    changed = True
                    break
            if changed:
                break
    if len(coeffs) == 3:  # monic quadratic x^2 + bx + c
        b, c = coeffs[1], coeffs[0]
        disc = b * b - 4 * c
        half = Fraction(-b, 2)
        if disc >= 0:
            root = math.isqrt(disc)
            if root * root == disc:
                roots.append(rational_str(half + Fraction(root, 2)))
                roots.append(rational_str(half - Fraction(root, 2)))
            else:
                s = math.sqrt(disc) / 2.0
                roots.append(f6(float(half) + s))
                roots.append(f6(float(half) - s))
        else:
            s = math.sqrt(-disc) / 2.0
            roots.append(f"{rational_str(half)}+{f6(s)}i")
            roots.append(f"{rational_str(half)}-{f6(s)}i")
        coeffs = [1]
    remainder = CharPoly(tuple(coeffs)) if len(coeffs) > 1 else None
    return roots, remainder


def _poly_at(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[int], r: int) -> list[int]:
    """Divide by (x - r); exact because r is a root."""
    out = [0] * (len(coeffs) - 1)
    carry = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        out[k] = carry
        carry = coeffs[k] + r * carry
    return out


# --- markdown -------------------------------------------------------------

def _type_cell(step, base_flags: ClassificationFlags) -> str:
    if step.constant_value is not None:
        return f"constant {step.constant_value}E"
    if step.p == 1 and base_flags.is_classic_magic:
        return "magic"
    if step.p == 1 and base_flags.is_latin:
        suffix = "" if step.type_label == "DDA" else f" d1={step.d1},d2={step.d2}"
        return f"Latin{suffix}"
    if step.type_label == "DA":
        return f"DA d1={step.d1},d2={step.d2}"
    return step.type_label


def trajectory_markdown(t: PowerTrajectory, base_flags: ClassificationFlags) -> str:
    lines = [
        "| p | r | C% | Spread | Type | R |",
        "|---|---|----|--------|------|---|",
    ]
    for step in t.steps:
        comp = f6(step.compression_pct) if step.compression_pct is not None else "-"
        spr = rational_str(step.spread) if step.spread is not None else "-"
        r_val = str(step.r_index) if step.r_index is not None else "-"
        lines.append(
            f"| {step.p} | {step.rank} | {comp} | {spr} "
            f"| {_type_cell(step, base_flags)} | {r_val} |"
        )
    return "\n".join(lines) + "\n"


def charpoly_str(p: CharPoly) -> str:
    return p.pretty()


def spectra_markdown(s: SpectralSummary) -> str:
    svs = ", ".join(f6(v) for v in s.singular_values)
    roots, remainder = exact_eigenvalues(s.char_poly)
    eig = ", ".join(sorted(roots, key=_eig_sort_key, reverse=True))
    if remainder is not None:
        eig = (eig + "; " if eig else "") + f"roots of {remainder.pretty()}"
    rows = [
        ("char poly", s.char_poly.pretty()),
        ("eigenvalues", eig),
        ("rank", str(s.rank)),
        ("mu (zero multiplicity)", str(s.mu)),
        ("1EV", str(s.one_ev).lower()),
        ("linesum", str(s.linesum) if s.linesum is not None else "-"),
        ("singular values", svs),
        ("R-index", str(s.r_index) if s.r_index is not None else "-"),
        ("C%", f6(s.compression_pct) if s.compression_pct is not None else "-"),
        ("Spread", rational_str(s.spread) if s.spread is not None else "-"),
    ]
    out = ["| quantity | value |", "|----------|-------|"]
    out.extend(f"| {k} | {v} |" for k, v in rows)
    return "\n".join(out) + "\n"


def _eig_sort_key(root: str):
    try:
        return (1, float(root))
    except ValueError:
        return (0, 0.0)


def classification_markdown(flags: ClassificationFlags) -> str:
    rows = [(name, str(getattr(flags, name)).lower()) for name in _FLAG_FIELDS]
    rows.append(("linesum", str(flags.linesum) if flags.linesum is not None else "-"))
    rows.append(("type_label", flags.type_label))
    if flags.assoc_constant is not None:
        rows.append(("assoc_constant", str(flags.assoc_constant)))
    out = ["| flag | value |", "|------|-------|"]
    out.extend(f"| {k} | {v} |" for k, v in rows)
    return "\n".join(out) + "\n"


def jordan_markdown(j: JordanZeroProfile) -> str:
    blocks = ", ".join(str(b) for b in j.block_sizes) if j.block_sizes else "(none)"
    ranks = ", ".join(str(r) for r in j.zero_rank_sequence)
    return (
        f"zero-eigenvalue Jordan blocks: {blocks} (max {j.max_block}); "
        f"rank sequence of powers: {ranks}\n"
    )


def disks_markdown(disks: list[Disk]) -> str:
    return ", ".join(f"({d.center},{d.radius})" for d in disks) + "\n"


# --- JSON trees -----------------------------------------------------------

def charpoly_json(p: CharPoly) -> dict:
    return {"degree": p.degree, "coefficients": list(p.coefficients)}


def fraction_json(q: Fraction | None) -> dict | None:
    if q is None:
        return None
    return {"exact": rational_str(q), "approx": f6_num(float(q))}


def flags_json(flags: ClassificationFlags) -> dict:
    out = {name: getattr(flags, name) for name in _FLAG_FIELDS}
    out["linesum"] = flags.linesum
    out["type_label"] = flags.type_label
    out["assoc_constant"] = flags.assoc_constant
    return out


def spectra_json(s: SpectralSummary) -> dict:
    return {
        "rank": s.rank,
        "mu": s.mu,
        "one_ev": s.one_ev,
        "linesum": s.linesum,
        "char_poly": charpoly_json(s.char_poly),
        "gramian_char_poly": charpoly_json(s.gramian_char_poly),
        "singular_values": [f6_num(v) for v in s.singular_values],
        "r_index": s.r_index,
        "compression_pct": f6_num(s.compression_pct)
        if s.compression_pct is not None
        else None,
        "spread": fraction_json(s.spread),
    }


def jordan_json(j: JordanZeroProfile) -> dict:
    return {
        "block_sizes": list(j.block_sizes),
        "max_block": j.max_block,
        "zero_rank_sequence": list(j.zero_rank_sequence),
    }


def trajectory_json(t: PowerTrajectory) -> dict:
    return {
        "constancy_onset": t.constancy_onset,
        "truncated_at": t.truncated_at,
        "steps": [
            {
                "p": s.p,
                "rank": s.rank,
                "type_label": s.type_label,
                "d1": s.d1,
                "d2": s.d2,
                "linesum": s.linesum,
                "compression_pct": f6_num(s.compression_pct)
                if s.compression_pct is not None
                else None,
                "spread": fraction_json(s.spread),
                "r_index": s.r_index,
                "constant_value": s.constant_value,
            }
            for s in t.steps
        ],
    }


def square_json(a: IntSquare) -> dict:
    return {"order": a.order, "rows": a.to_rows()}


# --- SVG ------------------------------------------------------------------

def _svg_header(width: int, height: int) -> str:
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
    )


def gerschgorin_svg(disks: list[Disk], eigenvalues: list[str]) -> str:
    """Disks on the real axis with markers at exactly-known real
    eigenvalues (imaginary parts are not plotted)."""
    width, height = 640, 360
    lo = min(d.center - d.radius for d in disks)
    hi = max(d.center + d.radius for d in disks)
    marks = []
    for root in eigenvalues:
        try:
            marks.append(float(root))
        except ValueError:
            continue  # complex pair rendering: skip
    if marks:
        lo = min(lo, min(marks))
        hi = max(hi, max(marks))
    span = max(hi - lo, 1)
    pad = 0.08 * span
    lo, hi = lo - pad, hi + pad
    span = hi - lo

    def sx(x: float) -> float:
        return 20 + (x - lo) / span * (width - 40)

    scale = (width - 40) / span
    mid = height / 2
    parts = [_svg_header(width, height)]
    parts.append(
        f'<line x1="20" y1="{mid}" x2="{width - 20}" y2="{mid}" '
        'stroke="black" stroke-width="1"/>\n'
    )
    for d in disks:
        parts.append(
            f'<circle cx="{sx(d.center):.2f}" cy="{mid}" r="{d.radius * scale:.2f}" '
            'fill="none" stroke="steelblue" stroke-width="1.5"/>\n'
        )
        parts.append(
            f'<circle cx="{sx(d.center):.2f}" cy="{mid}" r="2.5" fill="steelblue"/>\n'
        )
    for x in marks:
        parts.append(
            f'<g><line x1="{sx(x):.2f}" y1="{mid - 6}" x2="{sx(x):.2f}" '
            f'y2="{mid + 6}" stroke="crimson" stroke-width="2"/>'
            f'<text x="{sx(x):.2f}" y="{mid - 10}" font-size="11" '
            f'text-anchor="middle" fill="crimson">{f6(x)}</text></g>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def curves_svg(t: PowerTrajectory) -> str:
    """Compression percentage and Spread against the power p."""
    width, height = 640, 360
    left, right, top, bottom = 50, 50, 20, 40
    ps = [s.p for s in t.steps]
    comp = [s.compression_pct for s in t.steps]
    sprd = [float(s.spread) if s.spread is not None else None for s in t.steps]
    pmax = max(ps)
    pspan = max(pmax - 1, 1)
    smax = max((v for v in sprd if v is not None), default=1.0) or 1.0

    def px(p: int) -> float:
        return left + (p - 1) / pspan * (width - left - right)

    def cy(v: float) -> float:
        return top + (100.0 - v) / 100.0 * (height - top - bottom)

    def sy(v: float) -> float:
        return top + (smax - v) / smax * (height - top - bottom)

    parts = [_svg_header(width, height)]
    parts.append(
        f'<rect x="{left}" y="{top}" width="{width - left - right}" '
        f'height="{height - top - bottom}" fill="none" stroke="gray"/>\n'
    )
    comp_pts = " ".join(
        f"{px(p):.2f},{cy(v):.2f}" for p, v in zip(ps, comp) if v is not None
    )
    parts.append(
        f'<polyline points="{comp_pts}" fill="none" stroke="steelblue" '
        'stroke-width="2"/>\n'
    )
    spread_pts = " ".join(
        f"{px(p):.2f},{sy(v):.2f}" for p, v in zip(ps, sprd) if v is not None
    )
    if spread_pts:
        parts.append(
            f'<polyline points="{spread_pts}" fill="none" stroke="crimson" '
            'stroke-width="2"/>\n'
        )
    for p in ps:
        parts.append(
            f'<text x="{px(p):.2f}" y="{height - bottom + 16}" font-size="11" '
            f'text-anchor="middle">{p}</text>\n'
        )
    parts.append(
        f'<text x="{left}" y="{top - 6}" font-size="11" fill="steelblue">C% '
        "(0-100, left)</text>\n"
    )
    parts.append(
        f'<text x="{width - right}" y="{top - 6}" font-size="11" '
        f'text-anchor="end" fill="crimson">Spread (0-{f6(smax)}, right)</text>\n'
    )
    parts.append(
        f'<text x="{width / 2:.0f}" y="{height - 6}" font-size="11" '
        'text-anchor="middle">p</text>\n'
    )
    parts.append("</svg>\n")
    return "".join(parts)
