"""Pure-Python kernel for the exhaustive order-4 classic magic square search.

Twin of the compiled kernel in ``_enum4_cy.pyx``; both enumerate every
4x4 arrangement of 1..16 whose rows, columns and both main diagonals sum
to 34.  Cells are fixed in an order that forces as many values as
possible: row 0 fixes a3, the diagonals fix a15 and a12, columns 1 and 2
fix a13 and a14, and the single remaining free cell a7 forces a4, a8 and
a11.  Column 3 is then implied by the row/column sum identity, so only
the row-3 check remains.
"""


def search_raw() -> list[tuple[int, ...]]:
    """Return all raw solutions (row-major 16-tuples) in search order."""
    out = []
    values = range(1, 17)
    for a0 in values:
        b0 = 1 << a0
        for a1 in values:
            b1 = 1 << a1
            if b0 & b1:
                continue
            m1 = b0 | b1
            for a2 in values:
                b2 = 1 << a2
                if m1 & b2:
                    continue
                a3 = 34 - a0 - a1 - a2
                if a3 < 1 or a3 > 16:
                    continue
                m2 = m1 | b2
                b3 = 1 << a3
                if m2 & b3:
                    continue
                m3 = m2 | b3
                for a5 in values:
                    b5 = 1 << a5
                    if m3 & b5:
                        continue
                    m5 = m3 | b5
                    for a10 in values:
                        b10 = 1 << a10
                        if m5 & b10:
                            continue
                        a15 = 34 - a0 - a5 - a10
                        if a15 < 1 or a15 > 16:
                            continue
                        m10 = m5 | b10
                        b15 = 1 << a15
                        if m10 & b15:
                            continue
                        m15 = m10 | b15
                        for a6 in values:
                            b6 = 1 << a6
                            if m15 & b6:
                                continue
                            m6 = m15 | b6
                            for a9 in values:
                                b9 = 1 << a9
                                if m6 & b9:
                                    continue
                                a12 = 34 - a3 - a6 - a9
                                if a12 < 1 or a12 > 16:
                                    continue
                                m9 = m6 | b9
                                b12 = 1 << a12
                                if m9 & b12:
                                    continue
                                a13 = 34 - a1 - a5 - a9
                                if a13 < 1 or a13 > 16:
                                    continue
                                m12 = m9 | b12
                                b13 = 1 << a13
                                if m12 & b13:
                                    continue
                                a14 = 34 - a2 - a6 - a10
                                if a14 < 1 or a14 > 16:
                                    continue
                                m13 = m12 | b13
                                b14 = 1 << a14
                                if m13 & b14:
                                    continue
                                if a12 + a13 + a14 + a15 != 34:
                                    continue
                                m14 = m13 | b14
                                for a7 in values:
                                    b7 = 1 << a7
                                    if m14 & b7:
                                        continue
                                    a4 = 34 - a5 - a6 - a7
                                    if a4 < 1 or a4 > 16:
                                        continue
                                    m7 = m14 | b7
                                    b4 = 1 << a4
                                    if m7 & b4:
                                        continue
                                    a8 = 34 - a0 - a4 - a12
                                    if a8 < 1 or a8 > 16:
                                        continue
                                    m4 = m7 | b4
                                    b8 = 1 << a8
                                    if m4 & b8:
                                        continue
                                    a11 = 34 - a8 - a9 - a10
                                    if a11 < 1 or a11 > 16:
                                        continue
                                    b11 = 1 << a11
                                    if (m4 | b8) & b11:
                                        continue
                                    out.append(
                                        (a0, a1, a2, a3, a4, a5, a6, a7,
                                         a8, a9, a10, a11, a12, a13, a14, a15)
                                    )
    return out
