# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for the exhaustive order-4 classic magic square search.

Same cell order and pruning as the pure-Python twin ``_enum4_py``; see
that module for the derivation of the forced cells.
"""


def search_raw():
    """Return all raw solutions (row-major 16-tuples) in search order."""
    cdef int a0, a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12, a13, a14, a15
    cdef unsigned int one = 1
    cdef unsigned int m1, m2, m3, m5, m6, m9, m10, m12, m13, m14, m15, m4, m7
    out = []
    for a0 in range(1, 17):
        for a1 in range(1, 17):
            if a1 == a0:
                continue
            m1 = (one << a0) | (one << a1)
            for a2 in range(1, 17):
                if m1 & (one << a2):
                    continue
                a3 = 34 - a0 - a1 - a2
                if a3 < 1 or a3 > 16:
                    continue
                m2 = m1 | (one << a2)
                if m2 & (one << a3):
                    continue
                m3 = m2 | (one << a3)
                for a5 in range(1, 17):
                    if m3 & (one << a5):
                        continue
                    m5 = m3 | (one << a5)
                    for a10 in range(1, 17):
                        if m5 & (one << a10):
                            continue
                        a15 = 34 - a0 - a5 - a10
                        if a15 < 1 or a15 > 16:
                            continue
                        m10 = m5 | (one << a10)
                        if m10 & (one << a15):
                            continue
                        m15 = m10 | (one << a15)
                        for a6 in range(1, 17):
                            if m15 & (one << a6):
                                continue
                            m6 = m15 | (one << a6)
                            for a9 in range(1, 17):
                                if m6 & (one << a9):
                                    continue
                                a12 = 34 - a3 - a6 - a9
                                if a12 < 1 or a12 > 16:
                                    continue
                                m9 = m6 | (one << a9)
                                if m9 & (one << a12):
                                    continue
                                a13 = 34 - a1 - a5 - a9
                                if a13 < 1 or a13 > 16:
                                    continue
                                m12 = m9 | (one << a12)
                                if m12 & (one << a13):
                                    continue
                                a14 = 34 - a2 - a6 - a10
                                if a14 < 1 or a14 > 16:
                                    continue
                                m13 = m12 | (one << a13)
                                if m13 & (one << a14):
                                    continue
                                if a12 + a13 + a14 + a15 != 34:
                                    continue
                                m14 = m13 | (one << a14)
                                for a7 in range(1, 17):
                                    if m14 & (one << a7):
                                        continue
                                    a4 = 34 - a5 - a6 - a7
                                    if a4 < 1 or a4 > 16:
                                        continue
                                    m7 = m14 | (one << a7)
                                    if m7 & (one << a4):
                                        continue
                                    a8 = 34 - a0 - a4 - a12
                                    if a8 < 1 or a8 > 16:
                                        continue
                                    m4 = m7 | (one << a4)
                                    if m4 & (one << a8):
                                        continue
                                    a11 = 34 - a8 - a9 - a10
                                    if a11 < 1 or a11 > 16:
                                        continue
                                    if (m4 | (one << a8)) & (one << a11):
                                        continue
                                    out.append(
                                        (a0, a1, a2, a3, a4, a5, a6, a7,
                                         a8, a9, a10, a11, a12, a13, a14, a15)
                                    )
    return out
