# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernels_py: reduced row echelon form over Q(i).

Same interface and bit-identical output as the pure-Python backend; the
coefficients stay arbitrary-precision rational objects, the compiled code
removes the interpreter overhead of the elimination loops.
"""

BACKEND_NAME = "cython"


cdef void _submul_inplace(dict row, dict other, tuple factor):
    cdef object fre = factor[0]
    cdef object fim = factor[1]
    cdef object col, cur, bre, bim, dre, dim, nre, nim
    for col, val in other.items():
        bre = (<tuple>val)[0]
        bim = (<tuple>val)[1]
        dre = fre * bre - fim * bim
        dim = fre * bim + fim * bre
        cur = row.get(col)
        if cur is None:
            row[col] = (-dre, -dim)
        else:
            nre = (<tuple>cur)[0] - dre
            nim = (<tuple>cur)[1] - dim
            if nre or nim:
                row[col] = (nre, nim)
            else:
                del row[col]


def reduce_row(row, dict pivots):
    """Eliminate every pivot column from a copy of row; return the remainder."""
    cdef dict r = dict(row)
    cdef list hits = [c for c in r if c in pivots]
    cdef object c, f, col, cur, fre, fim, bre, bim, dre, dim, nre, nim
    cdef dict prow
    hits.sort()
    for c in hits:
        f = r.get(c)
        if f is None:
            continue
        del r[c]
        prow = <dict>pivots[c]
        fre = (<tuple>f)[0]
        fim = (<tuple>f)[1]
        for col, val in prow.items():
            if col == c:
                continue
            bre = (<tuple>val)[0]
            bim = (<tuple>val)[1]
            dre = fre * bre - fim * bim
            dim = fre * bim + fim * bre
            cur = r.get(col)
            if cur is None:
                r[col] = (-dre, -dim)
            else:
                nre = (<tuple>cur)[0] - dre
                nim = (<tuple>cur)[1] - dim
                if nre or nim:
                    r[col] = (nre, nim)
                else:
                    del r[col]
    return r


def rref(rows, ncols):
    """Reduced row echelon form; returns {pivot column: row dict}."""
    cdef dict pivots = {}
    cdef dict r, norm_row, prow
    cdef object row, lead, lre, lim, norm, ire, iim, col, bre, bim, f
    for row in rows:
        r = <dict>reduce_row(row, pivots)
        if not r:
            continue
        lead = min(r)
        val = r.pop(lead)
        lre = (<tuple>val)[0]
        lim = (<tuple>val)[1]
        norm = lre * lre + lim * lim
        ire = lre / norm
        iim = -lim / norm
        norm_row = {lead: (ire * lre - iim * lim, ire * lim + iim * lre)}
        for col, val in r.items():
            bre = (<tuple>val)[0]
            bim = (<tuple>val)[1]
            norm_row[col] = (ire * bre - iim * bim, ire * bim + iim * bre)
        for prow_obj in pivots.values():
            prow = <dict>prow_obj
            f = prow.get(lead)
            if f is not None:
                _submul_inplace(prow, norm_row, <tuple>f)
        pivots[lead] = norm_row
    return pivots
