"""Pure-Python hot kernels: reduced row echelon form over Q(i).

Rows are dicts mapping column index to a coefficient pair (re, im) of
exact rationals.  The compiled twin in ``_kernels_cy`` implements the same
interface; ``sympspin.backend`` picks one at import time.

The elimination is deterministic and produces the unique reduced row
echelon form, so canonical bases do not depend on the row order in which
the input is fed.
"""

BACKEND_NAME = "python"


def _submul(row, other, factor):
    """row -= factor * other, in place, dropping zeros."""
    fre, fim = factor
    for col, (bre, bim) in other.items():
        dre = fre * bre - fim * bim
        dim = fre * bim + fim * bre
        cur = row.get(col)
        if cur is None:
            row[col] = (-dre, -dim)
        else:
            nre = cur[0] - dre
            nim = cur[1] - dim
            if nre or nim:
                row[col] = (nre, nim)
            else:
                del row[col]


def reduce_row(row, pivots):
    """Eliminate every pivot column from a copy of row; return the remainder."""
    r = dict(row)
    hits = [c for c in r if c in pivots]
    for c in sorted(hits):
        f = r.get(c)
        if f is None:
            continue
        del r[c]
        prow = pivots[c]
        fre, fim = f
        for col, (bre, bim) in prow.items():
            if col == c:
                continue
            dre = fre * bre - fim * bim
            dim = fre * bim + fim * bre
            cur = r.get(col)
            if cur is None:
                r[col] = (-dre, -dim)
            else:
                nre = cur[0] - dre
                nim = cur[1] - dim
                if nre or nim:
                    r[col] = (nre, nim)
                else:
                    del r[col]
    return r


def rref(rows, ncols):
    """Reduced row echelon form of the given rows.

    Returns a dict mapping pivot column -> row dict.  Each pivot row has
    leading coefficient one at its pivot column and zero at every other
    pivot column.
    """
    pivots = {}
    for row in rows:
        r = reduce_row(row, pivots)
        if not r:
            continue
        lead = min(r)
        lre, lim = r.pop(lead)
        norm = lre * lre + lim * lim
        ire = lre / norm
        iim = -lim / norm
        norm_row = {lead: (ire * lre - iim * lim, ire * lim + iim * lre)}
        for col, (bre, bim) in r.items():
            norm_row[col] = (ire * bre - iim * bim, ire * bim + iim * bre)
        for prow in pivots.values():
            f = prow.get(lead)
            if f is not None:
                _submul(prow, norm_row, f)
        pivots[lead] = norm_row
    return pivots
