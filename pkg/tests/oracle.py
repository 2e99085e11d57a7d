"""Independent cross-checks for the exact linear algebra.

Everything here deliberately avoids the package's elimination code and
its compiled backend: dense Gaussian elimination over pairs of
``fractions.Fraction`` (real and imaginary part), brute-force monomial
counting with itertools, and a from-scratch application of the Dirac
operator on raw exponent dictionaries.  Run as a script to regenerate
the frozen dimension table ``tests/data/oracle_dims.json`` used by the
acceptance suite.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path

DATA_PATH = Path(__file__).parent / "data" / "oracle_dims.json"

ZERO = (Fraction(0), Fraction(0))


# -- dense complex-rational elimination ------------------------------------

def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cdiv(a, b):
    norm = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / norm,
            (a[1] * b[0] - a[0] * b[1]) / norm)


def dense_rows(matrix):
    """SparseMatrix -> dense list-of-lists of Fraction pairs."""
    rows = [[ZERO] * matrix.cols for _ in range(matrix.rows)]
    for (r, c), v in matrix.entries.items():
        re = Fraction(int(v.re.numerator), int(v.re.denominator))
        im = Fraction(int(v.im.numerator), int(v.im.denominator))
        rows[r][c] = (re, im)
    return rows


def dense_rank(rows, ncols):
    """Row-echelon rank by plain Gaussian elimination, no pivoting tricks."""
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] != ZERO:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        pval = prow[col]
        for r in range(rank + 1, len(rows)):
            val = rows[r][col]
            if val == ZERO:
                continue
            factor = _cdiv(val, pval)
            row = rows[r]
            for c in range(col, ncols):
                if prow[c] != ZERO:
                    d = _cmul(factor, prow[c])
                    row[c] = (row[c][0] - d[0], row[c][1] - d[1])
        rank += 1
        if rank == len(rows):
            break
    return rank


def dense_nullity(matrix):
    return matrix.cols - dense_rank(dense_rows(matrix), matrix.cols)


# -- brute-force monomial counting -----------------------------------------

def count_monomials(n, h, qbound, parity):
    """Sector dimension by explicit multiset enumeration."""
    xcount = sum(1 for _ in
                 itertools.combinations_with_replacement(range(2 * n), h))
    qcount = 0
    for k in range(qbound + 1):
        if parity == "even" and k % 2 == 1:
            continue
        if parity == "odd" and k % 2 == 0:
            continue
        qcount += sum(1 for _ in
                      itertools.combinations_with_replacement(range(n), k))
    return xcount * qcount


# -- from-scratch Dirac application ----------------------------------------

def _raw_terms(poly):
    """SpinorPoly -> {(xexp, qexp): (Fraction re, Fraction im)}."""
    out = {}
    for mono, coeff in poly.terms.items():
        re = Fraction(int(coeff.re.numerator), int(coeff.re.denominator))
        im = Fraction(int(coeff.im.numerator), int(coeff.im.denominator))
        out[(tuple(mono.xexp), tuple(mono.qexp))] = (re, im)
    return out


def _add_term(acc, key, val):
    if val == ZERO:
        return
    cur = acc.get(key, ZERO)
    new = (cur[0] + val[0], cur[1] + val[1])
    if new == ZERO:
        acc.pop(key, None)
    else:
        acc[key] = new


def ds_raw(poly):
    """Dirac operator sum_j (i q_j d/dx_{n+j} - d/dx_j (d/dq_j - q_j)),
    computed directly on exponent tuples."""
    n = poly.rank
    acc = {}
    for (xexp, qexp), coeff in _raw_terms(poly).items():
        for j in range(n):
            # i q_j * d/dx_{n+j}
            e = xexp[n + j]
            if e:
                nx = list(xexp)
                nx[n + j] = e - 1
                nq = list(qexp)
                nq[j] += 1
                val = _cmul((Fraction(e), Fraction(0)), coeff)
                _add_term(acc, (tuple(nx), tuple(nq)),
                          (-val[1], val[0]))
            # - d/dx_j (d/dq_j - q_j)
            e = xexp[j]
            if e:
                nx = list(xexp)
                nx[j] = e - 1
                scale = (Fraction(-e), Fraction(0))
                k = qexp[j]
                if k:
                    nq = list(qexp)
                    nq[j] = k - 1
                    _add_term(acc, (tuple(nx), tuple(nq)),
                              _cmul((Fraction(k), Fraction(0)),
                                    _cmul(scale, coeff)))
                nq = list(qexp)
                nq[j] = k + 1
                neg = _cmul(scale, coeff)
                _add_term(acc, (tuple(nx), tuple(nq)),
                          (-neg[0], -neg[1]))
    return acc


def is_monogenic(poly):
    return not ds_raw(poly)


# -- frozen table generation -----------------------------------------------

def _freeze():
    import time
    from sympspin.analysis import ds_matrix, twistor_matrix, xs_matrix
    from sympspin.sectors import SectorSpec

    table = {}

    def key(kind, spec):
        return "%s/n%d/h%d/Q%d/%s" % (kind, spec.n, spec.h,
                                      spec.qbound, spec.parity)

    # sector counts
    for (n, h, q, par) in [(2, 2, 1, "both"), (1, 0, 2, "even"),
                           (2, 1, 0, "even"), (3, 2, 3, "both")]:
        table["count/n%d/h%d/Q%d/%s" % (n, h, q, par)] = \
            count_monomials(n, h, q, par)

    # raising-operator rank on the smallest sector
    spec = SectorSpec(1, 0, 1, "both")
    table[key("xsrank", spec)] = dense_rank(
        dense_rows(xs_matrix(spec)), xs_matrix(spec).cols)

    # Dirac nullities for every sector the triangle / series /
    # theorem-comparison suites touch at n <= 2, Q <= 5
    specs = set()
    for n in (1, 2):
        for par in ("even", "odd", "both"):
            for h in range(4):
                specs.add(SectorSpec(n, h, 6, par))       # series upper
                if h < 3:
                    specs.add(SectorSpec(n, h, 5, par))   # series lower
                specs.add(SectorSpec(n, h, 4, par))       # theorem image
            for hh in range(4):                           # triangle summands
                for hp in range(hh + 1):
                    specs.add(SectorSpec(n, hp, 5 + hh, par))
    specs.add(SectorSpec(2, 2, 2, "both"))
    specs.add(SectorSpec(1, 1, 3, "both"))
    for spec in sorted(specs, key=lambda s: (s.n, s.h, s.qbound, s.parity)):
        t0 = time.time()
        table[key("dsnullity", spec)] = dense_nullity(ds_matrix(spec))
        print("%s -> %d (%.1fs)" % (key("dsnullity", spec),
                                    table[key("dsnullity", spec)],
                                    time.time() - t0), flush=True)

    # twistor nullities at desk scale
    tspecs = [SectorSpec(1, h, 4, "both") for h in range(4)] + \
             [SectorSpec(2, h, 4, "both") for h in range(4)] + \
             [SectorSpec(1, h, 5, "both") for h in range(5)]
    for spec in tspecs:
        t0 = time.time()
        table[key("tsnullity", spec)] = dense_nullity(twistor_matrix(spec))
        print("%s -> %d (%.1fs)" % (key("tsnullity", spec),
                                    table[key("tsnullity", spec)],
                                    time.time() - t0), flush=True)

    DATA_PATH.parent.mkdir(parents=True, exist_ok=True)
    DATA_PATH.write_text(json.dumps(table, sort_keys=True, indent=2) + "\n")
    print("wrote %s (%d entries)" % (DATA_PATH, len(table)))


def load_table():
    return json.loads(DATA_PATH.read_text())


if __name__ == "__main__":
    _freeze()
