"""Exact sparse matrices, kernels and subspace lattice operations over Q(i).

Matrices are assembled column by column from operators acting on graded
bases.  Kernels and canonical subspace bases come from the deterministic
reduced-row-echelon backend, so identical inputs always give identical
bases.
"""

from __future__ import annotations

from typing import Dict, List

from . import backend
from .rational import GaussianRational, ONE
from .poly import SpinorPoly
from .sectors import GradedBasis

Raw = tuple  # (re, im) pair of exact rationals


def _to_raw(c: GaussianRational) -> Raw:
    return (c.re, c.im)


def _from_raw(v: Raw) -> GaussianRational:
    return GaussianRational(v[0], v[1])


class MatrixAssemblyError(ValueError):
    """An operator image fell outside the declared codomain sector."""


class SparseMatrix:
    """Exact sparse matrix; entries maps (row, col) to a nonzero coefficient."""

    __slots__ = ("rows", "cols", "entries", "_columns")

    def __init__(self, rows: int, cols: int,
                 entries: Dict[tuple, GaussianRational] = None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        self._columns = None
        if entries:
            for key, coeff in entries.items():
                if coeff:
                    self.entries[key] = coeff

    def columns_raw(self) -> List[dict]:
        """Column dicts row -> raw coefficient pair, cached."""
        if self._columns is None:
            cols = [dict() for _ in range(self.cols)]
            for (r, c), coeff in self.entries.items():
                cols[c][r] = _to_raw(coeff)
            self._columns = cols
        return self._columns

    def rows_raw(self) -> List[dict]:
        rows = [dict() for _ in range(self.rows)]
        for (r, c), coeff in self.entries.items():
            rows[r][c] = _to_raw(coeff)
        return rows

    def apply_raw(self, vec: dict) -> dict:
        """Image of a sparse coefficient vector (raw pairs)."""
        cols = self.columns_raw()
        out = {}
        for c, (vre, vim) in vec.items():
            for r, (mre, mim) in cols[c].items():
                dre = vre * mre - vim * mim
                dim = vre * mim + vim * mre
                cur = out.get(r)
                if cur is None:
                    out[r] = (dre, dim)
                else:
                    nre = cur[0] + dre
                    nim = cur[1] + dim
                    if nre or nim:
                        out[r] = (nre, nim)
                    else:
                        del out[r]
        return out

    def rank(self) -> int:
        return len(backend.rref(self.rows_raw(), self.cols))

    def kernel_raw(self) -> List[dict]:
        """Nullspace basis as raw vectors, one per free column, in order."""
        pivots = backend.rref(self.rows_raw(), self.cols)
        pivot_cols = set(pivots)
        vectors = []
        one = _to_raw(ONE)
        for f in range(self.cols):
            if f in pivot_cols:
                continue
            vec = {f: one}
            for p, prow in pivots.items():
                coeff = prow.get(f)
                if coeff is not None:
                    vec[p] = (-coeff[0], -coeff[1])
            vectors.append(vec)
        return vectors


def operator_matrix(op, domain: GradedBasis, codomain: GradedBasis) -> SparseMatrix:
    """Matrix of op with columns indexed by the domain basis.

    Raises MatrixAssemblyError naming the offending monomial if any image
    monomial is missing from the codomain; nothing is truncated silently.
    """
    entries = {}
    index = codomain.index
    for j, mono in enumerate(domain.monomials):
        image = op.apply(SpinorPoly.from_monomial(mono))
        for m, coeff in image.terms.items():
            r = index.get(m)
            if r is None:
                raise MatrixAssemblyError(
                    "image monomial %s of basis element %s is outside the "
                    "codomain sector %s" % (m.text(), mono.text(),
                                            codomain.spec))
            entries[(r, j)] = coeff
    return SparseMatrix(len(codomain), len(domain), entries)


class AmbientMismatchError(ValueError):
    pass


class SubspaceBasis:
    """Canonical (reduced echelon) basis of a subspace of a graded sector."""

    __slots__ = ("ambient", "vectors")

    def __init__(self, ambient: GradedBasis, raw_vectors, canonical=False):
        self.ambient = ambient
        if canonical:
            self.vectors = list(raw_vectors)
        else:
            pivots = backend.rref([dict(v) for v in raw_vectors], len(ambient))
            self.vectors = [pivots[p] for p in sorted(pivots)]

    @classmethod
    def full(cls, ambient):
        one = _to_raw(ONE)
        return cls(ambient, [{i: one} for i in range(len(ambient))],
                   canonical=True)

    @classmethod
    def from_polys(cls, ambient, polys):
        vecs = []
        for p in polys:
            vec = {}
            for mono, coeff in p.terms.items():
                i = ambient.index.get(mono)
                if i is None:
                    raise AmbientMismatchError(
                        "monomial %s not in ambient sector %s"
                        % (mono.text(), ambient.spec))
                vec[i] = _to_raw(coeff)
            vecs.append(vec)
        return cls(ambient, vecs)

    # -- structure --------------------------------------------------------

    @property
    def dim(self):
        return len(self.vectors)

    def _pivot_map(self):
        return {min(v): v for v in self.vectors}

    def _check_ambient(self, other):
        if self.ambient is not other.ambient and \
                self.ambient.spec != other.ambient.spec:
            raise AmbientMismatchError(
                "subspaces live in different ambient sectors: %s vs %s"
                % (self.ambient.spec, other.ambient.spec))

    def contains_raw(self, vec) -> bool:
        return not backend.reduce_row(vec, self._pivot_map())

    def contains(self, other: "SubspaceBasis") -> bool:
        self._check_ambient(other)
        pivots = self._pivot_map()
        return all(not backend.reduce_row(v, pivots) for v in other.vectors)

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        self._check_ambient(other)
        return self.vectors == other.vectors

    def sum(self, other: "SubspaceBasis") -> "SubspaceBasis":
        self._check_ambient(other)
        return SubspaceBasis(self.ambient, self.vectors + other.vectors)

    def intersect(self, other: "SubspaceBasis") -> "SubspaceBasis":
        self._check_ambient(other)
        # solve sum a_i self_i - sum b_j other_j = 0; read off the a part
        a, b = self.dim, other.dim
        entries = {}
        for j, v in enumerate(self.vectors):
            for r, coeff in v.items():
                entries[(r, j)] = _from_raw(coeff)
        for j, v in enumerate(other.vectors):
            for r, (re, im) in v.items():
                entries[(r, a + j)] = GaussianRational(-re, -im)
        m = SparseMatrix(len(self.ambient), a + b, entries)
        members = []
        for ker in m.kernel_raw():
            vec = {}
            for j in range(a):
                coeff = ker.get(j)
                if coeff is not None:
                    _vec_addmul(vec, self.vectors[j], coeff)
            members.append(vec)
        return SubspaceBasis(self.ambient, members)

    def intersect_coordinates(self, keep) -> "SubspaceBasis":
        """Intersection with the span of the ambient monomials where
        keep(monomial) is true."""
        drop_rows = [i for i, m in enumerate(self.ambient.monomials)
                     if not keep(m)]
        drop = set(drop_rows)
        entries = {}
        for j, v in enumerate(self.vectors):
            for r, coeff in v.items():
                if r in drop:
                    entries[(r, j)] = _from_raw(coeff)
        m = SparseMatrix(len(self.ambient), self.dim, entries)
        members = []
        for ker in m.kernel_raw():
            vec = {}
            for j, coeff in ker.items():
                _vec_addmul(vec, self.vectors[j], coeff)
            members.append(vec)
        return SubspaceBasis(self.ambient, members)

    def image_under(self, matrix: SparseMatrix,
                    codomain: GradedBasis) -> "SubspaceBasis":
        """Canonical basis of the image of this subspace under a matrix."""
        if matrix.cols != len(self.ambient):
            raise AmbientMismatchError("matrix domain does not match ambient")
        return SubspaceBasis(codomain,
                             [matrix.apply_raw(v) for v in self.vectors])

    def restricted_kernel(self, matrix: SparseMatrix) -> "SubspaceBasis":
        """Kernel of the matrix restricted to this subspace."""
        if matrix.cols != len(self.ambient):
            raise AmbientMismatchError("matrix domain does not match ambient")
        entries = {}
        for j, v in enumerate(self.vectors):
            image = matrix.apply_raw(v)
            for r, coeff in image.items():
                entries[(r, j)] = _from_raw(coeff)
        small = SparseMatrix(matrix.rows, self.dim, entries)
        members = []
        for ker in small.kernel_raw():
            vec = {}
            for j, coeff in ker.items():
                _vec_addmul(vec, self.vectors[j], coeff)
            members.append(vec)
        return SubspaceBasis(self.ambient, members)

    def embed(self, bigger: GradedBasis) -> "SubspaceBasis":
        """Re-express the basis inside a larger sector basis."""
        mapping = [bigger.index[m] for m in self.ambient.monomials]
        vecs = [{mapping[i]: coeff for i, coeff in v.items()}
                for v in self.vectors]
        return SubspaceBasis(bigger, vecs)

    def polys(self):
        """Basis vectors as spinor polynomials."""
        out = []
        for v in self.vectors:
            p = SpinorPoly(self.ambient.spec.n)
            for i, coeff in v.items():
                p.terms[self.ambient.monomials[i]] = _from_raw(coeff)
            out.append(p)
        return out

    def coefficients(self):
        """Vectors as dicts index -> GaussianRational, canonical order."""
        return [{i: _from_raw(c) for i, c in sorted(v.items())}
                for v in self.vectors]


def _vec_addmul(vec, other, factor):
    fre, fim = factor
    for r, (bre, bim) in other.items():
        dre = fre * bre - fim * bim
        dim = fre * bim + fim * bre
        cur = vec.get(r)
        if cur is None:
            vec[r] = (dre, dim)
        else:
            nre = cur[0] + dre
            nim = cur[1] + dim
            if nre or nim:
                vec[r] = (nre, nim)
            else:
                del vec[r]


def kernel_basis(matrix: SparseMatrix, domain: GradedBasis) -> SubspaceBasis:
    """Canonical kernel basis of a matrix over a graded domain."""
    if matrix.cols != len(domain):
        raise AmbientMismatchError("matrix has %d columns, domain has %d"
                                   % (matrix.cols, len(domain)))
    return SubspaceBasis(domain, matrix.kernel_raw())


def joint_kernel(matrices, domain: GradedBasis) -> SubspaceBasis:
    """Intersection of the kernels of several matrices over one domain."""
    current = None
    for m in matrices:
        if current is None:
            current = kernel_basis(m, domain)
        else:
            current = current.restricted_kernel(m)
        if current.dim == 0:
            break
    if current is None:
        current = SubspaceBasis.full(domain)
    return current
