"""Kernel structure of the twistor operator at finite graded truncations.

Everything here reduces an infinite-dimensional statement to an exact
finite one.  The truncation discipline: the Dirac, raising and Clifford
operators raise the total q-degree by at most one per application and
flip q-parity, and each twistor component raises it by at most two and
preserves q-parity.  A kernel computed with a codomain bound large
enough to hold every image is therefore exactly the restriction of the
untruncated kernel to q-degree <= Q.  Completeness claims (triangle,
composition series) are asserted on the faithful sub-sector where the
decomposition provably stays inside the computed truncation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional

from .rational import GaussianRational, I
from .poly import SpinorPoly, Monomial
from . import operators as ops
from .sectors import SectorSpec, GradedBasis, enumerate_basis
from .linalg import (SparseMatrix, SubspaceBasis, operator_matrix,
                     kernel_basis)


@lru_cache(maxsize=None)
def sector_basis(spec: SectorSpec) -> GradedBasis:
    return enumerate_basis(spec)


def _empty_matrix(domain: GradedBasis) -> SparseMatrix:
    return SparseMatrix(0, len(domain))


@lru_cache(maxsize=None)
def ds_matrix(spec: SectorSpec) -> SparseMatrix:
    """Matrix of the Dirac operator from (h, Q) into (h-1, Q+1, flipped)."""
    domain = sector_basis(spec)
    if spec.h == 0:
        return _empty_matrix(domain)
    cod = sector_basis(SectorSpec(spec.n, spec.h - 1, spec.qbound + 1,
                                  spec.flip_parity().parity))
    return operator_matrix(ops.ds_operator(spec.n), domain, cod)


@lru_cache(maxsize=None)
def ds_squared_matrix(spec: SectorSpec) -> SparseMatrix:
    domain = sector_basis(spec)
    if spec.h < 2:
        return _empty_matrix(domain)
    cod = sector_basis(SectorSpec(spec.n, spec.h - 2, spec.qbound + 2,
                                  spec.parity))
    dsq = ops.compose(ops.ds_operator(spec.n), ops.ds_operator(spec.n))
    return operator_matrix(dsq, domain, cod)


@lru_cache(maxsize=None)
def xs_matrix(spec: SectorSpec) -> SparseMatrix:
    """Matrix of the raising operator from (h, Q) into (h+1, Q+1, flipped)."""
    domain = sector_basis(spec)
    cod = sector_basis(SectorSpec(spec.n, spec.h + 1, spec.qbound + 1,
                                  spec.flip_parity().parity))
    return operator_matrix(ops.xs_operator(spec.n), domain, cod)


@lru_cache(maxsize=None)
def twistor_matrix(spec: SectorSpec) -> SparseMatrix:
    """All 2n twistor components stacked into one tall matrix."""
    domain = sector_basis(spec)
    n = spec.n
    if spec.h == 0:
        return _empty_matrix(domain)
    # components preserve q-parity and raise q-degree by at most 2
    cod = sector_basis(SectorSpec(n, spec.h - 1, spec.qbound + 2,
                                  spec.parity))
    entries = {}
    for block, l in enumerate(range(1, 2 * n + 1)):
        m = operator_matrix(ops.ts_component(l, n), domain, cod)
        offset = block * len(cod)
        for (r, c), coeff in m.entries.items():
            entries[(offset + r, c)] = coeff
    return SparseMatrix(2 * n * len(cod), len(domain), entries)


@dataclass(frozen=True)
class MonogenicSpace:
    """Homogeneity-h solutions of the Dirac operator in a sector."""
    spec: SectorSpec
    basis: SubspaceBasis


@dataclass(frozen=True)
class TwistorKernelSpace:
    """Joint kernel of all 2n twistor components in a sector."""
    spec: SectorSpec
    basis: SubspaceBasis


@lru_cache(maxsize=None)
def monogenics(spec: SectorSpec) -> MonogenicSpace:
    domain = sector_basis(spec)
    return MonogenicSpace(spec, kernel_basis(ds_matrix(spec), domain))


@lru_cache(maxsize=None)
def twistor_kernel(spec: SectorSpec) -> TwistorKernelSpace:
    domain = sector_basis(spec)
    return TwistorKernelSpace(spec, kernel_basis(twistor_matrix(spec),
                                                 domain))


# -- reports ---------------------------------------------------------------

@dataclass
class VerificationReport:
    claim: str
    params: dict
    expected_dim: Optional[int] = None
    observed_dim: Optional[int] = None
    equal_as_subspaces: Optional[bool] = None
    witnesses: List[str] = field(default_factory=list)
    passed: bool = True
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "claim": self.claim,
            "params": dict(self.params),
            "expectedDim": self.expected_dim,
            "observedDim": self.observed_dim,
            "equalAsSubspaces": self.equal_as_subspaces,
            "witnesses": list(self.witnesses),
            "pass": self.passed,
        }
        out.update(self.extra)
        return out


def _params(spec: SectorSpec):
    return {"n": spec.n, "h": spec.h, "Q": spec.qbound,
            "parity": spec.parity}


# -- operator identity suites ---------------------------------------------

def verify_sl2(n, h_max, qbound) -> VerificationReport:
    """The three sl(2) commutation relations on every basis monomial."""
    ds, xs, es = ops.ds_operator(n), ops.xs_operator(n), ops.es_operator(n)
    en = es + ops.identity_operator(n).scale(n)
    relations = [
        ("[Es+n,Ds]+Ds", ops.commutator(en, ds) + ds),
        ("[Es+n,Xs]-Xs", ops.commutator(en, xs) - xs),
        ("[Xs,Ds]-i(Es+n)", ops.commutator(xs, ds) - en.scale(I)),
    ]
    report = VerificationReport(
        "sl2-relations",
        {"n": n, "h": h_max, "Q": qbound, "parity": "both"})
    checked = 0
    for h in range(h_max + 1):
        basis = sector_basis(SectorSpec(n, h, qbound, "both"))
        for mono in basis.monomials:
            s = SpinorPoly.from_monomial(mono)
            for name, op in relations:
                if not op.apply(s).is_zero():
                    report.passed = False
                    report.witnesses.append("%s on %s" % (name, mono.text()))
            checked += 1
    report.observed_dim = checked
    report.expected_dim = checked
    return report


def verify_clifford(n, trials=50, seed=2024) -> VerificationReport:
    """[e_a, e_b] = -i omega(e_a, e_b) on random spinors, all pairs."""
    rng = random.Random(seed)

    def random_spinor():
        s = SpinorPoly.zero(n)
        for _ in range(4):
            xe = tuple(rng.randint(0, 2) for _ in range(2 * n))
            qe = tuple(rng.randint(0, 2) for _ in range(n))
            coeff = GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5))
            s = s + SpinorPoly.from_monomial(Monomial(xe, qe), coeff)
        return s

    report = VerificationReport(
        "clifford-relation", {"n": n, "h": None, "Q": None, "parity": "both"})
    checked = 0
    for a in range(1, 2 * n + 1):
        for b in range(1, 2 * n + 1):
            omega = 0
            if b == a + n:
                omega = 1
            elif a == b + n:
                omega = -1
            comm = ops.commutator(ops.clifford_operator(a, n),
                                  ops.clifford_operator(b, n))
            for _ in range(trials):
                s = random_spinor()
                if comm.apply(s) != s.scale(GaussianRational(0, -omega)):
                    report.passed = False
                    report.witnesses.append(
                        "pair (%d,%d) on %s" % (a, b, s.text()))
                checked += 1
    report.observed_dim = checked
    report.expected_dim = checked
    return report


def verify_intertwining(n, h_max, qbound) -> VerificationReport:
    """[mp generator, Ds] = [mp generator, Xs] = 0 on full sector bases."""
    report = VerificationReport(
        "mp-intertwining",
        {"n": n, "h": h_max, "Q": qbound, "parity": "both"})
    commutators = []
    for kind, j, k, gen in ops.mp_generators(n):
        for opname, op in (("Ds", ops.ds_operator(n)),
                           ("Xs", ops.xs_operator(n))):
            commutators.append(
                ("%s(%d,%d) with %s" % (kind, j, k, opname),
                 ops.commutator(gen, op)))
    checked = 0
    for h in range(h_max + 1):
        basis = sector_basis(SectorSpec(n, h, qbound, "both"))
        for mono in basis.monomials:
            s = SpinorPoly.from_monomial(mono)
            for name, comm in commutators:
                if not comm.apply(s).is_zero():
                    report.passed = False
                    report.witnesses.append("%s on %s" % (name, mono.text()))
            checked += 1
    report.observed_dim = checked
    report.expected_dim = checked
    return report


# -- lemma and theorem suites ---------------------------------------------

def verify_prolongation(spec: SectorSpec) -> VerificationReport:
    """Every twistor-kernel vector is killed by the squared Dirac matrix."""
    kernel = twistor_kernel(spec)
    dsq = ds_squared_matrix(spec)
    report = VerificationReport("twistor-kernel-in-ker-Ds2", _params(spec))
    report.observed_dim = kernel.basis.dim
    report.expected_dim = kernel.basis.dim
    for vec, poly in zip(kernel.basis.vectors, kernel.basis.polys()):
        if dsq.apply_raw(vec):
            report.passed = False
            report.witnesses.append(poly.text())
    return report


def verify_constant_lemma(spec: SectorSpec) -> VerificationReport:
    """Ker(Ts) meets Ker(Ds) only in x-constants.

    For h >= 1 the intersection is {0}; at h = 0 it is the full sector.
    """
    kernel = twistor_kernel(spec)
    meet = kernel.basis.restricted_kernel(ds_matrix(spec))
    report = VerificationReport("constant-monogenics", _params(spec))
    report.expected_dim = len(sector_basis(spec)) if spec.h == 0 else 0
    report.observed_dim = meet.dim
    report.passed = report.observed_dim == report.expected_dim
    if not report.passed:
        report.witnesses = [p.text() for p in meet.polys()[:3]]
    return report


def verify_tower_lemma(n, h, qbound, parity="both") -> VerificationReport:
    """X_s of a monogenic solves the twistor equation iff n = 1 or h = 0.

    Computed as the kernel of Ts o Xs restricted to the monogenic space:
    it must be the whole space when the inclusion is claimed, {0} when it
    is denied.
    """
    spec = SectorSpec(n, h, qbound, parity)
    mono = monogenics(spec)
    domain = sector_basis(spec)
    # Xs raises q-degree by <= 1 and flips parity; each Ts component then
    # raises by <= 2 and preserves parity
    cod = sector_basis(SectorSpec(n, h, qbound + 3, _flip(parity)))
    kernel = mono.basis
    for l in range(1, 2 * n + 1):
        op = ops.compose(ops.ts_component(l, n), ops.xs_operator(n))
        matrix = operator_matrix(op, domain, cod)
        kernel = kernel.restricted_kernel(matrix)
        if kernel.dim == 0:
            break
    included = n == 1 or h == 0
    report = VerificationReport("tower-lemma", _params(spec))
    report.expected_dim = mono.basis.dim if included else 0
    report.observed_dim = kernel.dim
    report.passed = report.observed_dim == report.expected_dim
    if not report.passed:
        bad = kernel if not included else None
        if bad is not None:
            report.witnesses = [p.text() for p in bad.polys()[:3]]
    return report


def verify_composition_series(n, h, qbound, parity="both") -> VerificationReport:
    """Ker(Ds^2) = Ker(Ds) + Xs(Ker Ds), directly, on the faithful part.

    Works in the ambient sector (h, Q+1): the monogenic summand is exact
    there, the raised summand comes from monogenics at (h-1, Q), and
    completeness is asserted for vectors of q-degree <= Q-1, where the
    split provably stays inside the computed truncation.
    """
    if h < 1:
        raise ValueError("composition series needs h >= 1")
    spec = SectorSpec(n, h, qbound + 1, parity)
    ambient = sector_basis(spec)
    s1 = monogenics(spec).basis
    below = SectorSpec(n, h - 1, qbound, _flip(parity))
    s2 = monogenics(below).basis.image_under(xs_matrix(below), ambient)
    report = VerificationReport("composition-series",
                                {"n": n, "h": h, "Q": qbound,
                                 "parity": parity})
    # Xs is injective on monogenics
    if s2.dim != monogenics(below).basis.dim:
        report.passed = False
        report.witnesses.append("Xs not injective on monogenics(h=%d)"
                                % (h - 1))
    total = s1.sum(s2)
    if total.dim != s1.dim + s2.dim:
        report.passed = False
        report.witnesses.append("summands intersect nontrivially")
    ker2 = kernel_basis(ds_squared_matrix(spec), ambient)
    if not ker2.contains(total):
        report.passed = False
        report.witnesses.append("sum not inside Ker(Ds^2)")
    faithful = ker2.intersect_coordinates(
        lambda m: m.qdeg() <= qbound - 1)
    if not total.contains(faithful):
        report.passed = False
        report.witnesses.append("faithful sub-sector not filled")
    report.observed_dim = total.dim
    report.expected_dim = s1.dim + s2.dim
    report.equal_as_subspaces = report.passed
    return report


def _flip(parity):
    return {"even": "odd", "odd": "even", "both": "both"}[parity]


def triangle_summands(n, h, qbound, parity="both"):
    """The spaces Xs^j M_{h-j} inside the ambient sector (h, Q+2h).

    Summand j is generated by monogenics at (h-j, Q+h).  The margin 2h
    above the faithful cut Q-h covers the recursive split
    v -> (v - Xs^h m_h, m_h): each component m_j is produced by
    Xs^k Ds^k corrections of v, which raise the q-degree by at most 2h,
    so for inputs of q-degree <= Q-h every m_j stays below the bound Q+h
    and the towers fill the faithful sub-sector exactly.
    """
    if qbound < h:
        raise ValueError("triangle needs Q >= h")
    ambient_spec = SectorSpec(n, h, qbound + 2 * h, parity)
    ambient = sector_basis(ambient_spec)
    summands = []
    for j in range(h + 1):
        par = parity if j % 2 == 0 else _flip(parity)
        spec = SectorSpec(n, h - j, qbound + h, par)
        space = monogenics(spec).basis
        injective = True
        cur = spec
        for _ in range(j):
            before = space.dim
            target_spec = SectorSpec(n, cur.h + 1, cur.qbound + 1,
                                     _flip(cur.parity))
            target = sector_basis(target_spec)
            matrix = operator_matrix(ops.xs_operator(n),
                                     sector_basis(cur), target)
            space = space.image_under(matrix, target)
            injective = injective and space.dim == before
            cur = target_spec
        if space.ambient.spec != ambient_spec:
            space = space.embed(ambient)
        summands.append((j, space, injective))
    return ambient, summands


def verify_triangle(n, h, qbound, parity="both") -> VerificationReport:
    """Direct-sum triangle decomposition at homogeneity h."""
    ambient, summands = triangle_summands(n, h, qbound, parity)
    report = VerificationReport("howe-triangle",
                                {"n": n, "h": h, "Q": qbound,
                                 "parity": parity})
    total = None
    dim_sum = 0
    for j, space, injective in summands:
        if not injective:
            report.passed = False
            report.witnesses.append("Xs rank drop building summand j=%d" % j)
        dim_sum += space.dim
        total = space if total is None else total.sum(space)
    for a in range(len(summands)):
        for b in range(a + 1, len(summands)):
            meet = summands[a][1].intersect(summands[b][1])
            if meet.dim != 0:
                report.passed = False
                report.witnesses.append(
                    "summands j=%d and j=%d intersect" % (a, b))
    if total.dim != dim_sum:
        report.passed = False
        report.witnesses.append("sum of summands is not direct")
    faithful = SubspaceBasis.full(ambient).intersect_coordinates(
        lambda m: m.qdeg() <= qbound - h)
    if not total.contains(faithful):
        report.passed = False
        report.witnesses.append("faithful sub-sector not filled")
    report.observed_dim = total.dim
    report.expected_dim = dim_sum
    report.equal_as_subspaces = report.passed
    # dims of the towers Xs^j M_{h-j}, indexed by the raising power j
    report.extra["summandDims"] = [space.dim for _, space, _ in summands]
    return report


def verify_theorem(n, h, qbound, parity="both") -> VerificationReport:
    """The main dichotomy for the twistor kernel at homogeneity h.

    n > 1: the kernel is the full sector at h = 0, equals Xs(M_0) at
    h = 1 and vanishes for h >= 2.  n = 1: the kernel equals
    Xs(M_{h-1}) for every h >= 1.
    """
    spec = SectorSpec(n, h, qbound, parity)
    kernel = twistor_kernel(spec)
    report = VerificationReport("twistor-theorem", _params(spec))
    report.observed_dim = kernel.basis.dim
    if h == 0:
        report.expected_dim = len(sector_basis(spec))
        report.equal_as_subspaces = \
            kernel.basis == SubspaceBasis.full(sector_basis(spec))
        report.passed = report.equal_as_subspaces and \
            report.observed_dim == report.expected_dim
    elif n == 1 or h == 1:
        if qbound == 0:
            # Xs raises q-degree, so the expected summand is empty
            report.expected_dim = 0
            report.passed = kernel.basis.dim == 0
            report.equal_as_subspaces = report.passed
            return report
        below = SectorSpec(n, h - 1, qbound - 1, _flip(parity))
        image = monogenics(below).basis.image_under(
            xs_matrix(below), sector_basis(spec))
        report.expected_dim = image.dim
        report.equal_as_subspaces = kernel.basis == image
        report.passed = report.equal_as_subspaces
        if not report.passed:
            report.witnesses = [p.text() for p in kernel.basis.polys()[:2]]
    else:
        report.expected_dim = 0
        report.passed = kernel.basis.dim == 0
        report.equal_as_subspaces = report.passed
        if not report.passed:
            report.witnesses = [p.text() for p in kernel.basis.polys()[:3]]
    return report


# -- a worked n=2 regression example --------------------------------------

def example_spinor() -> SpinorPoly:
    """The homogeneity-2 Dirac solution -i x1 x2 + x1 x4 + x2 x3 + i x3 x4."""
    x = lambda m: SpinorPoly.x(m, 2)
    return (x(1) * x(2)).scale(-I) + x(1) * x(4) + x(2) * x(3) \
        + (x(3) * x(4)).scale(I)


def verify_example() -> VerificationReport:
    """Regression on the rank-2 example: Ds kills it, Ts Xs does not."""
    s = example_spinor()
    report = VerificationReport(
        "rank2-example", {"n": 2, "h": 2, "Q": None, "parity": "even"})
    if not ops.apply_ds(s).is_zero():
        report.passed = False
        report.witnesses.append("Ds(s) = %s" % ops.apply_ds(s).text())
    comps = ops.apply_ts(ops.apply_xs(s))
    x = lambda m: SpinorPoly.x(m, 2)
    q = lambda j: SpinorPoly.q(j, 2)
    want1 = q(2) * (x(2) + x(4).scale(I)) * (x(2) + x(4).scale(I))
    want2 = q(1) * (x(1) + x(3).scale(I)) * (x(1) + x(3).scale(I))
    if comps[0] != want1:
        report.passed = False
        report.witnesses.append("component 1 = %s" % comps[0].text())
    if comps[1] != want2:
        report.passed = False
        report.witnesses.append("component 2 = %s" % comps[1].text())
    report.observed_dim = 2
    report.expected_dim = 2
    return report
