"""Finite graded sectors of the space of polynomial symplectic spinors.

A sector fixes the rank n, an exact x-homogeneity h, a bound Q on the
total q-degree and a q-parity, and is spanned by finitely many monomials
listed in the global monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .poly import Monomial

PARITIES = ("even", "odd", "both")


@dataclass(frozen=True)
class SectorSpec:
    n: int
    h: int
    qbound: int
    parity: str = "both"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be >= 1")
        if self.h < 0 or self.qbound < 0:
            raise ValueError("degrees must be >= 0")
        if self.parity not in PARITIES:
            raise ValueError("parity must be one of %s" % (PARITIES,))

    def dimension(self):
        """Closed-form count: stars-and-bars times the q-monomial count."""
        nx = comb(self.h + 2 * self.n - 1, 2 * self.n - 1)
        nq = sum(comb(d + self.n - 1, self.n - 1)
                 for d in range(self.qbound + 1)
                 if self.parity == "both" or d % 2 == _PARITY[self.parity])
        return nx * nq

    def flip_parity(self):
        flip = {"even": "odd", "odd": "even", "both": "both"}
        return SectorSpec(self.n, self.h, self.qbound, flip[self.parity])


_PARITY = {"even": 0, "odd": 1}


def _exponents(nvars, total):
    """All exponent tuples of the given length summing to total, lex order."""
    if nvars == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _exponents(nvars - 1, total - first):
            yield (first,) + rest


class GradedBasis:
    """Ordered monomial basis of a sector."""

    __slots__ = ("spec", "monomials", "index")

    def __init__(self, spec: SectorSpec, monomials):
        self.spec = spec
        self.monomials = tuple(monomials)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def qdeg_of(self, i):
        return self.monomials[i].qdeg()

    def contains(self, mono):
        return mono in self.index


def enumerate_basis(spec: SectorSpec) -> GradedBasis:
    """Complete, duplicate-free, ordered enumeration of a sector."""
    n = spec.n
    xmonos = list(_exponents(2 * n, spec.h))
    qmonos = []
    for d in range(spec.qbound + 1):
        if spec.parity != "both" and d % 2 != _PARITY[spec.parity]:
            continue
        qmonos.extend(_exponents(n, d))
    monos = [Monomial(xe, qe) for xe in xmonos for qe in qmonos]
    monos.sort(key=Monomial.sort_key)
    basis = GradedBasis(spec, monos)
    assert len(basis) == spec.dimension()
    return basis
