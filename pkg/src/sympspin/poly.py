"""Sparse polynomials in x_1..x_{2n}, q_1..q_n over Q(i).

A :class:`SpinorPoly` stores only the polynomial part of a symplectic
spinor; the Gaussian weight exp(-|q|^2/2) is implicit everywhere and never
expanded.  Terms are kept in canonical sparse form: no zero coefficients
are ever stored.
"""

from __future__ import annotations

from typing import Dict, NamedTuple, Tuple

from .rational import GaussianRational, ZERO, ONE, format_coefficient


class Monomial(NamedTuple):
    """x^a q^b, as exponent tuples of lengths 2n and n."""

    xexp: Tuple[int, ...]
    qexp: Tuple[int, ...]

    def xdeg(self):
        return sum(self.xexp)

    def qdeg(self):
        return sum(self.qexp)

    def sort_key(self):
        # graded lexicographic: grade by (x-degree, q-degree), then
        # lexicographic on the x block before the q block, lower index first
        return (sum(self.xexp), sum(self.qexp), self.xexp, self.qexp)

    def text(self):
        parts = []
        for i, e in enumerate(self.xexp):
            if e == 1:
                parts.append("x%d" % (i + 1))
            elif e > 1:
                parts.append("x%d^%d" % (i + 1, e))
        for j, e in enumerate(self.qexp):
            if e == 1:
                parts.append("q%d" % (j + 1))
            elif e > 1:
                parts.append("q%d^%d" % (j + 1, e))
        return "*".join(parts) if parts else "1"


def unit_monomial(n):
    return Monomial((0,) * (2 * n), (0,) * n)


class RankMismatchError(ValueError):
    pass


class SpinorPoly:
    """Finite map Monomial -> GaussianRational over a fixed rank n."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Dict[Monomial, GaussianRational] = None):
        self.rank = rank
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, GaussianRational):
                    coeff = GaussianRational(coeff)
                if coeff:
                    if len(mono.xexp) != 2 * rank or len(mono.qexp) != rank:
                        raise ValueError("monomial %r has wrong arity for rank %d"
                                         % (mono, rank))
                    self.terms[mono] = coeff

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, rank):
        return cls(rank)

    @classmethod
    def constant(cls, rank, coeff):
        return cls(rank, {unit_monomial(rank): coeff})

    @classmethod
    def one(cls, rank):
        return cls.constant(rank, ONE)

    @classmethod
    def x(cls, m, rank):
        """The variable x_m, 1 <= m <= 2n."""
        if not 1 <= m <= 2 * rank:
            raise IndexError("x index %d out of range for rank %d" % (m, rank))
        xexp = [0] * (2 * rank)
        xexp[m - 1] = 1
        return cls(rank, {Monomial(tuple(xexp), (0,) * rank): ONE})

    @classmethod
    def q(cls, j, rank):
        """The variable q_j, 1 <= j <= n."""
        if not 1 <= j <= rank:
            raise IndexError("q index %d out of range for rank %d" % (j, rank))
        qexp = [0] * rank
        qexp[j - 1] = 1
        return cls(rank, {Monomial((0,) * (2 * rank), tuple(qexp)): ONE})

    @classmethod
    def from_monomial(cls, mono, coeff=ONE):
        rank = len(mono.qexp)
        return cls(rank, {mono: coeff})

    # -- arithmetic -------------------------------------------------------

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatchError("rank mismatch: %d vs %d"
                                    % (self.rank, other.rank))

    def __add__(self, other):
        self._check_rank(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = terms.get(mono, ZERO) + coeff
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        out = SpinorPoly(self.rank)
        out.terms = terms
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = SpinorPoly(self.rank)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def scale(self, coeff):
        if not isinstance(coeff, GaussianRational):
            coeff = GaussianRational(coeff)
        if not coeff:
            return SpinorPoly.zero(self.rank)
        out = SpinorPoly(self.rank)
        out.terms = {m: c * coeff for m, c in self.terms.items()}
        return out

    def combine(self, other, coeff):
        """self + coeff * other, exactly."""
        return self + other.scale(coeff)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return self.scale(other)
        self._check_rank(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = Monomial(
                    tuple(a + b for a, b in zip(m1.xexp, m2.xexp)),
                    tuple(a + b for a, b in zip(m1.qexp, m2.qexp)),
                )
                new = terms.get(mono, ZERO) + c1 * c2
                if new:
                    terms[mono] = new
                else:
                    terms.pop(mono, None)
        out = SpinorPoly(self.rank)
        out.terms = terms
        return out

    __rmul__ = scale

    # -- structure --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SpinorPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def xdeg(self):
        """Maximal total x-degree, or -1 for the zero polynomial."""
        return max((m.xdeg() for m in self.terms), default=-1)

    def qdeg(self):
        """Maximal total q-degree, or -1 for the zero polynomial."""
        return max((m.qdeg() for m in self.terms), default=-1)

    def text(self):
        """Canonical text form, highest monomial first."""
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=Monomial.sort_key, reverse=True):
            coeff = self.terms[mono]
            ctext = format_coefficient(coeff)
            mtext = mono.text()
            if mtext == "1":
                body = ctext
            elif ctext == "1":
                body = mtext
            elif ctext == "-1":
                body = "-" + mtext
            else:
                body = ctext + "*" + mtext
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append("- " + body[1:])
            else:
                parts.append("+ " + body)
        return " ".join(parts)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return "SpinorPoly(n=%d, %s)" % (self.rank, self.text())
