"""The operators of the engine as exact maps on spinor polynomials.

Everything is built from four primitives acting on the polynomial part of
a spinor (the Gaussian weight is implicit):

* ``('x', m)``  -- multiplication by x_{m+1}
* ``('q', j)``  -- multiplication by q_{j+1}
* ``('dx', m)`` -- d/dx_{m+1}
* ``('dq', j)`` -- the twisted q-derivative d/dq_{j+1} - q_{j+1},
  i.e. the plain derivative acting through the implicit Gaussian

Clifford multiplication by e_l is i q_l for l <= n and the twisted
derivative in q_{l-n} for l > n, which realises v.w - w.v = -i omega(v,w)
with omega(e_j, e_{n+j}) = 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

from .rational import GaussianRational, ONE, I
from .poly import Monomial, SpinorPoly, RankMismatchError

Primitive = Tuple[str, int]


def _apply_primitive(prim, terms, n):
    """Apply one primitive to a term map {Monomial: coeff}."""
    kind, idx = prim
    out = {}
    if kind == "x":
        for mono, coeff in terms.items():
            xexp = list(mono.xexp)
            xexp[idx] += 1
            key = Monomial(tuple(xexp), mono.qexp)
            _accumulate(out, key, coeff)
    elif kind == "q":
        for mono, coeff in terms.items():
            qexp = list(mono.qexp)
            qexp[idx] += 1
            key = Monomial(mono.xexp, tuple(qexp))
            _accumulate(out, key, coeff)
    elif kind == "dx":
        for mono, coeff in terms.items():
            e = mono.xexp[idx]
            if e:
                xexp = list(mono.xexp)
                xexp[idx] = e - 1
                key = Monomial(tuple(xexp), mono.qexp)
                _accumulate(out, key, coeff * e)
    elif kind == "dq":
        for mono, coeff in terms.items():
            e = mono.qexp[idx]
            qexp = list(mono.qexp)
            if e:
                qexp[idx] = e - 1
                _accumulate(out, Monomial(mono.xexp, tuple(qexp)), coeff * e)
            qexp = list(mono.qexp)
            qexp[idx] = e + 1
            _accumulate(out, Monomial(mono.xexp, tuple(qexp)), -coeff)
    else:
        raise ValueError("unknown primitive kind %r" % kind)
    return out


def _accumulate(terms, mono, coeff):
    new = terms.get(mono)
    new = coeff if new is None else new + coeff
    if new:
        terms[mono] = new
    else:
        terms.pop(mono, None)


class LinearOperator:
    """Formal finite sum of coefficient-weighted words in the primitives.

    A word (P1, P2, ..., Pk) acts right-to-left: Pk is applied first.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=()):
        self.rank = rank
        checked = []
        for coeff, word in terms:
            if not isinstance(coeff, GaussianRational):
                coeff = GaussianRational(coeff)
            if not coeff:
                continue
            for kind, idx in word:
                bound = 2 * rank if kind in ("x", "dx") else rank
                if not 0 <= idx < bound:
                    raise IndexError("primitive %s index %d out of range for"
                                     " rank %d" % (kind, idx + 1, rank))
            checked.append((coeff, tuple(word)))
        self.terms = tuple(checked)

    def apply(self, s: SpinorPoly) -> SpinorPoly:
        if s.rank != self.rank:
            raise RankMismatchError("operator rank %d vs spinor rank %d"
                                    % (self.rank, s.rank))
        total = {}
        for coeff, word in self.terms:
            terms = s.terms
            for prim in reversed(word):
                if not terms:
                    break
                terms = _apply_primitive(prim, terms, self.rank)
            for mono, c in terms.items():
                _accumulate(total, mono, c * coeff)
        out = SpinorPoly(self.rank)
        out.terms = total
        return out

    __call__ = apply

    # -- algebra ----------------------------------------------------------

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatchError("operator rank mismatch: %d vs %d"
                                    % (self.rank, other.rank))

    def __add__(self, other):
        self._check_rank(other)
        return LinearOperator(self.rank, self.terms + other.terms)

    def __sub__(self, other):
        return self + other.scale(GaussianRational(-1))

    def scale(self, coeff):
        if not isinstance(coeff, GaussianRational):
            coeff = GaussianRational(coeff)
        return LinearOperator(self.rank,
                              [(c * coeff, w) for c, w in self.terms])


def compose(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    """The operator a after b, by formal word concatenation."""
    a._check_rank(b)
    terms = [(ca * cb, wa + wb) for ca, wa in a.terms for cb, wb in b.terms]
    return LinearOperator(a.rank, terms)


def commutator(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return compose(a, b) - compose(b, a)


def identity_operator(n):
    return LinearOperator(n, [(ONE, ())])


# -- the named operators --------------------------------------------------

@lru_cache(maxsize=None)
def clifford_operator(l, n):
    """Symplectic Clifford multiplication by e_l, 1 <= l <= 2n."""
    if not 1 <= l <= 2 * n:
        raise IndexError("clifford index %d out of range for rank %d" % (l, n))
    if l <= n:
        return LinearOperator(n, [(I, (("q", l - 1),))])
    return LinearOperator(n, [(ONE, (("dq", l - n - 1),))])


@lru_cache(maxsize=None)
def ds_operator(n):
    """The symplectic Dirac operator: sum_j (i q_j d_{x_{n+j}} - d_{x_j} dq_j)."""
    terms = []
    for j in range(n):
        terms.append((I, (("q", j), ("dx", n + j))))
        terms.append((GaussianRational(-1), (("dx", j), ("dq", j))))
    return LinearOperator(n, terms)


@lru_cache(maxsize=None)
def xs_operator(n):
    """The raising operator: sum_j (x_{n+j} dq_j + i x_j q_j)."""
    terms = []
    for j in range(n):
        terms.append((ONE, (("x", n + j), ("dq", j))))
        terms.append((I, (("x", j), ("q", j))))
    return LinearOperator(n, terms)


@lru_cache(maxsize=None)
def es_operator(n):
    """The Euler operator in the base variables: sum_m x_m d_{x_m}."""
    return LinearOperator(
        n, [(ONE, (("x", m), ("dx", m))) for m in range(2 * n)])


@lru_cache(maxsize=None)
def ts_component(l, n):
    """Component l of the symplectic twistor operator: d_{x_l} - (i/n) e_l Ds."""
    if not 1 <= l <= 2 * n:
        raise IndexError("twistor component %d out of range for rank %d" % (l, n))
    dx = LinearOperator(n, [(ONE, (("dx", l - 1),))])
    factor = GaussianRational(0, 1) / GaussianRational(n)
    return dx - compose(clifford_operator(l, n), ds_operator(n)).scale(factor)


MP_KINDS = ("X", "Y", "Z")


@lru_cache(maxsize=None)
def mp_generator(kind, j, k, n):
    """Infinitesimal metaplectic action of the generator kind_{jk}.

    Built from the defining sp(2n) matrix of the generator (base vector
    field part) and the corresponding homogeneity-two Clifford element
    (spinor part).  1 <= j, k <= n.
    """
    if kind not in MP_KINDS:
        raise ValueError("unknown generator kind %r" % (kind,))
    if not (1 <= j <= n and 1 <= k <= n):
        raise IndexError("generator indices (%d,%d) out of range for rank %d"
                         % (j, k, n))
    half = GaussianRational(1) / GaussianRational(2)
    cl = lambda l: clifford_operator(l, n)
    word = lambda *prims: LinearOperator(n, [(ONE, prims)])
    if kind == "X":
        # matrix E_{j,k} - E_{n+k,n+j} (the sp-consistent completion of the
        # E_{j,k} block); Clifford element (e_j e_{n+k} + e_{n+k} e_j)/2
        base = word(("x", k - 1), ("dx", j - 1)) - \
            word(("x", n + j - 1), ("dx", n + k - 1))
        spinor = (compose(cl(j), cl(n + k)) +
                  compose(cl(n + k), cl(j))).scale(-I * half)
    elif kind == "Y":
        # matrix E_{j,n+k} + E_{k,n+j}; Clifford element -e_j e_k
        base = word(("x", n + k - 1), ("dx", j - 1)) + \
            word(("x", n + j - 1), ("dx", k - 1))
        spinor = compose(cl(j), cl(k)).scale(I)
    else:
        # matrix E_{n+j,k} + E_{n+k,j}; Clifford element e_{n+j} e_{n+k}
        base = word(("x", k - 1), ("dx", n + j - 1)) + \
            word(("x", j - 1), ("dx", n + k - 1))
        spinor = compose(cl(n + j), cl(n + k)).scale(-I)
    return spinor - base


def mp_generators(n):
    """All independent metaplectic generators for rank n."""
    gens = []
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            gens.append(("X", j, k, mp_generator("X", j, k, n)))
            if j <= k:
                gens.append(("Y", j, k, mp_generator("Y", j, k, n)))
                gens.append(("Z", j, k, mp_generator("Z", j, k, n)))
    return gens


# -- convenience application wrappers ------------------------------------

def apply_clifford(l, s):
    return clifford_operator(l, s.rank).apply(s)


def apply_ds(s):
    return ds_operator(s.rank).apply(s)


def apply_xs(s):
    return xs_operator(s.rank).apply(s)


def apply_es(s):
    return es_operator(s.rank).apply(s)


def apply_ts(s):
    """All 2n twistor components of s, against the coframe eps^1..eps^2n."""
    n = s.rank
    return [ts_component(l, n).apply(s) for l in range(1, 2 * n + 1)]
