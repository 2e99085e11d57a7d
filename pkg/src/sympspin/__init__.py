"""Exact-arithmetic engine for polynomial symplectic spinors on R^{2n}.

Spinors are sparse polynomials in x_1..x_{2n}, q_1..q_n over Q(i); the
Gaussian weight exp(-|q|^2/2) is implicit everywhere.  The package
implements the symplectic Dirac, raising, Euler and twistor operators and
the infinitesimal metaplectic action, assembles their exact matrices on
finite graded sectors, and verifies the kernel structure of the twistor
operator at those truncations.
"""

from .rational import GaussianRational, I, ONE, ZERO
from .poly import Monomial, SpinorPoly, RankMismatchError
from .operators import (
    LinearOperator,
    apply_clifford,
    apply_ds,
    apply_es,
    apply_ts,
    apply_xs,
    clifford_operator,
    commutator,
    compose,
    ds_operator,
    es_operator,
    identity_operator,
    mp_generator,
    mp_generators,
    ts_component,
    xs_operator,
)
from .sectors import GradedBasis, SectorSpec, enumerate_basis
from .linalg import (
    MatrixAssemblyError,
    SparseMatrix,
    SubspaceBasis,
    joint_kernel,
    kernel_basis,
    operator_matrix,
)
from .parsing import ParseError, parse_operator, parse_spinor
from .backend import BACKEND_NAME, available_backends

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
