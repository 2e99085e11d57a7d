"""Compare the pure-Python and compiled elimination backends.

Builds the Dirac matrix of a representative sector and times a full
reduced-row-echelon pass through each available backend, checking that
the outputs are identical.

Usage: python3 benchmarks/bench_backends.py [--n N] [--h H] [--Q Q]
"""

import argparse
import time

from sympspin import SectorSpec
from sympspin.analysis import ds_matrix
from sympspin.backend import available_backends
from sympspin import _kernels_py

BACKENDS = {"python": _kernels_py}
try:
    from sympspin import _kernels_cy
    BACKENDS["cython"] = _kernels_cy
except ImportError:
    pass


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--h", type=int, default=4)
    parser.add_argument("--Q", type=int, default=5)
    parser.add_argument("--parity", default="odd")
    args = parser.parse_args()

    spec = SectorSpec(args.n, args.h, args.Q, args.parity)
    matrix = ds_matrix(spec)
    print("Dirac matrix on %s: %d x %d, %d entries"
          % (spec, matrix.rows, matrix.cols, len(matrix.entries)))
    print("available backends: %s" % ", ".join(available_backends()))

    results = {}
    for name, mod in BACKENDS.items():
        rows = [dict(r) for r in matrix.rows_raw()]
        t0 = time.perf_counter()
        results[name] = mod.rref(rows, matrix.cols)
        dt = time.perf_counter() - t0
        print("%-7s rref: %.3fs (rank %d)" % (name, dt,
                                              len(results[name])))

    if len(results) == 2:
        assert results["python"] == results["cython"], \
            "backends disagree"
        print("backends produce identical echelon forms")


if __name__ == "__main__":
    main()
