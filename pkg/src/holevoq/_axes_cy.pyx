# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled axis-batch divergence kernel; mirrors _axes_py.evaluate_axes.

One pass per axis: project the member Bloch vectors onto the axis, form the
two-outcome joint table and the product of its marginals, accumulate the
requested divergence over the 2n entries. Logs base 2.
"""

from libc.math cimport INFINITY, fabs, fmin, log2, sqrt

import numpy as np

CODE_KOLMOGOROV = 0
CODE_PROB_ERROR = 1
CODE_BHATTACHARYYA = 2
CODE_RELATIVE_ENTROPY = 3
CODE_QJSD = 4


cdef inline double _xlog2(double x) nogil:
    if x > 0.0:
        return x * log2(x)
    return 0.0


def evaluate_axes(int code, const double[::1] weights, const double[:, ::1] bloch,
                  const double[:, ::1] axes):
    """Divergence of the measurement joint from independence, per axis.

    weights: (n,), bloch: (n, 3), axes: (m, 3) unit rows. Returns (m,).
    """
    cdef Py_ssize_t n = weights.shape[0]
    cdef Py_ssize_t m = axes.shape[0]
    if bloch.shape[0] != n or bloch.shape[1] != 3 or axes.shape[1] != 3:
        raise ValueError("shape mismatch between weights, bloch, axes")
    if code < 0 or code > 4:
        raise ValueError(f"unknown notion code {code!r}")
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i, k
    cdef double zx, zy, zz, a, avg, w
    cdef double pe, qe, acc, acc_p, acc_q, acc_m
    cdef bint bad

    with nogil:
        for k in range(m):
            zx = axes[k, 0]
            zy = axes[k, 1]
            zz = axes[k, 2]
            avg = 0.0
            for i in range(n):
                avg += weights[i] * (bloch[i, 0] * zx + bloch[i, 1] * zy + bloch[i, 2] * zz)
            acc = 0.0
            acc_p = 0.0
            acc_q = 0.0
            acc_m = 0.0
            bad = False
            for i in range(n):
                w = weights[i]
                a = bloch[i, 0] * zx + bloch[i, 1] * zy + bloch[i, 2] * zz
                # outcome 0 then outcome 1 of the same member
                pe = 0.5 * w * (1.0 + a)
                qe = 0.5 * w * (1.0 + avg)
                if pe < 0.0:
                    pe = 0.0
                if qe < 0.0:
                    qe = 0.0
                if code == 0:
                    acc += fabs(pe - qe)
                elif code == 1:
                    acc += fmin(pe, qe)
                elif code == 2:
                    acc += sqrt(pe * qe)
                elif code == 3:
                    if pe > 0.0:
                        if qe <= 0.0:
                            bad = True
                        else:
                            acc += pe * (log2(pe) - log2(qe))
                else:
                    acc_m += _xlog2(0.5 * (pe + qe))
                    acc_p += _xlog2(pe)
                    acc_q += _xlog2(qe)
                pe = 0.5 * w * (1.0 - a)
                qe = 0.5 * w * (1.0 - avg)
                if pe < 0.0:
                    pe = 0.0
                if qe < 0.0:
                    qe = 0.0
                if code == 0:
                    acc += fabs(pe - qe)
                elif code == 1:
                    acc += fmin(pe, qe)
                elif code == 2:
                    acc += sqrt(pe * qe)
                elif code == 3:
                    if pe > 0.0:
                        if qe <= 0.0:
                            bad = True
                        else:
                            acc += pe * (log2(pe) - log2(qe))
                else:
                    acc_m += _xlog2(0.5 * (pe + qe))
                    acc_p += _xlog2(pe)
                    acc_q += _xlog2(qe)
            if code == 0 or code == 1:
                ov[k] = 0.5 * acc
            elif code == 2:
                ov[k] = acc
            elif code == 3:
                ov[k] = INFINITY if bad else acc
            else:
                acc = -acc_m + 0.5 * (acc_p + acc_q)
                ov[k] = acc if acc > 0.0 else 0.0
    return out
