"""Backend selection for the axis-batch divergence kernel.

The compiled kernel is used when the extension built; otherwise the numpy
fallback takes over. Setting HOLEVOQ_DISABLE_EXTENSION=1 in the environment
before import forces the fallback (useful for benchmarking and tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _axes_py
from .notions import DistanceNotion

_NOTION_CODES = {
    DistanceNotion.KOLMOGOROV: _axes_py.CODE_KOLMOGOROV,
    DistanceNotion.PROB_ERROR: _axes_py.CODE_PROB_ERROR,
    DistanceNotion.BHATTACHARYYA: _axes_py.CODE_BHATTACHARYYA,
    DistanceNotion.RELATIVE_ENTROPY: _axes_py.CODE_RELATIVE_ENTROPY,
    DistanceNotion.QJSD: _axes_py.CODE_QJSD,
}

_impl = _axes_py
_backend = "numpy"
if os.environ.get("HOLEVOQ_DISABLE_EXTENSION") != "1":
    try:
        from . import _axes_cy as _impl_cy

        _impl = _impl_cy
        _backend = "cython"
    except ImportError:
        pass


def backend_name() -> str:
    """Which kernel is active: 'cython' or 'numpy'."""
    return _backend


def evaluate_axes(notion: DistanceNotion, weights, bloch, axes) -> np.ndarray:
    """Divergence of the axis joint table from independence, batched.

    weights: (n,), bloch: (n, 3) member Bloch vectors, axes: (m, 3) unit
    rows; returns an (m,) float array.
    """
    w = np.ascontiguousarray(weights, dtype=np.float64)
    b = np.ascontiguousarray(bloch, dtype=np.float64)
    z = np.ascontiguousarray(axes, dtype=np.float64)
    if z.ndim == 1:
        z = z[None, :]
    return np.asarray(_impl.evaluate_axes(_NOTION_CODES[notion], w, b, z))
