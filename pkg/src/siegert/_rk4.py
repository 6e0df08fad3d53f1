"""Fixed-step RK4 marching kernel for psi'' = c(x) psi.

The loop works on potential values pre-sampled at the grid nodes and interval
midpoints, so it never calls back into Python.  jump_scale[j] != 0 adds a
derivative kick jump_scale[j] * psi on arrival at node j (delta terms; the
sign already encodes the marching direction).  dx may be negative for
right-to-left marching.

When numba is importable the loop is jit-compiled; the pure-Python version
stays reachable as rk4_march.py_func (or rk4_march itself without numba) so
tests can compare the two.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


def _rk4_march(v_nodes, v_mids, dx, coeff, e, psi0, dpsi0, jump_scale):
    n = v_nodes.shape[0] - 1
    psi_out = np.empty(n + 1, np.complex128)
    dpsi_out = np.empty(n + 1, np.complex128)
    psi = psi0
    dpsi = dpsi0
    psi_out[0] = psi
    dpsi_out[0] = dpsi
    for j in range(n):
        c0 = coeff * (v_nodes[j] - e)
        cm = coeff * (v_mids[j] - e)
        c1 = coeff * (v_nodes[j + 1] - e)
        k1p = dpsi
        k1d = c0 * psi
        p2 = psi + 0.5 * dx * k1p
        d2 = dpsi + 0.5 * dx * k1d
        k2p = d2
        k2d = cm * p2
        p3 = psi + 0.5 * dx * k2p
        d3 = dpsi + 0.5 * dx * k2d
        k3p = d3
        k3d = cm * p3
        p4 = psi + dx * k3p
        d4 = dpsi + dx * k3d
        k4p = d4
        k4d = c1 * p4
        psi = psi + dx * (k1p + 2.0 * (k2p + k3p) + k4p) / 6.0
        dpsi = dpsi + dx * (k1d + 2.0 * (k2d + k3d) + k4d) / 6.0
        if jump_scale[j + 1] != 0.0:
            dpsi = dpsi + jump_scale[j + 1] * psi
        psi_out[j + 1] = psi
        dpsi_out[j + 1] = dpsi
    return psi_out, dpsi_out


if njit is not None:
    rk4_march = njit(cache=True)(_rk4_march)
else:  # pragma: no cover
    rk4_march = _rk4_march
