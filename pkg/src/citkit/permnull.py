"""Calibrated null for bilinear kernel trace statistics.

Both kernel tests reduce to a statistic of the form ``T = tr(A B)`` with
symmetric positive semidefinite, doubly centered matrices A and B, and both
are calibrated against the distribution of ``tr(A_pi B)`` under a uniformly
random row/column permutation of A.  The first four moments of that
distribution are polynomial in a fixed set of matrix invariants with
universal rational coefficients (:mod:`citkit._moment_tables`, derived and
enumeration-verified in :mod:`citkit._moment_derivation`), so they can be
computed exactly without sampling a single permutation.

No single two- or three-parameter family fits the resulting law: its support
is bounded below (A and B are PSD), its body is strongly right-skewed, and
its left edge is smooth rather than spiked.  What does fit is the structural
decomposition of T itself: the diagonal terms form a linear permutation
statistic (asymptotically normal), while the off-diagonal mass behaves like
a small-dof moment-matched gamma.  The null used here is therefore the
convolution

    T  ~  kappa1 + Normal(0, v) + theta * (Gamma(k) - k)

with the gamma part matched to the exact third cumulant and the variance
split ``v = kappa2 - 3*kappa3^2 / (2*kappa4)`` chosen so the fourth cumulant
is matched as well.  When that split degenerates (the cumulants of a rank
deficient statistic can sit exactly on the pure-gamma manifold), ``v`` falls
back to the exact variance of the diagonal linear part, which is the
correct normal component in the decomposition above.  The survival function
is evaluated by Gauss-Hermite quadrature.
"""

from __future__ import annotations

import numpy as np
from scipy.special import gammaincc

from ._moment_tables import T1, T2, T3, T4

__all__ = [
    "dense_invariants",
    "feature_invariants",
    "permutation_cumulants",
    "trace_null_sf",
]

# quadrature for the normal-gamma convolution; 81 nodes keeps the absolute
# CDF error far below the calibration error of the moment fit itself
_NODES, _WEIGHTS = np.polynomial.hermite_e.hermegauss(81)
_WEIGHTS = _WEIGHTS / np.sqrt(2.0 * np.pi)

_INVARIANT_NAMES = (
    "t", "d", "d3", "d4", "q", "e3", "e4", "tr3", "tr4", "m21", "m111",
    "ltr3", "l2d", "llq", "l2le", "le3", "bow", "th4", "pll", "lds",
)


def dense_invariants(M):
    """All invariants of a symmetric matrix needed by the moment tables.

    One matrix product is required; everything else is elementwise.
    """
    dg = np.diagonal(M)
    M2 = M @ M
    MM = M * M
    rowsq = MM.sum(axis=1)
    dg2 = dg * dg
    return {
        "t": float(dg.sum()),
        "d": float(dg2.sum()),
        "d3": float((dg2 * dg).sum()),
        "d4": float((dg2 * dg2).sum()),
        "q": float(rowsq.sum()),
        "e3": float((MM * M).sum()),
        "e4": float((MM * MM).sum()),
        "tr3": float((M2 * M).sum()),
        "tr4": float((M2 * M2).sum()),
        "m21": float(dg @ rowsq),
        "m111": float(dg @ M @ dg),
        "ltr3": float(dg @ (M2 * M).sum(axis=1)),
        "l2d": float(dg2 @ rowsq),
        "llq": float(dg @ MM @ dg),
        "l2le": float(dg2 @ M @ dg),
        "le3": float(dg @ (MM * M).sum(axis=1)),
        "bow": float(rowsq @ rowsq),
        "th4": float((MM * M2).sum()),
        "pll": float(dg @ M2 @ dg),
        "lds": float(dg @ M @ rowsq),
    }


def feature_invariants(ex, chunk=512):
    """Invariants of A = ex @ ex.T computed without materializing A.

    Everything reduces to feature-space products except the entrywise third
    and fourth power sums, which stream over row blocks of the Gram matrix so
    memory stays at O(chunk * n).
    """
    n, k = ex.shape
    a = (ex * ex).sum(axis=1)            # diag(A)
    G = ex.T @ ex
    G2 = G @ G
    exa = ex.T @ a
    exa2 = ex.T @ (a * a)
    r = ((ex @ G) * ex).sum(axis=1)      # diag(A^2)
    r3 = ((ex @ G2) * ex).sum(axis=1)    # diag(A^3)
    wa = ex * np.sqrt(a)[:, None]
    va = ex * a[:, None]
    cross_wa = wa.T @ wa
    cross_va = va.T @ ex
    out = {
        "t": float(np.trace(G)),
        "d": float(a @ a),
        "d3": float((a * a) @ a),
        "d4": float((a * a) @ (a * a)),
        "q": float((G * G).sum()),
        "tr3": float((G2 * G).sum()),
        "tr4": float((G2 * G2).sum()),
        "m21": float(a @ r),
        "m111": float(exa @ exa),
        "ltr3": float(a @ r3),
        "l2d": float((cross_va * cross_va).sum()),
        "llq": float((cross_wa * cross_wa).sum()),
        "l2le": float(exa2 @ exa),
        "bow": float(r @ r),
        "pll": float(exa @ G @ exa),
        "lds": float(exa @ (ex.T @ r)),
    }
    e3 = e4 = th4 = le3 = 0.0
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        P = ex[lo:hi] @ ex.T
        Q = (ex[lo:hi] @ G) @ ex.T
        P2 = P * P
        cube_rows = (P2 * P).sum(axis=1)
        e3 += float(cube_rows.sum())
        e4 += float((P2 * P2).sum())
        th4 += float((P2 * Q).sum())
        le3 += float(a[lo:hi] @ cube_rows)
    out["e3"] = e3
    out["e4"] = e4
    out["th4"] = th4
    out["le3"] = le3
    return out


def _evaluate(table, inv_a, inv_b, n):
    total = 0.0
    for (mon_a, mon_b, blocks), coeff in table.items():
        term = float(coeff)
        for name in mon_a:
            term *= inv_a[name]
        for name in mon_b:
            term *= inv_b[name]
        fall = 1.0
        for i in range(blocks):
            fall *= n - i
        total += term / fall
    return total


def permutation_cumulants(inv_a, inv_b, n):
    """Exact cumulants (k1, k2, k3, k4) of tr(A_pi B) plus the exact variance
    of its diagonal (linear) part."""
    e1 = _evaluate(T1, inv_a, inv_b, n)
    e2 = _evaluate(T2, inv_a, inv_b, n)
    e3 = _evaluate(T3, inv_a, inv_b, n)
    e4 = _evaluate(T4, inv_a, inv_b, n)
    k2 = e2 - e1 * e1
    k3 = e3 - 3.0 * e1 * e2 + 2.0 * e1 ** 3
    k4 = e4 - 4.0 * e1 * e3 + 6.0 * e1 * e1 * e2 - 3.0 * e1 ** 4 - 3.0 * k2 * k2
    ss_a = inv_a["d"] - inv_a["t"] ** 2 / n
    ss_b = inv_b["d"] - inv_b["t"] ** 2 / n
    v_lin = ss_a * ss_b / (n - 1)
    return e1, k2, k3, k4, v_lin


def trace_null_sf(stat, cumulants):
    """Upper tail probability of the normal-gamma convolution null.

    Returns None when the cumulants are too degenerate to calibrate (the
    caller falls back to a plain two-moment gamma).
    """
    k1, k2, k3, k4, v_lin = cumulants
    if not all(np.isfinite(c) for c in cumulants) or k2 <= 0.0 or k3 <= 0.0:
        return None
    v_norm = k2 - 1.5 * k3 * k3 / k4 if k4 > 0.0 else 0.0
    v_norm = min(max(v_norm, v_lin, 0.0), 0.999 * k2)
    v_gamma = k2 - v_norm
    skew = k3 / v_gamma ** 1.5
    shape = 4.0 / (skew * skew)
    scale = np.sqrt(v_gamma) * skew / 2.0
    shifted = stat - k1 - np.sqrt(v_norm) * _NODES
    arg = shifted / scale + shape
    tails = np.where(arg <= 0.0, 1.0, gammaincc(shape, np.maximum(arg, 1e-300)))
    return float(np.clip((_WEIGHTS * tails).sum(), 0.0, 1.0))
