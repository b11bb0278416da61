"""Pure-numpy reference implementations of the hot kernels.

Each function here has a numba twin in ``_numba``; the two must agree to
floating-point roundoff (the backends may sum in different orders, so
bit-identity is not promised across backends, only within one).
"""

import numpy as np

BACKEND = "numpy"


def bisect_times(lams, mus):
    """Solve exp(-t*lam) + exp(-t*mu) = 1 for each pair by bisection.

    Both inputs must be strictly positive (zero eigenvalues take the
    projector path upstream). The bracket [0, 64/min(lam,mu)] always
    contains the root since the residual at the right end is at most
    2*exp(-64); bisection runs to the floating-point fixpoint.

    Parameters
    ----------
    lams, mus : ndarray
        Positive eigenvalue pairs, same shape.

    Returns
    -------
    ndarray
        The unique positive roots.
    """
    lams = np.asarray(lams, dtype=np.float64)
    mus = np.asarray(mus, dtype=np.float64)
    lo = np.zeros_like(lams)
    hi = 64.0 / np.minimum(lams, mus)
    # expansion fallback: guarantee a sign change on the bracket
    bad = np.exp(-hi * lams) + np.exp(-hi * mus) > 1.0
    while bad.any():
        lo[bad] = hi[bad]
        hi[bad] *= 2.0
        bad = np.exp(-hi * lams) + np.exp(-hi * mus) > 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        stuck = (mid <= lo) | (mid >= hi)
        if stuck.all():
            break
        above = np.exp(-mid * lams) + np.exp(-mid * mus) > 1.0
        lo = np.where(above & ~stuck, mid, lo)
        hi = np.where(~above & ~stuck, mid, hi)
    return 0.5 * (lo + hi)


def heat_pair_sums(S, lam, ts):
    """Heat-damped column sums: out_j = sum_k exp(-2*ts_j*lam_k) * S_kj.

    Parameters
    ----------
    S : ndarray, shape (K, J)
        Squared expansion coefficients of J product functions.
    lam : ndarray, shape (K,)
        Eigenvalues of the expansion basis.
    ts : ndarray, shape (J,)
        Per-column diffusion times (finite).
    """
    S = np.asarray(S, dtype=np.float64)
    decay = np.exp(-2.0 * np.outer(np.asarray(lam, float), np.asarray(ts, float)))
    return (decay * S).sum(axis=0)


def oracle_inner(P, w, fi, fj):
    """Weighted local-correlation integrals for every grid point.

    out_x = sum_y P[x,y] * w_y * (fi_y - fi_x) * (fj_y - fj_x)
    """
    P = np.asarray(P, dtype=np.float64)
    di = fi[None, :] - fi[:, None]
    dj = fj[None, :] - fj[:, None]
    return (P * (w[None, :] * di * dj)).sum(axis=1)
