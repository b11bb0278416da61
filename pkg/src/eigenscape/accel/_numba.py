"""Numba-compiled twins of the kernels in ``_numpy``.

Loop bodies mirror the numpy versions; summation order differs (sequential
here, pairwise in numpy), so cross-backend agreement is to roundoff only.
"""

import numpy as np
from numba import njit, prange

BACKEND = "numba"


@njit(cache=True)
def _bisect_one(lam, mu):
    lo = 0.0
    hi = 64.0 / min(lam, mu)
    while np.exp(-hi * lam) + np.exp(-hi * mu) > 1.0:
        lo = hi
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if np.exp(-mid * lam) + np.exp(-mid * mu) > 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@njit(cache=True, parallel=True)
def bisect_times(lams, mus):
    out = np.empty(lams.shape[0])
    for k in prange(lams.shape[0]):
        out[k] = _bisect_one(lams[k], mus[k])
    return out


@njit(cache=True, parallel=True)
def heat_pair_sums(S, lam, ts):
    K, J = S.shape
    out = np.empty(J)
    for j in prange(J):
        acc = 0.0
        tj = -2.0 * ts[j]
        for k in range(K):
            acc += np.exp(tj * lam[k]) * S[k, j]
        out[j] = acc
    return out


@njit(cache=True, parallel=True)
def oracle_inner(P, w, fi, fj):
    n = P.shape[0]
    out = np.empty(n)
    for x in prange(n):
        acc = 0.0
        for y in range(n):
            acc += P[x, y] * w[y] * (fi[y] - fi[x]) * (fj[y] - fj[x])
        out[x] = acc
    return out
