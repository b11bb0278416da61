"""Kernel matrices and graph Laplacians.

Everything is dense float64; target sizes are a few thousand vertices at
most, where LAPACK eigensolves are the budget, not kernel assembly.
"""

import numpy as np

from .errors import DegeneracyError, InputError, ParameterError


def gaussian_kernel(points, sigma):
    """Gaussian kernel matrix K_ij = exp(-||x_i - x_j||^2 / sigma^2).

    Parameters
    ----------
    points : array_like, shape (n,) or (n, d)
        Point coordinates; a flat array is treated as 1-d points.
    sigma : float
        Positive length scale.

    Returns
    -------
    ndarray, shape (n, n)
        Symmetric kernel with unit diagonal.
    """
    if sigma <= 0:
        raise ParameterError(f"sigma must be positive, got {sigma}")
    pts = np.asarray(points, dtype=np.float64)
    if pts.size == 0:
        raise InputError("empty point set")
    if not np.isfinite(pts).all():
        raise InputError("non-finite coordinate in point set")
    if pts.ndim == 1:
        pts = pts[:, None]
    # coordinate differences are antisymmetric exactly, so d2 (and K) are
    # bit-symmetric without any explicit symmetrization
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=-1)
    return np.exp(-d2 / (sigma * sigma))


def cycle_adjacency(n):
    """0/1 adjacency of the n-cycle; every row sums to 2."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    K = np.zeros((n, n))
    idx = np.arange(n)
    K[idx, (idx + 1) % n] = 1.0
    K[(idx + 1) % n, idx] = 1.0
    return K


def erdos_renyi(n, p, seed):
    """Adjacency of a G(n, p) sample under a pinned seed.

    Each unordered pair is an edge independently with probability p. The
    generator draws the n(n-1)/2 upper-triangle uniforms in one call, so a
    fixed seed always yields the same matrix regardless of platform.
    """
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must be in [0,1], got {p}")
    if n < 1:
        raise ParameterError(f"vertex count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, k=1)
    edges = (rng.uniform(size=iu[0].size) < p).astype(np.float64)
    K = np.zeros((n, n))
    K[iu] = edges
    return K + K.T


def kronecker_kernel(K2, K1):
    """Kronecker product kernel (K2 (x) K1)_{(a,i),(b,j)} = K2_ab * K1_ij.

    The result inherits symmetry from the factors; its eigenpairs are the
    products of factor eigenpairs, which is what makes product graphs a
    useful separability testbed.
    """
    K2 = np.asarray(K2, dtype=np.float64)
    K1 = np.asarray(K1, dtype=np.float64)
    if K2.ndim != 2 or K2.shape[0] != K2.shape[1]:
        raise InputError("K2 is not a square matrix")
    if K1.ndim != 2 or K1.shape[0] != K1.shape[1]:
        raise InputError("K1 is not a square matrix")
    return np.kron(K2, K1)


def normalized_laplacian(K):
    """Normalized Laplacian L = I - D^{-1/2} K D^{-1/2}.

    Raises
    ------
    DegeneracyError
        If any vertex has zero degree (D^{-1/2} undefined); the message
        names the first offending vertex.
    """
    K = np.asarray(K, dtype=np.float64)
    deg = K.sum(axis=1)
    dead = np.flatnonzero(deg <= 0)
    if dead.size:
        raise DegeneracyError(f"vertex {dead[0]} has zero degree")
    s = 1.0 / np.sqrt(deg)
    # s_i*s_j == s_j*s_i exactly, so L is bit-symmetric by construction
    L = -K * np.outer(s, s)
    np.fill_diagonal(L, L.diagonal() + 1.0)
    return L


def unnormalized_laplacian(K):
    """Unnormalized Laplacian L = D - K; rows sum to zero."""
    K = np.asarray(K, dtype=np.float64)
    L = -K.copy()
    np.fill_diagonal(L, L.diagonal() + K.sum(axis=1))
    return L
