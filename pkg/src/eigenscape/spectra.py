"""Eigendecomposition and analytic eigenbases behind one weighted abstraction.

An :class:`EigenBasis` holds eigenvalues, sampled eigenfunctions, quadrature
weights and per-function labels. Computed graph spectra and the analytic
torus/sphere/rectangle bases all share it, so downstream similarity code
never cares where a basis came from.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, NumericError, ParameterError

# eigenvalues this close to zero are the numerical kernel; snapping them to
# exact zero lets the diffusion-time solver take its projector path
ZERO_EIGENVALUE_TOL = 1e-10


@dataclass(frozen=True)
class EigenBasis:
    """A weighted eigenfunction basis sampled on a grid or vertex set.

    Attributes
    ----------
    eigenvalues : ndarray, shape (m,)
        Sorted ascending, nonnegative for Laplacian spectra.
    vectors : ndarray, shape (n, m)
        One column per eigenfunction; float64, or complex128 for the
        complex-exponential torus basis.
    weights : ndarray, shape (n,)
        Positive quadrature weights defining <f, g>_w = sum_x w_x f_x g_x.
        Uniform 1 for graph Laplacians.
    labels : tuple
        Free-form per-function metadata: plain indices for computed
        spectra, (l, m) degrees for the sphere, (m, n) for the rectangle.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    weights: np.ndarray
    labels: tuple = field(default=())

    def __post_init__(self):
        if self.vectors.shape != (self.weights.size, self.eigenvalues.size):
            raise InputError(
                f"shape mismatch: vectors {self.vectors.shape}, "
                f"{self.weights.size} weights, {self.eigenvalues.size} eigenvalues"
            )
        if self.labels and len(self.labels) != self.eigenvalues.size:
            raise InputError("one label per basis function required")

    @property
    def n(self):
        """Grid/vertex count."""
        return self.weights.size

    @property
    def m(self):
        """Number of basis functions (m <= n for truncated analytic bases)."""
        return self.eigenvalues.size

    def coefficients(self, f):
        """Expansion coefficients <phi_k, f>_w for a grid vector f."""
        f = np.asarray(f)
        if f.shape[0] != self.n:
            raise InputError(f"vector length {f.shape[0]} != grid size {self.n}")
        return self.vectors.conj().T @ (self.weights * f)

    def synthesize(self, coeffs):
        """Rebuild a grid vector from expansion coefficients."""
        return self.vectors @ np.asarray(coeffs)

    def gram(self):
        """Weighted Gram matrix; identity up to quadrature error."""
        return self.vectors.conj().T @ (self.weights[:, None] * self.vectors)


def eigh(M, tol=1e-12):
    """Symmetric eigendecomposition with a deterministic output convention.

    Eigenvalues ascend; each eigenvector is oriented so its largest-magnitude
    entry is positive; runs of bitwise-equal eigenvalues are ordered
    lexicographically by vector entries. Eigenvalues within 1e-10 of zero are
    snapped to exactly zero.

    Parameters
    ----------
    M : ndarray
        Symmetric matrix; asymmetry beyond ``tol`` (relative to the largest
        entry) is an input error.

    Returns
    -------
    EigenBasis
        Full decomposition under uniform unit weights.
    """
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InputError(f"expected a square matrix, got shape {M.shape}")
    scale = max(np.abs(M).max(), 1.0)
    asym = np.abs(M - M.T).max()
    if asym > tol * scale:
        raise InputError(f"matrix asymmetry {asym:.3e} exceeds {tol:.1e} relative")
    try:
        lams, vecs = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigendecomposition failed: {exc}") from None
    lams = lams.copy()
    lams[np.abs(lams) <= ZERO_EIGENVALUE_TOL] = 0.0
    _orient_columns(vecs)
    _lexsort_ties(lams, vecs)
    return EigenBasis(
        eigenvalues=lams,
        vectors=vecs,
        weights=np.ones(M.shape[0]),
        labels=tuple(range(M.shape[0])),
    )


def _orient_columns(vecs):
    """Flip each column so its largest-|entry| (first on ties) is positive."""
    idx = np.abs(vecs).argmax(axis=0)
    flip = vecs[idx, np.arange(vecs.shape[1])] < 0
    vecs[:, flip] *= -1.0


def _lexsort_ties(lams, vecs):
    """Order columns inside runs of exactly equal eigenvalues."""
    start = 0
    for stop in range(1, lams.size + 1):
        if stop == lams.size or lams[stop] != lams[start]:
            if stop - start > 1:
                run = slice(start, stop)
                # lexsort keys: last row is primary, so feed rows reversed
                order = np.lexsort(vecs[::-1, run])
                vecs[:, run] = vecs[:, run][:, order]
            start = stop


def torus_basis(n, mode="real"):
    """Eigenfunctions of the circle Laplacian on n equispaced grid points.

    Real mode gives the constant, cos(kx) and sin(kx) for 1 <= k < n/2,
    plus cos((n/2)x) when n is even; complex mode gives e^{ikx} for
    k = 0..n-1 (stored complex128). Frequency k carries the continuum
    eigenvalue k^2; weights are 2*pi/n, making either family exactly
    orthonormal by the discrete trigonometric identities.
    """
    if n < 3:
        raise ParameterError(f"torus grid needs n >= 3, got {n}")
    if mode not in ("real", "complex"):
        raise ParameterError(f"mode must be 'real' or 'complex', got {mode!r}")
    x = np.arange(n) * (2.0 * np.pi / n)
    w = np.full(n, 2.0 * np.pi / n)
    if mode == "complex":
        k = np.arange(n)
        vecs = np.exp(1j * np.outer(x, k)) / np.sqrt(2.0 * np.pi)
        lams = (k * k).astype(np.float64)
        labels = tuple(("exp", int(f)) for f in k)
        return EigenBasis(lams, vecs, w, labels)
    cols = [np.full(n, 1.0 / np.sqrt(2.0 * np.pi))]
    lams = [0.0]
    labels = [("const", 0)]
    for k in range(1, n // 2 + 1):
        cols.append(np.cos(k * x) / np.sqrt(np.pi))
        lams.append(float(k * k))
        labels.append(("cos", k))
        if 2 * k == n:
            # Nyquist mode: cos((n/2)x) alternates +-1, norm sqrt(2*pi) not pi
            cols[-1] = np.cos(k * x) / np.sqrt(2.0 * np.pi)
            break
        cols.append(np.sin(k * x) / np.sqrt(np.pi))
        lams.append(float(k * k))
        labels.append(("sin", k))
    return EigenBasis(
        np.array(lams), np.array(cols).T, w, tuple(labels)
    )


def _polar_weights(n_alpha):
    """Quadrature weights for int_0^pi g(a) sin(a) da on equispaced a_i.

    Clenshaw-Curtis construction: exact for every integrand that is a
    cosine polynomial of degree <= n_alpha - 1, which covers all products
    of Legendre functions the basis Grams ever integrate. The weights are
    strictly positive and sum to 2; they agree with sin(a_i)*da to
    O(1/n^2) away from the poles.
    """
    N = n_alpha - 1
    r = np.arange(0, N + 1, 2)
    moments = 2.0 / (1.0 - r.astype(np.float64) ** 2)  # int cos(r a) sin(a) da
    eps = np.ones(r.size)
    eps[0] = 0.5
    if N % 2 == 0:
        eps[-1] = 0.5
    i = np.arange(n_alpha)
    C = np.cos(np.outer(i, r) * (np.pi / N))
    u = (2.0 / N) * (C @ (eps * moments))
    u[0] *= 0.5
    u[-1] *= 0.5
    return u


def _norm_legendre(lmax, x):
    """Fully normalized associated Legendre values P-bar_l^m(x).

    Stable upward recurrence in l at fixed m with the normalization applied
    inside the recurrence, so no term overflows even at high degree.
    Returns dict[(l, m)] -> array over x.
    """
    out = {}
    sx = np.sqrt(np.maximum(0.0, 1.0 - x * x))
    for m in range(lmax + 1):
        amm = 1.0
        for k in range(1, m + 1):
            amm *= (2 * k + 1) / (2 * k)
        pmm = np.sqrt(amm / (4.0 * np.pi)) * sx**m
        out[(m, m)] = pmm
        if m + 1 <= lmax:
            out[(m + 1, m)] = np.sqrt(2 * m + 3.0) * x * pmm
        for l in range(m + 2, lmax + 1):
            a = np.sqrt((4.0 * l * l - 1.0) / (l * l - m * m))
            b = -np.sqrt(
                (2.0 * l + 1.0) * ((l - 1.0) ** 2 - m * m)
                / ((2.0 * l - 3.0) * (l * l - m * m))
            )
            out[(l, m)] = a * x * out[(l - 1, m)] + b * out[(l - 2, m)]
    return out


def sphere_basis(lmax, n_alpha, n_beta):
    """Real spherical harmonics sampled on an equispaced (alpha, beta) grid.

    Polar samples are alpha_i = i*pi/(n_alpha-1) inclusive of both poles;
    azimuthal samples beta_j = 2*pi*j/n_beta are periodic (no duplicated
    seam). Function (l, m) carries eigenvalue l(l+1). Weights are the
    polar quadrature weights of :func:`_polar_weights` times 2*pi/n_beta,
    under which the basis is orthonormal to machine precision whenever
    n_alpha, n_beta >= 2*lmax + 2.

    Parameters
    ----------
    lmax : int
        Maximum degree; the basis holds (lmax+1)^2 functions.
    n_alpha, n_beta : int
        Grid resolution; must be at least 2*lmax + 2.
    """
    if lmax < 0:
        raise ParameterError(f"lmax must be >= 0, got {lmax}")
    need = 2 * lmax + 2
    if n_alpha < need or n_beta < need:
        raise ParameterError(
            f"grid {n_alpha}x{n_beta} under-resolves lmax={lmax}; "
            f"need at least {need} samples in each angle"
        )
    alpha = np.linspace(0.0, np.pi, n_alpha)
    beta = np.arange(n_beta) * (2.0 * np.pi / n_beta)
    P = _norm_legendre(lmax, np.cos(alpha))
    w = np.outer(_polar_weights(n_alpha), np.full(n_beta, 2.0 * np.pi / n_beta))
    ones = np.ones(n_beta)
    root2 = np.sqrt(2.0)
    cols, lams, labels = [], [], []
    for l in range(lmax + 1):
        for m in range(-l, l + 1):
            if m == 0:
                col = np.outer(P[(l, 0)], ones)
            elif m > 0:
                col = root2 * np.outer(P[(l, m)], np.cos(m * beta))
            else:
                col = root2 * np.outer(P[(l, -m)], np.sin(-m * beta))
            cols.append(col.ravel())
            lams.append(float(l * (l + 1)))
            labels.append((l, m))
    return EigenBasis(
        np.array(lams), np.array(cols).T, w.ravel(), tuple(labels)
    )


def rectangle_basis(mmax, nmax, grid_x, grid_y):
    """Dirichlet eigenfunctions of [0,4] x [0,1] on an interior grid.

    phi_mn(x, y) = sin(m*pi*x/4) * sin(n*pi*y) sampled at
    x_i = 4i/(grid_x+1), y_j = j/(grid_y+1), i = 1..grid_x, j = 1..grid_y;
    eigenvalue pi^2 (m^2/16 + n^2). Under the uniform cell weight
    4/((grid_x+1)(grid_y+1)) the discrete sine identities make the family
    exactly orthonormal, and with mmax = grid_x, nmax = grid_y it is a
    complete basis of the grid.
    """
    if not (1 <= mmax <= grid_x):
        raise ParameterError(f"need 1 <= mmax <= grid_x, got mmax={mmax}, grid_x={grid_x}")
    if not (1 <= nmax <= grid_y):
        raise ParameterError(f"need 1 <= nmax <= grid_y, got nmax={nmax}, grid_y={grid_y}")
    si = np.sin(np.pi * np.outer(np.arange(1, grid_x + 1), np.arange(1, mmax + 1)) / (grid_x + 1))
    sj = np.sin(np.pi * np.outer(np.arange(1, grid_y + 1), np.arange(1, nmax + 1)) / (grid_y + 1))
    cols, lams, labels = [], [], []
    for m in range(1, mmax + 1):
        for n in range(1, nmax + 1):
            cols.append(np.outer(si[:, m - 1], sj[:, n - 1]).ravel())
            lams.append(np.pi * np.pi * (m * m / 16.0 + n * n))
            labels.append((m, n))
    order = np.argsort(np.array(lams), kind="stable")
    w = np.full(grid_x * grid_y, 4.0 / ((grid_x + 1) * (grid_y + 1)))
    return EigenBasis(
        np.array(lams)[order],
        np.array(cols).T[:, order],
        w,
        tuple(labels[k] for k in order),
    )


def l1_profile(basis):
    """Per-eigenvector l1 norms after l2 normalization, in spectral order.

    Returns a list of (index, eigenvalue, l1 norm) tuples. Flat vectors
    score near sqrt(n), concentrated ones near 1, so dips in the profile
    flag localized eigenfunctions.
    """
    V = basis.vectors
    if np.iscomplexobj(V):
        V = np.abs(V)
    l2 = np.sqrt((V * V).sum(axis=0))
    l1 = np.abs(V).sum(axis=0) / l2
    return [
        (k, float(basis.eigenvalues[k]), float(l1[k])) for k in range(basis.m)
    ]
