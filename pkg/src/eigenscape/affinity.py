"""Heat-semigroup similarity between eigenfunctions.

The similarity of two eigenfunctions is the fraction of their pointwise
product's L2 mass that survives heat diffusion for a time t balancing the
two decay rates: exp(-t*lam) + exp(-t*mu) = 1. Products of functions that
oscillate coherently survive; incoherent products burn off.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import accel
from .errors import ApplicabilityError, InputError, ParameterError
from .spectra import ZERO_EIGENVALUE_TOL, EigenBasis

# a product norm below this multiple of the factor norms counts as zero
DEGENERATE_PRODUCT_TOL = 1e-14


@dataclass(frozen=True)
class TimeScale:
    """Diffusion time: an adaptive per-pair solution or a shared fixed value.

    ``t`` may be ``math.inf``; the propagator is then the projector onto
    the zero-eigenvalue subspace.
    """

    t: float
    mode: str = "adaptive"  # "adaptive" | "fixed"


@dataclass(frozen=True)
class SimilarityResult:
    value: float
    raw: float
    degenerate: bool
    time: TimeScale


@dataclass(frozen=True)
class AffinityResult:
    """Elementwise-powered similarity matrix plus provenance.

    ``raw_min``/``raw_max`` are the pre-clamp similarity extremes over all
    non-degenerate pairs; tests assert they never stray beyond
    [-1e-9, 1 + 1e-9].
    """

    matrix: np.ndarray
    power: float
    mode: str
    raw_min: float
    raw_max: float
    degenerate_pairs: tuple
    subset: tuple
    eigenvalues: np.ndarray
    labels: tuple = field(default=())

    @property
    def n(self):
        return self.matrix.shape[0]


def _clamped(eigenvalues):
    lams = np.asarray(eigenvalues, dtype=np.float64).copy()
    if (lams < -ZERO_EIGENVALUE_TOL).any():
        raise ParameterError("negative eigenvalue; not a Laplacian spectrum")
    lams[np.abs(lams) <= ZERO_EIGENVALUE_TOL] = 0.0
    return lams


def solve_time(lam, mu):
    """Solve exp(-t*lam) + exp(-t*mu) = 1 for the unique positive root.

    Closed form t = ln(2)/lam when the eigenvalues coincide; safeguarded
    bisection otherwise. If either eigenvalue is zero (after clamping
    values within 1e-10 of zero) the root runs off to infinity and the
    returned TimeScale carries t = inf, meaning "project onto the kernel".

    Parameters
    ----------
    lam, mu : float
        Nonnegative eigenvalues.

    Returns
    -------
    TimeScale
        Adaptive-mode time scale.
    """
    if lam < -ZERO_EIGENVALUE_TOL or mu < -ZERO_EIGENVALUE_TOL:
        raise ParameterError(f"eigenvalues must be >= 0, got ({lam}, {mu})")
    lam = 0.0 if abs(lam) <= ZERO_EIGENVALUE_TOL else float(lam)
    mu = 0.0 if abs(mu) <= ZERO_EIGENVALUE_TOL else float(mu)
    if lam == 0.0 or mu == 0.0:
        return TimeScale(math.inf, "adaptive")
    if lam == mu:
        return TimeScale(math.log(2.0) / lam, "adaptive")
    t = accel.bisect_times(np.array([lam]), np.array([mu]))[0]
    return TimeScale(float(t), "adaptive")


def _as_timescale(time):
    """None -> adaptive marker; float -> fixed t0; TimeScale passes through."""
    if time is None:
        return None
    if isinstance(time, TimeScale):
        return time
    t0 = float(time)
    if not (t0 > 0) or math.isinf(t0):
        raise ParameterError(f"fixed t0 must be positive and finite, got {time}")
    return TimeScale(t0, "fixed")


def heat_apply(basis, f, time):
    """Apply the heat semigroup e^{t*Laplacian} to a grid vector spectrally.

    Expands f in the basis, damps coefficient k by exp(-t*lam_k), and
    re-synthesizes. The basis must span f for the result to be exact; at
    t = inf only the zero-eigenvalue coefficients survive (kernel
    projection).
    """
    t = time.t if isinstance(time, TimeScale) else float(time)
    if t < 0:
        raise ParameterError(f"diffusion time must be >= 0, got {t}")
    coeffs = basis.coefficients(f)
    lams = _clamped(basis.eigenvalues)
    if math.isinf(t):
        return basis.synthesize(np.where(lams == 0.0, coeffs, 0.0))
    return basis.synthesize(coeffs * np.exp(-t * lams))


def heat_propagator(basis, time):
    """Dense propagator P(t) with rows acting as integration kernels.

    P = Phi diag(e^{-t lam}) Phi^H W, so (P f)(x) discretizes
    int p(t,x,y) f(y) dy. On complete bases P(t) P(s) = P(t+s), and when
    the constant vector is an exact 0-eigenvector the rows sum to one.
    """
    t = time.t if isinstance(time, TimeScale) else float(time)
    lams = _clamped(basis.eigenvalues)
    decay = (lams == 0.0).astype(np.float64) if math.isinf(t) else np.exp(-t * lams)
    V = basis.vectors
    return (V * decay[None, :]) @ (V.conj().T * basis.weights[None, :])


def similarity(basis, i, j, time=None, extension=None):
    """Heat-surviving fraction of the product phi_i * phi_j, in [0, 1].

    Parameters
    ----------
    basis : EigenBasis
    i, j : int
        Function indices.
    time : None | float | TimeScale
        None solves the balance equation per pair (adaptive); a float is a
        fixed t0 shared by all pairs.
    extension : EigenBasis, optional
        Basis used to expand the product before heat damping. Required
        whenever products escape the span of ``basis`` (truncated analytic
        bases); defaults to ``basis`` itself.

    Returns
    -------
    SimilarityResult
        ``value`` is clamped to [0, 1]; ``raw`` keeps the pre-clamp value;
        ``degenerate`` flags a vanishing product (value 0 by convention).
    """
    m = basis.m
    if not (0 <= i < m and 0 <= j < m):
        raise InputError(f"indices ({i}, {j}) out of range for basis size {m}")
    ext = basis if extension is None else extension
    if ext.n != basis.n:
        raise InputError("extension basis lives on a different grid")
    ts = _as_timescale(time)
    if ts is None:
        lams = _clamped(basis.eigenvalues)
        ts = solve_time(lams[i], lams[j])
    w = basis.weights
    vi = basis.vectors[:, i]
    vj = basis.vectors[:, j]
    h = vi * vj
    norm_h = math.sqrt(float((w * np.abs(h) ** 2).sum()))
    ni = math.sqrt(float((w * np.abs(vi) ** 2).sum()))
    nj = math.sqrt(float((w * np.abs(vj) ** 2).sum()))
    if norm_h <= DEGENERATE_PRODUCT_TOL * ni * nj:
        return SimilarityResult(0.0, 0.0, True, ts)
    g = heat_apply(ext, h, ts)
    raw = math.sqrt(float((w * np.abs(g) ** 2).sum())) / norm_h
    return SimilarityResult(min(max(raw, 0.0), 1.0), raw, False, ts)


def similarity_local_oracle(basis, i, j):
    """Squared similarity via the local-correlation double sum.

    Independent of :func:`similarity`: evaluates

        ||h||_w^{-2} sum_x w_x ( sum_y p(t,x,y) w_y
                                 (phi_i(y)-phi_i(x)) (phi_j(y)-phi_j(x)) )^2

    with the adaptive t for the pair. The identity with similarity**2
    requires the propagator to conserve mass, which holds exactly when the
    constant vector is an exact 0-eigenvector of a complete basis.

    Raises
    ------
    ApplicabilityError
        If any row sum of P(t) deviates from 1 by more than 1e-6.
    """
    if np.iscomplexobj(basis.vectors):
        raise InputError("local-correlation oracle requires a real basis")
    m = basis.m
    if not (0 <= i < m and 0 <= j < m):
        raise InputError(f"indices ({i}, {j}) out of range for basis size {m}")
    lams = _clamped(basis.eigenvalues)
    ts = solve_time(lams[i], lams[j])
    decay = (lams == 0.0).astype(np.float64) if math.isinf(ts.t) else np.exp(-ts.t * lams)
    V = basis.vectors
    w = basis.weights
    # pure kernel p(t,x,y); the quadrature weight enters the y-sum explicitly
    pk = (V * decay[None, :]) @ V.T
    rows = pk @ w
    drift = np.abs(rows - 1.0).max()
    if drift > 1e-6:
        raise ApplicabilityError(
            f"propagator rows sum to 1 +- {drift:.3e}; the local-correlation "
            "identity needs an exact constant 0-eigenvector"
        )
    fi = V[:, i]
    fj = V[:, j]
    h = fi * fj
    inner = accel.oracle_inner(pk, w, fi, fj)
    # the balance residual e^{-t*lam_i} + e^{-t*lam_j} - 1 is 0 by definition
    # of the adaptive t, but for projector pairs the root ran off to infinity
    # and the limit residual survives (it is what keeps constant pairs at 1)
    if math.isinf(ts.t):
        residual = float(lams[i] == 0.0) + float(lams[j] == 0.0) - 1.0
    else:
        residual = math.exp(-ts.t * lams[i]) + math.exp(-ts.t * lams[j]) - 1.0
    inner = inner + residual * h
    return float((w * inner * inner).sum() / (w * h * h).sum())


def affinity_matrix(basis, subset=None, power=1.0, time=None, extension=None,
                    diag="natural"):
    """Pairwise similarity matrix raised elementwise to ``power``.

    Each entry is similarity(i, j)**power; the upper triangle is computed
    once and mirrored, so the result is bit-symmetric. Diagonal entries are
    ordinary pairs (t = ln2/lam_i) unless ``diag="one"`` pins them to 1 for
    sensitivity studies.

    Parameters
    ----------
    basis : EigenBasis
    subset : sequence of int, optional
        Which functions participate (default: all of them).
    power : float
        Elementwise exponent, >= 1.
    time : None | float | TimeScale
        Adaptive when None, else fixed t0 for every pair.
    extension : EigenBasis, optional
        Product-expansion basis, as in :func:`similarity`.
    diag : "natural" | "one"

    Returns
    -------
    AffinityResult
    """
    if power < 1.0:
        raise ParameterError(f"power must be >= 1, got {power}")
    if diag not in ("natural", "one"):
        raise ParameterError(f"diag must be 'natural' or 'one', got {diag!r}")
    if subset is None:
        subset = range(basis.m)
    subset = tuple(int(k) for k in subset)
    if not subset:
        raise ParameterError("empty subset")
    if any(not 0 <= k < basis.m for k in subset):
        raise InputError(f"subset index out of range for basis size {basis.m}")
    ext = basis if extension is None else extension
    if ext.n != basis.n:
        raise InputError("extension basis lives on a different grid")
    fixed = _as_timescale(time)

    w = basis.weights
    V = basis.vectors[:, subset]
    lams = _clamped(basis.eigenvalues)[list(subset)]
    ext_lams = _clamped(ext.eigenvalues)
    kernel_rows = ext_lams == 0.0
    # adjoint analysis operator: row k gives <phi_k^ext, .>_w
    Pw = ext.vectors.conj().T * w[None, :]
    norms = np.sqrt((w[:, None] * np.abs(V) ** 2).sum(axis=0))

    M = len(subset)
    A = np.empty((M, M))
    raw_min, raw_max = np.inf, -np.inf
    degenerate = []
    for a in range(M):
        H = V[:, a:] * V[:, [a]]
        C = Pw @ H
        S = (C.conj() * C).real if np.iscomplexobj(C) else C * C
        D = (w[:, None] * np.abs(H) ** 2).sum(axis=0)
        dgn = np.sqrt(D) <= DEGENERATE_PRODUCT_TOL * norms[a] * norms[a:]
        if fixed is not None:
            ts = np.full(M - a, fixed.t)
        else:
            lb = lams[a:]
            ts = np.empty(M - a)
            zero = (lams[a] == 0.0) | (lb == 0.0)
            same = (lb == lams[a]) & ~zero
            ts[zero] = np.inf
            if same.any():
                ts[same] = math.log(2.0) / lams[a]
            todo = ~zero & ~same
            if todo.any():
                ts[todo] = accel.bisect_times(
                    np.full(int(todo.sum()), lams[a]), lb[todo]
                )
        N = np.empty(M - a)
        fin = np.isfinite(ts)
        if fin.any():
            N[fin] = accel.heat_pair_sums(
                np.ascontiguousarray(S[:, fin]), ext_lams, ts[fin]
            )
        if (~fin).any():
            N[~fin] = S[kernel_rows][:, ~fin].sum(axis=0)
        with np.errstate(invalid="ignore", divide="ignore"):
            raw = np.sqrt(N / D)
        raw[dgn] = 0.0
        if (~dgn).any():
            raw_min = min(raw_min, float(raw[~dgn].min()))
            raw_max = max(raw_max, float(raw[~dgn].max()))
        for b in np.flatnonzero(dgn):
            degenerate.append((subset[a], subset[a + b]))
        vals = np.clip(raw, 0.0, 1.0) ** power
        A[a, a:] = vals
        A[a:, a] = vals
    if diag == "one":
        np.fill_diagonal(A, 1.0)
    mode = "adaptive" if fixed is None else f"fixed:{fixed.t:.17g}"
    sub_labels = tuple(basis.labels[k] for k in subset) if basis.labels else ()
    return AffinityResult(
        matrix=A,
        power=float(power),
        mode=mode,
        raw_min=float(raw_min) if np.isfinite(raw_min) else 0.0,
        raw_max=float(raw_max) if np.isfinite(raw_max) else 0.0,
        degenerate_pairs=tuple(degenerate),
        subset=subset,
        eigenvalues=lams,
        labels=sub_labels,
    )
