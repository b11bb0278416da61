"""Spectral embedding of an affinity matrix and probes on the result.

The affinity matrix is symmetric but indefinite; its dominant eigenvectors
(by absolute eigenvalue) arrange the eigenfunctions into a low-dimensional
landscape where geometric neighborhoods mirror spectral kinship.
"""

from dataclasses import dataclass, field

import numpy as np

from .affinity import AffinityResult
from .errors import DegeneracyError, InputError, ParameterError
from .spectra import eigh

# |eigenvalue| gap below this across the selection boundary makes the
# chosen axes ill-defined up to rotation
TIE_GAP_TOL = 1e-9


@dataclass(frozen=True)
class Embedding:
    """Coordinates of each eigenfunction along selected affinity axes.

    ``coords[k]`` is the position of function k; ``axis_eigenvalues`` are
    the affinity eigenvalues of the chosen axes, in axis order.
    ``near_tie`` warns that an unselected eigenvalue nearly ties a selected
    one, making the picked axes ill-defined.
    """

    coords: np.ndarray
    axes: tuple
    axis_eigenvalues: np.ndarray
    near_tie: bool
    labels: tuple = field(default=())

    @property
    def n(self):
        return self.coords.shape[0]


def embed(affinity, axes=(1, 2, 3), scale_by_eigenvalue=False):
    """Embed eigenfunctions along dominant eigenvectors of their affinity.

    Axes are 1-based ranks into the |eigenvalue|-descending spectrum of the
    affinity matrix: ``axes=(1, 2, 3)`` picks the three strongest. Rows of
    ``coords`` are the eigenvector entries of each function, optionally
    scaled per-axis by |eigenvalue| so strong axes stretch distances.

    Parameters
    ----------
    affinity : AffinityResult | ndarray
        Symmetric affinity matrix (or the result object carrying one).
    axes : tuple of int
        Distinct 1-based ranks, each within the matrix size.
    scale_by_eigenvalue : bool
        Multiply axis r by |lambda_r| (default off).

    Returns
    -------
    Embedding
    """
    labels = ()
    if isinstance(affinity, AffinityResult):
        labels = affinity.labels
        A = affinity.matrix
    else:
        A = np.asarray(affinity, dtype=np.float64)
    M = A.shape[0]
    axes = tuple(int(a) for a in axes)
    if len(set(axes)) != len(axes) or not axes:
        raise ParameterError(f"axes must be distinct and nonempty, got {axes}")
    if any(not 1 <= a <= M for a in axes):
        raise ParameterError(f"axes {axes} out of range for a {M}x{M} matrix")
    basis = eigh(A)
    absval = np.abs(basis.eigenvalues)
    # stable sort on -|lambda| keeps ascending-lambda positions on ties
    order = np.argsort(-absval, kind="stable")
    ranked = absval[order]
    picked = np.array([a - 1 for a in axes])
    selected = np.zeros(M, dtype=bool)
    selected[picked] = True
    near_tie = False
    for r in picked:
        for s in (r - 1, r + 1):
            if 0 <= s < M and not selected[s] and abs(ranked[r] - ranked[s]) <= TIE_GAP_TOL:
                near_tie = True
    cols = order[picked]
    coords = basis.vectors[:, cols].copy()
    if scale_by_eigenvalue:
        coords *= absval[cols][None, :]
    return Embedding(
        coords=coords,
        axes=axes,
        axis_eigenvalues=basis.eigenvalues[cols],
        near_tie=near_tie,
        labels=labels,
    )


def nearest_neighbors(embedding, i, k=1):
    """The k nearest functions to function i as (index, distance) pairs.

    Ascending by Euclidean distance, excluding i itself; exact ties are
    broken toward the smaller index, so the result is deterministic even
    for duplicated coordinates.
    """
    coords = embedding.coords
    n = coords.shape[0]
    if not 0 <= i < n:
        raise InputError(f"index {i} out of range for embedding size {n}")
    if not 1 <= k <= n - 1:
        raise ParameterError(f"need 1 <= k <= {n - 1}, got {k}")
    diff = coords - coords[i]
    d2 = (diff * diff).sum(axis=1)
    # last lexsort key is primary: distance first, index breaks ties
    order = np.lexsort((np.arange(n), d2))
    return [(int(j), float(np.sqrt(d2[j]))) for j in order if j != i][:k]


def distance_ratio(embedding, i, near, far):
    """How many times farther function ``far`` sits from i than ``near``.

    Returns d(i, far) / d(i, near).

    Raises
    ------
    DegeneracyError
        If i and ``near`` coincide in the embedding (zero denominator).
    """
    coords = embedding.coords
    n = coords.shape[0]
    for idx in (i, near, far):
        if not 0 <= idx < n:
            raise InputError(f"index {idx} out of range for embedding size {n}")
    dn = float(np.linalg.norm(coords[near] - coords[i]))
    df = float(np.linalg.norm(coords[far] - coords[i]))
    if dn == 0.0:
        raise DegeneracyError(
            f"functions {i} and {near} coincide in the embedding; "
            "distance ratio is undefined"
        )
    return df / dn


def hadamard(basis, i, j):
    """Pointwise product phi_i * phi_j on the grid.

    The product of two neighboring eigenfunctions often exposes shared
    structure (nodal cuts, common factors) directly in sign patterns.
    """
    m = basis.m
    if not (0 <= i < m and 0 <= j < m):
        raise InputError(f"indices ({i}, {j}) out of range for basis size {m}")
    return basis.vectors[:, i] * basis.vectors[:, j]
