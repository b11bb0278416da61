import numpy as np
import pytest

from eigenscape import (
    DegeneracyError,
    Embedding,
    InputError,
    ParameterError,
    affinity_matrix,
    distance_ratio,
    embed,
    hadamard,
    nearest_neighbors,
    torus_basis,
)


def _points(coords):
    coords = np.asarray(coords, dtype=np.float64)
    if coords.ndim == 1:
        coords = coords[:, None]
    return Embedding(coords, (1,), np.zeros(1), False)


# ---------------------------------------------------------------- embed

def test_embed_rank_one():
    v = np.array([0.1, 0.5, 0.2, 0.7, 0.46])
    v /= np.linalg.norm(v)
    e = embed(np.outer(v, v))
    assert np.abs(e.coords[:, 0] - v).max() < 1e-8
    # the other selected axes come from the (clamped) null space
    assert np.abs(e.axis_eigenvalues[1:]).max() <= 1e-8
    scaled = embed(np.outer(v, v), scale_by_eigenvalue=True)
    assert np.abs(scaled.coords[:, 1:]).max() <= 1e-8


def test_embed_orders_by_absolute_eigenvalue():
    rng = np.random.default_rng(12)
    Q, _ = np.linalg.qr(rng.normal(size=(6, 6)))
    target = np.array([5.0, -4.0, 3.0, -0.5, 0.2, 0.1])
    A = (Q * target[None, :]) @ Q.T
    A = (A + A.T) / 2
    e = embed(A, axes=(1, 2, 3))
    assert np.allclose(np.abs(e.axis_eigenvalues), [5.0, 4.0, 3.0], atol=1e-9)


def test_embed_permutation_equivariance():
    b = torus_basis(14)
    A = affinity_matrix(b, power=2.0).matrix
    rng = np.random.default_rng(3)
    perm = rng.permutation(14)
    e = embed(A)
    ep = embed(A[np.ix_(perm, perm)])
    assert np.abs(ep.coords - e.coords[perm]).max() <= 1e-9


def test_embed_axes_beyond_three():
    b = torus_basis(10)
    A = affinity_matrix(b).matrix
    e = embed(A, axes=(2, 3, 4))
    assert e.coords.shape == (10, 3)
    assert e.axes == (2, 3, 4)


def test_embed_flags_selection_boundary_ties():
    # eigenvalues 2, 1, 1, 0.1: axes (1,2) cut between the tied pair
    D = np.diag([2.0, 1.0, 1.0, 0.1])
    assert embed(D, axes=(1, 2)).near_tie
    assert not embed(D, axes=(1, 2, 3)).near_tie
    assert not embed(np.diag([3.0, 2.0, 1.0, 0.5]), axes=(1, 2)).near_tie


def test_embed_scale_by_eigenvalue():
    D = np.diag([4.0, -2.0, 1.0])
    raw = embed(D, axes=(1, 2))
    scaled = embed(D, axes=(1, 2), scale_by_eigenvalue=True)
    assert np.allclose(scaled.coords, raw.coords * np.array([4.0, 2.0]))


def test_embed_carries_labels():
    b = torus_basis(8)
    res = affinity_matrix(b)
    assert embed(res).labels == b.labels


def test_embed_rejects_bad_axes():
    A = np.eye(4)
    with pytest.raises(ParameterError):
        embed(A, axes=(1, 1, 2))
    with pytest.raises(ParameterError):
        embed(A, axes=(0, 1))
    with pytest.raises(ParameterError):
        embed(A, axes=(1, 5))
    with pytest.raises(ParameterError):
        embed(A, axes=())


# ---------------------------------------------------------------- neighbors

def test_nearest_neighbors_collinear():
    e = _points([0.0, 1.0, 3.0])
    assert nearest_neighbors(e, 0, 1) == [(1, 1.0)]
    assert nearest_neighbors(e, 0, 2) == [(1, 1.0), (2, 3.0)]


def test_nearest_neighbors_all_sorted():
    rng = np.random.default_rng(5)
    e = _points(rng.normal(size=(9, 3)))
    pairs = nearest_neighbors(e, 4, 8)
    dists = [d for _, d in pairs]
    assert dists == sorted(dists)
    assert len({j for j, _ in pairs}) == 8 and 4 not in {j for j, _ in pairs}


def test_nearest_neighbors_tie_breaks_by_index():
    e = _points([[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [0.5, 2.0]])
    assert [j for j, _ in nearest_neighbors(e, 0, 2)] == [1, 2]


def test_nearest_neighbors_validates():
    e = _points([0.0, 1.0])
    with pytest.raises(InputError):
        nearest_neighbors(e, 2, 1)
    with pytest.raises(ParameterError):
        nearest_neighbors(e, 0, 2)


# ---------------------------------------------------------------- ratios

def test_distance_ratio_collinear():
    e = _points([0.0, 1.0, 3.0])
    assert distance_ratio(e, 0, 1, 2) == 3.0


def test_distance_ratio_equidistant():
    e = _points([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    assert distance_ratio(e, 0, 1, 2) == 1.0


def test_distance_ratio_zero_denominator():
    e = _points([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]])
    with pytest.raises(DegeneracyError):
        distance_ratio(e, 0, 1, 2)


# ---------------------------------------------------------------- hadamard

def test_hadamard_symmetric_and_pointwise():
    b = torus_basis(12)
    h = hadamard(b, 2, 5)
    assert np.array_equal(h, b.vectors[:, 2] * b.vectors[:, 5])
    assert np.array_equal(h, hadamard(b, 5, 2))


def test_hadamard_with_constant_scales():
    b = torus_basis(12)
    c = b.vectors[0, 0]  # constant eigenvector value
    assert np.abs(hadamard(b, 0, 7) - c * b.vectors[:, 7]).max() < 1e-15


def test_hadamard_validates_indices():
    b = torus_basis(6)
    with pytest.raises(InputError):
        hadamard(b, 0, 6)
