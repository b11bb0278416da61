import numpy as np
import pytest

from eigenscape import (
    EigenBasis,
    InputError,
    ParameterError,
    cycle_adjacency,
    eigh,
    l1_profile,
    normalized_laplacian,
    rectangle_basis,
    sphere_basis,
    torus_basis,
)
from eigenscape.spectra import _norm_legendre, _polar_weights


# ---------------------------------------------------------------- eigh

def test_eigh_reconstruction():
    rng = np.random.default_rng(0)
    M = rng.normal(size=(30, 30))
    M = M + M.T
    b = eigh(M)
    R = (b.vectors * b.eigenvalues[None, :]) @ b.vectors.T
    assert np.abs(R - M).max() <= 1e-8 * np.abs(M).max()
    assert (np.diff(b.eigenvalues) >= 0).all()


def test_eigh_orientation_convention():
    b = eigh(normalized_laplacian(cycle_adjacency(7)))
    for k in range(b.m):
        col = b.vectors[:, k]
        assert col[np.argmax(np.abs(col))] > 0


def test_eigh_snaps_numerical_kernel_to_zero():
    L = normalized_laplacian(cycle_adjacency(9))
    assert eigh(L).eigenvalues[0] == 0.0


def test_eigh_deterministic_on_degenerate_spectrum():
    # C5 has two 2-dimensional eigenspaces; both runs must agree bitwise
    L = normalized_laplacian(cycle_adjacency(5))
    a, b = eigh(L), eigh(L)
    assert np.array_equal(a.vectors, b.vectors)


def test_eigh_rejects_asymmetric():
    M = np.array([[0.0, 1.0], [0.5, 0.0]])
    with pytest.raises(InputError):
        eigh(M)
    with pytest.raises(InputError):
        eigh(np.ones((2, 3)))


# ---------------------------------------------------------------- EigenBasis

def test_basis_shape_validation():
    with pytest.raises(InputError):
        EigenBasis(np.zeros(3), np.zeros((4, 2)), np.ones(4))
    with pytest.raises(InputError):
        EigenBasis(np.zeros(2), np.zeros((4, 2)), np.ones(4), labels=("a",))


def test_coefficients_synthesize_round_trip():
    b = torus_basis(16)
    rng = np.random.default_rng(1)
    f = rng.normal(size=16)
    assert np.abs(b.synthesize(b.coefficients(f)) - f).max() < 1e-12


def test_gram_identity_torus():
    for mode in ("real", "complex"):
        b = torus_basis(11, mode=mode)
        G = b.gram()
        assert np.abs(G - np.eye(b.m)).max() < 1e-13


# ---------------------------------------------------------------- torus

def test_torus_real_counts_and_eigenvalues():
    for n in (8, 9):  # even hits the Nyquist branch, odd does not
        b = torus_basis(n)
        assert b.m == n
        kinds = [lab[0] for lab in b.labels]
        freqs = np.array([lab[1] for lab in b.labels])
        assert kinds[0] == "const"
        assert np.array_equal(b.eigenvalues, (freqs * freqs).astype(float))
        if n % 2 == 0:
            assert ("sin", n // 2) not in b.labels
            assert ("cos", n // 2) in b.labels


def test_torus_complex_is_exponential():
    b = torus_basis(10, mode="complex")
    x = np.arange(10) * (2 * np.pi / 10)
    expect = np.exp(1j * 3 * x) / np.sqrt(2 * np.pi)
    assert np.abs(b.vectors[:, 3] - expect).max() < 1e-15
    assert b.eigenvalues[3] == 9.0


def test_torus_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        torus_basis(2)
    with pytest.raises(ParameterError):
        torus_basis(10, mode="fourier")


# ---------------------------------------------------------------- sphere

def test_polar_weights_positive_and_sum_two():
    for n in (9, 20, 91):
        u = _polar_weights(n)
        assert (u > 0).all()
        assert abs(u.sum() - 2.0) < 1e-14


def test_polar_weights_exact_on_cosine_polynomials():
    # integral of cos(r a) sin(a) over [0, pi] is 2/(1-r^2) for even r, 0 odd
    n = 24
    a = np.linspace(0, np.pi, n)
    u = _polar_weights(n)
    for r in range(n - 1):
        got = (u * np.cos(r * a)).sum()
        expect = 2.0 / (1.0 - r * r) if r % 2 == 0 else 0.0
        assert abs(got - expect) < 1e-13


def test_legendre_against_explicit_low_degrees():
    x = np.linspace(-1, 1, 7)
    P = _norm_legendre(2, x)
    s = np.sqrt(1 - x * x)
    assert np.abs(P[(0, 0)] - np.sqrt(1 / (4 * np.pi))).max() < 1e-15
    assert np.abs(P[(1, 0)] - np.sqrt(3 / (4 * np.pi)) * x).max() < 1e-15
    assert np.abs(P[(1, 1)] - np.sqrt(3 / (8 * np.pi)) * s).max() < 1e-15
    assert np.abs(P[(2, 0)] - np.sqrt(5 / (16 * np.pi)) * (3 * x * x - 1)).max() < 1e-14


def test_sphere_basis_orthonormal_small():
    b = sphere_basis(3, 16, 16)
    G = b.gram()
    assert np.abs(G - np.eye(b.m)).max() < 1e-13
    assert b.m == 16
    assert abs(b.weights.sum() - 4 * np.pi) < 1e-12


def test_sphere_eigenvalues_and_labels():
    b = sphere_basis(2, 10, 10)
    assert b.labels[0] == (0, 0)
    for k, (l, m) in enumerate(b.labels):
        assert b.eigenvalues[k] == l * (l + 1)
        assert -l <= m <= l


def test_sphere_rejects_coarse_grid():
    with pytest.raises(ParameterError):
        sphere_basis(5, 11, 40)
    with pytest.raises(ParameterError):
        sphere_basis(-1, 10, 10)


# ---------------------------------------------------------------- rectangle

def test_rectangle_orthonormal_and_complete():
    b = rectangle_basis(6, 4, 6, 4)
    assert b.m == b.n == 24
    assert np.abs(b.gram() - np.eye(24)).max() < 1e-13


def test_rectangle_eigenvalue_formula():
    b = rectangle_basis(3, 3, 8, 8)
    for k, (m, n) in enumerate(b.labels):
        assert abs(b.eigenvalues[k] - np.pi**2 * (m * m / 16 + n * n)) < 1e-12
    assert (np.diff(b.eigenvalues) >= 0).all()


def test_rectangle_aspect_ratio_signature():
    # lambda_{11}/lambda_{21} = (1/16+1)/(4/16+1) = 17/20 pins the 4:1 domain
    b = rectangle_basis(2, 1, 10, 10)
    lam = {lab: b.eigenvalues[k] for k, lab in enumerate(b.labels)}
    assert abs(lam[(1, 1)] / lam[(2, 1)] - 0.85) < 1e-14


def test_rectangle_rejects_undersampled():
    with pytest.raises(ParameterError):
        rectangle_basis(5, 2, 4, 4)
    with pytest.raises(ParameterError):
        rectangle_basis(2, 5, 4, 4)


# ---------------------------------------------------------------- l1 profile

def test_l1_profile_flat_vs_localized():
    n = 64
    flat = np.full((n, 1), 1.0 / np.sqrt(n))
    spike = np.zeros((n, 1))
    spike[3, 0] = 1.0
    vecs = np.hstack([flat, spike])
    b = EigenBasis(np.array([0.0, 1.0]), vecs, np.ones(n))
    prof = l1_profile(b)
    assert abs(prof[0][2] - np.sqrt(n)) < 1e-12
    assert abs(prof[1][2] - 1.0) < 1e-12
