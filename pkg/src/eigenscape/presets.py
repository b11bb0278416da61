"""End-to-end experiment presets: basis, affinity, embedding, artifacts.

Each preset builds its eigenbasis, computes the pairwise similarity matrix,
embeds it, and writes a fixed artifact set into the output directory:
basis.csv, affinity.csv, embedding.csv, embedding.svg, metadata.txt, plus
l1_profile.csv for presets with computed (non-analytic) spectra. All
artifacts are byte-deterministic given (config, seed).
"""

import os
import time
from dataclasses import dataclass

import numpy as np

from . import fileio
from .affinity import affinity_matrix
from .errors import InputError, ParameterError
from .graphs import (
    erdos_renyi,
    gaussian_kernel,
    kronecker_kernel,
    normalized_laplacian,
    unnormalized_laplacian,
)
from .landscape import Embedding, distance_ratio, embed, nearest_neighbors
from .spectra import (
    EigenBasis,
    eigh,
    l1_profile,
    rectangle_basis,
    sphere_basis,
    torus_basis,
)

ARTIFACTS = ("basis.csv", "affinity.csv", "embedding.csv", "embedding.svg",
             "metadata.txt")

# spacing-scaled kernel width for the 10-point interval factor shared by the
# product presets; half the grid spacing keeps the factor spectrum spread
# enough that consecutive interval modes stay adjacent in the landscape
GRID_FACTOR_SIGMA = 1.0 / 18.0


@dataclass(frozen=True)
class RunSummary:
    preset: str
    out_dir: str
    grid_size: int
    basis_size: int
    subset_size: int
    power: float
    mode: str
    raw_min: float
    raw_max: float
    degenerate_pairs: int
    near_tie: bool
    seconds: dict
    artifacts: tuple


@dataclass(frozen=True)
class _Plan:
    """Resolved inputs for one run; presets fill this, run_preset executes it."""

    basis: EigenBasis
    subset: tuple
    extension: EigenBasis
    power: float
    time: object  # None (adaptive) or float t0
    axes: tuple
    scale_coords: bool
    color_values: list
    grid_shape: tuple
    description: str
    computed_spectrum: bool
    extra_meta: dict


def _decile_colors(m):
    return [k * 10 // m for k in range(m)]


def _plan_torus(cfg):
    n = cfg.n if cfg.n is not None else 100
    basis = torus_basis(n, mode="real")
    colors = [lab[1] for lab in basis.labels]
    return _Plan(
        basis=basis,
        subset=tuple(range(basis.m)),
        extension=None,
        power=4.0,
        time=None,
        axes=(1, 2, 3),
        scale_coords=False,
        color_values=colors,
        grid_shape=(1, n),
        description=f"torus grid n={n}, real trigonometric eigenfunctions",
        computed_spectrum=False,
        extra_meta={"n": n},
    )


def _plan_sphere(cfg):
    lmax = cfg.lmax if cfg.lmax is not None else (9 if cfg.scale == "small" else 14)
    grid = 91 if cfg.scale == "small" else 181
    if cfg.lmax is not None:
        grid = max(grid, 4 * lmax + 2)
    basis = sphere_basis(lmax, grid, grid)
    # products of degree <= lmax harmonics live in degrees <= 2*lmax; heat
    # damping is only exact if the expansion basis spans them
    ext = sphere_basis(2 * lmax, grid, grid)
    colors = [0.0 if l == 0 else m / l for (l, m) in basis.labels]
    return _Plan(
        basis=basis,
        subset=tuple(range(basis.m)),
        extension=ext,
        power=2.0,
        time=0.3,
        axes=(1, 2, 3),
        scale_coords=False,
        color_values=colors,
        grid_shape=(grid, grid),
        description=f"sphere harmonics lmax={lmax} on {grid}x{grid} polar grid",
        computed_spectrum=False,
        extra_meta={"lmax": lmax, "extension_lmax": 2 * lmax},
    )


def _plan_rectangle(cfg):
    gx, gy = 40, 10
    basis = rectangle_basis(gx, gy, gx, gy)
    colors = [lab[1] for lab in basis.labels]
    return _Plan(
        basis=basis,
        subset=tuple(range(basis.m)),
        extension=None,
        power=4.0,
        time=None,
        axes=(1, 2, 3),
        scale_coords=True,
        color_values=colors,
        grid_shape=(gx, gy),
        description=f"rectangle [0,4]x[0,1] Dirichlet modes, {gx}x{gy} grid",
        computed_spectrum=False,
        extra_meta={},
    )


def _plan_gauss_product(cfg):
    sigma = cfg.sigma if cfg.sigma is not None else 0.1
    m_sub = cfg.n if cfg.n is not None else 100
    rng = np.random.default_rng(cfg.seed)
    points = rng.normal(0.0, 0.1, size=100)
    kx = gaussian_kernel(points, sigma)
    gy = np.linspace(0.0, 1.0, 10)
    ky = gaussian_kernel(gy, GRID_FACTOR_SIGMA)
    basis = eigh(normalized_laplacian(kronecker_kernel(ky, kx)))
    m_sub = min(m_sub, basis.m)
    return _Plan(
        basis=basis,
        subset=tuple(range(m_sub)),
        extension=None,
        power=1.0,
        time=None,
        axes=(1, 2, 3),
        scale_coords=False,
        color_values=_decile_colors(m_sub),
        grid_shape=(10, 100),
        description=(
            "normalized laplacian of gaussian-cloud x interval product kernel"
        ),
        computed_spectrum=True,
        extra_meta={"sigma": sigma, "sigma_grid": GRID_FACTOR_SIGMA,
                    "cloud_std": 0.1, "cloud_size": 100},
    )


def _plan_er(cfg, laplacian):
    n = cfg.n if cfg.n is not None else (300 if cfg.scale == "small" else 1000)
    K = erdos_renyi(n, 0.2, cfg.seed)
    basis = eigh(laplacian(K))
    kind = "normalized" if laplacian is normalized_laplacian else "unnormalized"
    return _Plan(
        basis=basis,
        subset=tuple(range(basis.m)),
        extension=None,
        power=1.0,
        time=None,
        axes=(1, 2, 3),
        scale_coords=False,
        color_values=_decile_colors(basis.m),
        grid_shape=(1, n),
        description=f"{kind} laplacian of G({n}, 0.2)",
        computed_spectrum=True,
        extra_meta={"n": n, "edge_probability": 0.2},
    )


def _plan_kron(cfg):
    m_sub = cfg.n if cfg.n is not None else 100
    sigma = cfg.sigma if cfg.sigma is not None else GRID_FACTOR_SIGMA
    k1 = erdos_renyi(100, 0.2, cfg.seed)
    grid = np.linspace(0.0, 1.0, 10)
    k2 = gaussian_kernel(grid, sigma)
    basis = eigh(normalized_laplacian(kronecker_kernel(k2, k1)))
    m_sub = min(m_sub, basis.m)
    return _Plan(
        basis=basis,
        subset=tuple(range(m_sub)),
        extension=None,
        power=1.0,
        time=None,
        axes=(1, 2, 3),
        scale_coords=False,
        color_values=_decile_colors(m_sub),
        grid_shape=(10, 100),
        description=(
            "normalized laplacian of interval-kernel x ER(100, 0.2) product"
        ),
        computed_spectrum=True,
        extra_meta={"sigma": sigma, "er_n": 100, "edge_probability": 0.2},
    )


def _plan_pointcloud(cfg):
    if not cfg.input:
        raise ParameterError("custom-pointcloud needs input=<csv path>")
    if cfg.sigma is None:
        raise ParameterError("custom-pointcloud needs an explicit sigma")
    points = fileio.read_points_csv(cfg.input, cfg.delimiter)
    basis = eigh(normalized_laplacian(gaussian_kernel(points, cfg.sigma)))
    return _Plan(
        basis=basis,
        subset=tuple(range(basis.m)),
        extension=None,
        power=1.0,
        time=None,
        axes=(1, 2, 3),
        scale_coords=False,
        color_values=_decile_colors(basis.m),
        grid_shape=(1, basis.n),
        description=f"normalized laplacian of gaussian kernel on {basis.n} points",
        computed_spectrum=True,
        extra_meta={"sigma": cfg.sigma, "input": cfg.input,
                    "delimiter": cfg.delimiter},
    )


def _read_edges(path, delimiter):
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise InputError(f"{path}: empty edge list")
    edges = []
    for r, line in enumerate(lines):
        parts = line.split(delimiter)
        if len(parts) not in (2, 3):
            raise InputError(f"{path}: row {r} needs 2 or 3 columns")
        try:
            i, j = int(parts[0]), int(parts[1])
            wt = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise InputError(f"{path}: malformed row {r}: {line!r}") from None
        if i < 0 or j < 0:
            raise InputError(f"{path}: negative vertex index on row {r}")
        edges.append((i, j, wt))
    n = 1 + max(max(i, j) for i, j, _ in edges)
    K = np.zeros((n, n))
    for i, j, wt in edges:
        K[i, j] = wt
        K[j, i] = wt
    return K


def _plan_edgelist(cfg):
    if not cfg.input:
        raise ParameterError("custom-edgelist needs input=<edge list path>")
    K = _read_edges(cfg.input, cfg.delimiter)
    basis = eigh(normalized_laplacian(K))
    return _Plan(
        basis=basis,
        subset=tuple(range(basis.m)),
        extension=None,
        power=1.0,
        time=None,
        axes=(1, 2, 3),
        scale_coords=False,
        color_values=_decile_colors(basis.m),
        grid_shape=(1, basis.n),
        description=f"normalized laplacian of edge list graph, {basis.n} vertices",
        computed_spectrum=True,
        extra_meta={"input": cfg.input, "delimiter": cfg.delimiter},
    )


_PLANNERS = {
    "torus": _plan_torus,
    "sphere": _plan_sphere,
    "rectangle": _plan_rectangle,
    "gauss-product": _plan_gauss_product,
    "er-normalized": lambda cfg: _plan_er(cfg, normalized_laplacian),
    "er-unnormalized": lambda cfg: _plan_er(cfg, unnormalized_laplacian),
    "kron-product": _plan_kron,
    "custom-pointcloud": _plan_pointcloud,
    "custom-edgelist": _plan_edgelist,
}


def run_preset(cfg):
    """Execute one preset end to end and write its artifact set.

    CLI flags already merged into ``cfg`` win over preset defaults. Returns
    a RunSummary with phase timings and degeneracy diagnostics; everything
    on disk is deterministic, so timings stay out of metadata.
    """
    if not cfg.out:
        raise ParameterError("no output directory configured")
    tick = time.perf_counter()
    plan = _PLANNERS[cfg.preset](cfg)
    t_basis = time.perf_counter() - tick

    power = cfg.p if cfg.p is not None else plan.power
    t_fixed = cfg.t0 if cfg.t0 is not None else plan.time
    axes = cfg.axes if cfg.axes != (1, 2, 3) else plan.axes
    scale_coords = (
        cfg.scale_coords if cfg.scale_coords is not None else plan.scale_coords
    )

    tick = time.perf_counter()
    aff = affinity_matrix(
        plan.basis,
        subset=plan.subset,
        power=power,
        time=t_fixed,
        extension=plan.extension,
        diag=cfg.diag,
    )
    t_aff = time.perf_counter() - tick

    tick = time.perf_counter()
    emb = embed(aff, axes=axes, scale_by_eigenvalue=scale_coords)
    t_emb = time.perf_counter() - tick

    tick = time.perf_counter()
    os.makedirs(cfg.out, exist_ok=True)
    sub_basis = EigenBasis(
        eigenvalues=aff.eigenvalues,
        vectors=plan.basis.vectors[:, list(plan.subset)],
        weights=plan.basis.weights,
        labels=aff.labels,
    )
    fileio.write_basis_csv(os.path.join(cfg.out, "basis.csv"), sub_basis)
    fileio.write_matrix_csv(os.path.join(cfg.out, "affinity.csv"), aff.matrix)
    fileio.write_embedding_csv(
        os.path.join(cfg.out, "embedding.csv"), emb, aff.eigenvalues
    )
    fileio.write_scatter_svg(
        os.path.join(cfg.out, "embedding.svg"),
        emb.coords,
        color_values=plan.color_values,
        title=f"{cfg.preset} landscape (power={power:g}, mode={aff.mode})",
    )
    artifacts = list(ARTIFACTS)
    if plan.computed_spectrum:
        fileio.write_l1_csv(
            os.path.join(cfg.out, "l1_profile.csv"), l1_profile(plan.basis)
        )
        artifacts.append("l1_profile.csv")

    meta = {
        "format": 1,
        "preset": cfg.preset,
        "seed": cfg.seed,
        "scale": cfg.scale,
        "power": float(power),
        "mode": aff.mode,
        "axes": ",".join(str(a) for a in axes),
        "diag": cfg.diag,
        "scale_coords": "true" if scale_coords else "false",
        "basis": plan.description,
        "grid_size": plan.basis.n,
        "basis_size": plan.basis.m,
        "subset_size": len(plan.subset),
        "grid_rows": plan.grid_shape[0],
        "grid_cols": plan.grid_shape[1],
        "near_tie": "true" if emb.near_tie else "false",
    }
    for key, value in plan.extra_meta.items():
        meta[key] = value
    fileio.write_metadata(os.path.join(cfg.out, "metadata.txt"), meta)
    t_write = time.perf_counter() - tick

    return RunSummary(
        preset=cfg.preset,
        out_dir=cfg.out,
        grid_size=plan.basis.n,
        basis_size=plan.basis.m,
        subset_size=len(plan.subset),
        power=float(power),
        mode=aff.mode,
        raw_min=aff.raw_min,
        raw_max=aff.raw_max,
        degenerate_pairs=len(aff.degenerate_pairs),
        near_tie=emb.near_tie,
        seconds={
            "basis": t_basis,
            "affinity": t_aff,
            "embedding": t_emb,
            "write": t_write,
        },
        artifacts=tuple(artifacts),
    )


def _load_embedding(run_dir):
    path = os.path.join(run_dir, "embedding.csv")
    idx, lams, labels, coords = fileio.read_embedding_csv(path)
    return Embedding(
        coords=coords,
        axes=tuple(range(1, coords.shape[1] + 1)),
        axis_eigenvalues=np.zeros(coords.shape[1]),
        near_tie=False,
        labels=labels,
    ), lams


def query_nn(run_dir, i, k=1):
    """(index, distance) neighbors of function i in a completed run."""
    emb, _ = _load_embedding(run_dir)
    return nearest_neighbors(emb, i, k)


def query_ratio(run_dir, i, near, far):
    """distance_ratio(i, near, far) in a completed run's embedding."""
    emb, _ = _load_embedding(run_dir)
    return distance_ratio(emb, i, near, far)


def query_hadamard(run_dir, i, j):
    """Export the pointwise product of functions i and j as CSV + SVG.

    Reads the run's basis samples and grid shape from disk; returns the
    two written paths.
    """
    _, lams, _, vecs = fileio.read_basis_vectors(
        os.path.join(run_dir, "basis.csv")
    )
    meta = fileio.read_metadata(os.path.join(run_dir, "metadata.txt"))
    m = vecs.shape[1]
    if not (0 <= i < m and 0 <= j < m):
        raise InputError(f"indices ({i}, {j}) out of range for basis size {m}")
    product = vecs[:, i] * vecs[:, j]
    rows = int(meta.get("grid_rows", 1))
    cols = int(meta.get("grid_cols", product.size))
    if rows * cols != product.size:
        raise InputError(
            f"grid {rows}x{cols} in metadata does not match {product.size} samples"
        )
    csv_path = os.path.join(run_dir, f"hadamard_{i}_{j}.csv")
    svg_path = os.path.join(run_dir, f"hadamard_{i}_{j}.svg")
    lines = ["index,value"]
    for x, v in enumerate(product):
        lines.append(f"{x},{fileio._fmt(v)}")
    fileio._dump(csv_path, lines)
    fileio.write_heatmap_svg(
        svg_path,
        product.reshape(rows, cols),
        title=f"phi_{i} * phi_{j}",
    )
    return csv_path, svg_path
