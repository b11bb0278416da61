"""Eigenscape: landscapes of Laplacian eigenfunctions via heat affinities.

Build an eigenbasis (graph spectra or analytic families), measure how much
of each pairwise eigenfunction product survives heat diffusion, and embed
the resulting affinity matrix to expose the hidden geometry relating the
eigenfunctions to each other.
"""

__version__ = "0.1.0"

from .affinity import (
    AffinityResult,
    SimilarityResult,
    TimeScale,
    affinity_matrix,
    heat_apply,
    heat_propagator,
    similarity,
    similarity_local_oracle,
    solve_time,
)
from .config import ExperimentConfig
from .errors import (
    ApplicabilityError,
    DegeneracyError,
    EigenscapeError,
    InputError,
    NumericError,
    ParameterError,
)
from .graphs import (
    cycle_adjacency,
    erdos_renyi,
    gaussian_kernel,
    kronecker_kernel,
    normalized_laplacian,
    unnormalized_laplacian,
)
from .landscape import (
    Embedding,
    distance_ratio,
    embed,
    hadamard,
    nearest_neighbors,
)
from .presets import (
    RunSummary,
    query_hadamard,
    query_nn,
    query_ratio,
    run_preset,
)
from .spectra import (
    EigenBasis,
    eigh,
    l1_profile,
    rectangle_basis,
    sphere_basis,
    torus_basis,
)

__all__ = [
    "AffinityResult",
    "ApplicabilityError",
    "DegeneracyError",
    "EigenBasis",
    "EigenscapeError",
    "Embedding",
    "ExperimentConfig",
    "InputError",
    "NumericError",
    "ParameterError",
    "RunSummary",
    "SimilarityResult",
    "TimeScale",
    "affinity_matrix",
    "cycle_adjacency",
    "distance_ratio",
    "eigh",
    "embed",
    "erdos_renyi",
    "gaussian_kernel",
    "hadamard",
    "heat_apply",
    "heat_propagator",
    "kronecker_kernel",
    "l1_profile",
    "nearest_neighbors",
    "normalized_laplacian",
    "query_hadamard",
    "query_nn",
    "query_ratio",
    "rectangle_basis",
    "run_preset",
    "similarity",
    "similarity_local_oracle",
    "solve_time",
    "sphere_basis",
    "torus_basis",
    "unnormalized_laplacian",
]
