"""Exact degree of the real Grassmannian in its involution model, with an
independent Hilbert-function cross-check and projective-closure tools."""

from .closure import (
    GaussianRational,
    GRMatrix,
    ProjPoint,
    affine_member,
    boundary_generator,
    canonical_blocks,
    epsilon_family_check,
    orbit_dimension,
    parse_matrix,
    projective_member,
    rank_exact,
)
from .degree import (
    closed_form_degree,
    degree,
    interpolate_Pk,
    plucker_degree,
    selberg_lhs_monte_carlo,
    selberg_rhs,
)
from .partitions import Partition, dominates, enumerate_dominators, enumerate_weights
from .repdim import degree_by_differences, hilbert_sum, so_dim
from .scalar import PiScaled, gamma_half
from .symfunc import SymPoly, jack_P, jack_expand, product_of_pair_sums

__version__ = "0.1.0"

__all__ = [
    "GRMatrix",
    "GaussianRational",
    "Partition",
    "PiScaled",
    "ProjPoint",
    "SymPoly",
    "__version__",
    "affine_member",
    "boundary_generator",
    "canonical_blocks",
    "closed_form_degree",
    "degree",
    "degree_by_differences",
    "dominates",
    "enumerate_dominators",
    "enumerate_weights",
    "epsilon_family_check",
    "gamma_half",
    "hilbert_sum",
    "interpolate_Pk",
    "jack_P",
    "jack_expand",
    "orbit_dimension",
    "parse_matrix",
    "plucker_degree",
    "product_of_pair_sums",
    "projective_member",
    "rank_exact",
    "selberg_lhs_monte_carlo",
    "selberg_rhs",
    "so_dim",
]
