"""Exactly computable example families and their finite samples."""

from .growth import (
    EvenOddSeq,
    GrowthDim,
    GrowthSeq,
    evenodd_dim,
    evenodd_measure,
    evenodd_nonprincipal_witness,
    growth_dim,
    growth_measure,
)
from .iterate import iterate_structure
from .lebesgue import IntervalSet, RectSet, leb_dim, leb_mu, pleb_dim, pleb_dim_pair, pleb_mu
from .ranked import RankedSet, ranked_dim, ranked_mu, ranked_union
from .sampling import FAMILIES, CrossReport, analytic_dim, cross_validate, sample_finite, window_poset
from .scale import ScaleVector, scale_dim, scale_rho
from .tower import TowerDecomposition, TowerNumber, tower_decompose, tower_g, tower_mu

__all__ = [
    "EvenOddSeq", "GrowthDim", "GrowthSeq", "evenodd_dim", "evenodd_measure",
    "evenodd_nonprincipal_witness", "growth_dim", "growth_measure", "iterate_structure",
    "IntervalSet", "RectSet", "leb_dim", "leb_mu", "pleb_dim", "pleb_dim_pair", "pleb_mu",
    "RankedSet", "ranked_dim", "ranked_mu", "ranked_union", "FAMILIES", "CrossReport",
    "analytic_dim", "cross_validate", "sample_finite", "window_poset", "ScaleVector",
    "scale_dim", "scale_rho", "TowerDecomposition", "TowerNumber", "tower_decompose",
    "tower_g", "tower_mu",
]
