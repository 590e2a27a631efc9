"""Dimension structures over finite posets: axioms, dimensions, properties,
constructions, maps, extension of pre-structures and example families."""

from .classify import check_synchronization, classify
from .constructions import (
    Partition,
    direct_product,
    i_direct_product,
    l_direct_product,
    measure_sum,
    normalization,
    quotient,
    structure_sum,
    substructure,
    sup_combine,
)
from .core import Candidate, DimensionStructure, PreDimensionStructure, check_axioms, check_pre_axioms
from .errors import DimStructError
from .extension import embed_into, extend
from .extval import INF, ONE, ZERO, ExtVal, ext
from .io import emit_structure, fixture_path, load_structure, parse_structure_file
from .morphisms import StructureMap, sign_collapse, verify_map
from .poset import BOTTOM, TOP, DimValue, FinitePoset, antichain, build_poset, chain
from .propositions import proposition_suite

__version__ = "0.1.0"

__all__ = [
    "BOTTOM", "TOP", "INF", "ONE", "ZERO",
    "Candidate", "DimensionStructure", "PreDimensionStructure", "DimStructError",
    "DimValue", "ExtVal", "FinitePoset", "Partition", "StructureMap",
    "antichain", "build_poset", "chain", "check_axioms", "check_pre_axioms",
    "check_synchronization", "classify", "direct_product", "emit_structure", "embed_into",
    "ext", "extend", "fixture_path", "i_direct_product", "l_direct_product", "load_structure",
    "measure_sum", "normalization", "parse_structure_file", "proposition_suite", "quotient",
    "sign_collapse", "structure_sum", "substructure", "sup_combine", "verify_map",
]
