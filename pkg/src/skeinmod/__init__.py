"""Exact-arithmetic two-variable skein modules of framed oriented links.

The public surface: Laurent rings and specialization maps (laurent),
rank <= 2 exponent lattices with a canonical triple (lattice), homological
manifold models (manifold), indices / summands / traces / skein elements
(skein), and the command-line front end (cli).
"""

from .errors import DimensionError, ParseError, SkeinModError
from .lattice import ExponentLattice
from .laurent import (
    AUGMENTATION,
    SPECIALIZE_L,
    SPECIALIZE_S,
    SPECIALIZE_W,
    LaurentPoly1,
    LaurentPoly2,
    SpecializationMap,
)
from .manifold import (
    BUILTIN_NAMES,
    ClassLabel,
    HomologyClass1,
    HomologyClass2,
    ManifoldModel,
    builtin,
    load_model,
    model_from_document,
    model_to_document,
)
from .skein import (
    MODULE_TAGS,
    IndexTriple,
    LinkClass,
    MixedCross,
    MoveTrace,
    SelfCross,
    SkeinElement,
    Slide,
    SummandRelations,
    Twist,
    WrithePair,
    alpha_from_refs,
    epsilon,
    epsilon_prime,
    gamma_prime,
    is_free,
    load_trace,
    mu_index,
    sphere_torus_discrepancies,
    summand,
    torsion_annihilator,
    trace_evaluate,
    trace_from_document,
)

__version__ = "0.1.0"

__all__ = [
    "SkeinModError",
    "ParseError",
    "DimensionError",
    "LaurentPoly1",
    "LaurentPoly2",
    "SpecializationMap",
    "SPECIALIZE_S",
    "SPECIALIZE_L",
    "SPECIALIZE_W",
    "AUGMENTATION",
    "ExponentLattice",
    "HomologyClass1",
    "HomologyClass2",
    "ClassLabel",
    "ManifoldModel",
    "builtin",
    "BUILTIN_NAMES",
    "model_from_document",
    "model_to_document",
    "load_model",
    "MODULE_TAGS",
    "LinkClass",
    "IndexTriple",
    "WrithePair",
    "Twist",
    "SelfCross",
    "MixedCross",
    "Slide",
    "MoveTrace",
    "SummandRelations",
    "SkeinElement",
    "gamma_prime",
    "epsilon_prime",
    "epsilon",
    "mu_index",
    "summand",
    "trace_evaluate",
    "torsion_annihilator",
    "is_free",
    "sphere_torus_discrepancies",
    "alpha_from_refs",
    "trace_from_document",
    "load_trace",
    "__version__",
]
