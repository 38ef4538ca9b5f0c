"""Exact-arithmetic toolkit for parastatistics Fock spaces.

Builds the order-p Fock space of m parafermion and n paraboson pairs as a
lowest-weight module of the orthosymplectic superalgebra osp(2m+1|2n):
a matrix-realization oracle for the defining triple relations, the induced
module in its monomial basis, the Gelfand-Zetlin basis with closed-form
matrix elements for m = n = 1, and supersymmetric-Schur character and
branching machinery for general (m, n).  Everything is exact: rationals,
and rational combinations of square roots of squarefree integers.
"""

from .characters import (
    WeightSeries,
    character_series,
    conjugate,
    enumerate_gz_general,
    hook_ok,
    hw_from_partition,
    king_identity_check,
    pbw_multiplicities,
    super_schur,
)
from .defining import (
    GeneratorSet,
    SuperMatrix,
    build_generators,
    build_umn_basis,
    super_bracket,
    verify_triple_relations,
)
from .gz import GZPattern, apply_c, enumerate_patterns, reduced_me
from .monomial import (
    MonomialState,
    apply_generator,
    gram_matrix,
    gram_rank_and_null,
    inner_product_oracle,
    norm_squared_closed,
)
from .scalars import RadicalScalar, pochhammer, sqrt_rational

__version__ = "0.1.0"

__all__ = [
    "GZPattern",
    "GeneratorSet",
    "MonomialState",
    "RadicalScalar",
    "SuperMatrix",
    "WeightSeries",
    "apply_c",
    "apply_generator",
    "build_generators",
    "build_umn_basis",
    "character_series",
    "conjugate",
    "enumerate_gz_general",
    "enumerate_patterns",
    "gram_matrix",
    "gram_rank_and_null",
    "hook_ok",
    "hw_from_partition",
    "inner_product_oracle",
    "king_identity_check",
    "norm_squared_closed",
    "pbw_multiplicities",
    "pochhammer",
    "reduced_me",
    "sqrt_rational",
    "super_bracket",
    "super_schur",
    "verify_triple_relations",
]
