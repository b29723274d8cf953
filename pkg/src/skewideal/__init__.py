"""Ore extensions over finite semisimple algebras and idempotent generators of ideal convolutional codes."""

from .algebra import (
    Algebra,
    AlgebraElement,
    AlgebraError,
    BlockDecomposition,
    block_decomposition,
    construct_algebra,
    direct_sum,
    group_algebra,
    matrix_algebra,
    quotient_algebra,
)
from .config import ConfigError, JobConfig, load_config, parse_config
from .field import FieldElement, FiniteField, frobenius_power, make_field, normal_dual_bases, trace
from .idealcode import (
    IdealCode,
    NotAnIdealCode,
    basic_encoder,
    compute_idempotent,
    generator_matrix,
    parity_check_matrix,
)
from .maps import BlockAction, LinearMap, MapValidationError, block_action, construct_map, map_order
from .metrics import CodeProfile, code_degree, column_distance, free_distance, row_distance, singleton_bound
from .ore import OrePolynomial, OreRing, devectorize, ore_multiply, vectorize
from .poly import Poly, QuotientField, berlekamp_factor, euclidean_divide, quotient_idempotents, xgcd
from .polymatrix import (
    PolyMatrix,
    SmithDecomposition,
    hermite_row_form,
    is_basic,
    max_minor_degree,
    same_row_space,
    smith_normal_form,
)
from .separability import (
    SeparabilityError,
    TensorElement,
    build_separability,
    check_separability,
    lift_to_ore,
    tensor_twist,
)
from .textio import format_element

__version__ = "0.1.0"
