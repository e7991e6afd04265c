"""Entanglement-assisted quantum error correction: codes, decoders, fidelity."""

from .codes import (
    CombinationCode,
    EaqecCode,
    StabilizerCode,
    builtin_codes,
    check_bounds,
    combine,
    extend_eaqec,
    get_code,
    max_movable_ebits,
    minimum_distance,
    parse_code,
    standard_to_eaqec,
    syndrome,
)
from .decoder import (
    LogicalErrorDistribution,
    NoiseModel,
    SyndromeTable,
    build_table,
    build_table_minprob,
    build_table_minweight,
    correctable_count,
    decode,
    logical_error_distribution,
    sequential_table,
    table_weight_profile,
)
from .distill import (
    SchemeSpec,
    compare_schemes,
    distill_then_eaqec_fidelity,
    distillation_fidelity,
    parse_scheme,
    residual_distribution,
)
from .errors import (
    CapabilityError,
    DimensionError,
    EaqecError,
    InvariantError,
    ParseError,
    RankError,
    StructureError,
)
from .fidelity import (
    BivariateWeightEnumerator,
    FidelityPolynomial,
    WeightEnumerator,
    enumerate_correctable,
    exact_fidelity,
    fidelity_lower_bounds,
    fidelity_poly,
    fidelity_value,
    krawtchouk,
    macwilliams_transform,
    monte_carlo_fidelity,
    sequential_fidelity,
)
from .symplectic import (
    CheckMatrix,
    PauliWord,
    StandardForm,
    group_elements,
    in_group,
    logical_operators,
    multiply,
    standard_form,
    symplectic_product,
    weight,
)

__all__ = [
    "BivariateWeightEnumerator",
    "build_table",
    "build_table_minprob",
    "build_table_minweight",
    "builtin_codes",
    "CapabilityError",
    "check_bounds",
    "CheckMatrix",
    "CombinationCode",
    "combine",
    "compare_schemes",
    "correctable_count",
    "decode",
    "DimensionError",
    "distill_then_eaqec_fidelity",
    "distillation_fidelity",
    "EaqecCode",
    "EaqecError",
    "enumerate_correctable",
    "exact_fidelity",
    "extend_eaqec",
    "fidelity_lower_bounds",
    "fidelity_poly",
    "fidelity_value",
    "FidelityPolynomial",
    "get_code",
    "group_elements",
    "in_group",
    "InvariantError",
    "krawtchouk",
    "logical_error_distribution",
    "logical_operators",
    "LogicalErrorDistribution",
    "macwilliams_transform",
    "max_movable_ebits",
    "minimum_distance",
    "monte_carlo_fidelity",
    "multiply",
    "NoiseModel",
    "parse_code",
    "parse_scheme",
    "ParseError",
    "PauliWord",
    "RankError",
    "residual_distribution",
    "SchemeSpec",
    "sequential_fidelity",
    "sequential_table",
    "StabilizerCode",
    "standard_form",
    "standard_to_eaqec",
    "StandardForm",
    "StructureError",
    "symplectic_product",
    "syndrome",
    "SyndromeTable",
    "table_weight_profile",
    "weight",
    "WeightEnumerator",
]

__version__ = "0.1.0"
