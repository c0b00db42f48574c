"""Exact-arithmetic generating-function calculus for BPS invariants of
stable pairs: the BPS basis transform and its validators, local curve
contributions, and the primitive-class K3 pipeline."""

from .bps import (
    BpsVector,
    GgtcReport,
    PairsSeries,
    bps_decompose,
    bps_recompose,
    hilbert_basis_element,
    hilbert_decompose,
    pairs_basis_element,
    validate_ggtc,
)
from .curves import (
    NodalCurve,
    SingularityGerm,
    milnor_from_geometry,
    nodal_contribution,
    nodal_pairs_series,
    node_germ,
    nonsingular_contribution,
    q_series_decompose,
    smooth_germ,
    stratify_pairs_series,
    subsets_of_nodes,
    sym_euler,
)
from .errors import (
    AsymmetricInput,
    BpskitError,
    EmptyWindow,
    InputError,
    InsufficientWindow,
    MilnorMismatch,
    NonUnitLeading,
    NotBpsForm,
    NotKkvForm,
    PreconditionError,
    ValidationError,
)
from .k3 import (
    K3PairsSeries,
    KkvTable,
    SignedCheckReport,
    kkv_decompose,
    kkv_product,
    ky_series,
    signed_conversion_check,
    yau_zaslow,
)
from .kernels import BACKEND as kernel_backend
from .series import (
    BiSeries,
    LaurentPoly,
    TruncSeries,
    binom_pow,
    eta_power,
    involution_check,
    lp_arith,
    product_family,
    q_negate,
    series_arith,
    series_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricInput",
    "BiSeries",
    "BpsVector",
    "BpskitError",
    "EmptyWindow",
    "GgtcReport",
    "InputError",
    "InsufficientWindow",
    "K3PairsSeries",
    "KkvTable",
    "LaurentPoly",
    "MilnorMismatch",
    "NodalCurve",
    "NonUnitLeading",
    "NotBpsForm",
    "NotKkvForm",
    "PairsSeries",
    "PreconditionError",
    "SignedCheckReport",
    "SingularityGerm",
    "TruncSeries",
    "ValidationError",
    "binom_pow",
    "bps_decompose",
    "bps_recompose",
    "eta_power",
    "hilbert_basis_element",
    "hilbert_decompose",
    "involution_check",
    "kernel_backend",
    "kkv_decompose",
    "kkv_product",
    "ky_series",
    "lp_arith",
    "milnor_from_geometry",
    "nodal_contribution",
    "nodal_pairs_series",
    "node_germ",
    "nonsingular_contribution",
    "pairs_basis_element",
    "product_family",
    "q_negate",
    "q_series_decompose",
    "series_arith",
    "series_inverse",
    "signed_conversion_check",
    "smooth_germ",
    "stratify_pairs_series",
    "subsets_of_nodes",
    "sym_euler",
    "validate_ggtc",
    "yau_zaslow",
]
