"""Coordinate ring schemes and everything computed from their tables."""
from .algebra import (
    FiniteAlgebra,
    assumption2_pointwise,
    finite_algebra,
    idempotents,
    is_local,
    is_separable,
    local_factor_count,
)
from .checks import (
    VerificationReport,
    check_assumption2,
    check_kernel_nilpotent,
    verify_morphism,
    verify_scheme,
)
from .classify import (
    NO_PRODUCT_CASE,
    NO_UNIFORM_TWIST,
    UNKNOWN_OPEN,
    YES_ASSUMPTION2,
    YES_SEPARABLE,
    classify,
    companionability_report,
    is_tensor_form,
    predict_companionability,
    theta_matrix,
)
from .construct import (
    compose,
    compose_power,
    compose_self,
    dual_numbers,
    nested_generic_point,
    product_scheme,
    split_dual_scheme,
    split_pair_scheme,
    tensor_scheme,
    transport,
    truncated_poly_scheme,
    twist,
)
from .core import (
    AdditivePoly,
    BiadditiveMonomial,
    CoordinateScheme,
    SchemePoint,
    scheme_from_json,
    scheme_mul_points,
    scheme_pow_symbolic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
