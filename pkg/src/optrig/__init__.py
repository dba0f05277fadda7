"""Operator trigonometry for finite-dimensional complex operators.

Antieigenvalues (cos, total cos, sin), real and total centers of mass of
one operator relative to another, min-max identity checks, Birkhoff-James
orthogonality verdicts, and brute-force oracles to verify all of it.
"""

from .center_of_mass import (
    RealCenterResult,
    TotalCenterResult,
    center_uniqueness,
    extract_witness,
    real_center_of_mass,
    total_center_of_mass,
)
from .errors import (
    DimensionMismatch,
    NonFiniteObjective,
    NotAccretive,
    OptrigError,
    RouteDisagreement,
    SingularOperator,
    WitnessNotFound,
    ZeroImage,
    ZeroOperator,
    ZeroRelativeOperator,
)
from .linalg import (
    MaximizingSubspace,
    adjoint,
    apply,
    as_operator,
    as_operator_pair,
    as_vector,
    haar_unit_vector,
    hermitian_min_eig,
    hermitian_part,
    inner,
    maximizing_subspace,
    normalize,
    operator_norm,
    phase_normalize,
    sigma_min,
)
from .oracles import (
    GridSpec,
    grid_flat_interval,
    grid_min_complex,
    grid_min_real,
    sphere_refine_min,
    sphere_sample_max,
    sphere_sample_min,
)
from .ortho import (
    AttainingInterval,
    OrthogonalityVerdict,
    attain_pairing_target,
    attaining_interval,
    is_real_orthogonal,
    is_total_orthogonal,
    total_pairing_min,
)
from .sphere_opt import (
    SphereOptConfig,
    SphereOptResult,
    maximize_on_sphere,
    minimize_on_sphere,
)
from .trig import (
    TotalTrigReport,
    TrigReport,
    best_complex_scale,
    best_real_scale,
    cos_t,
    cos_via_center,
    minmax_check_complex,
    minmax_check_real,
    sin_t,
    total_cos_t,
    total_cos_via_center,
    total_trig_report,
    trig_report,
)

__version__ = "0.1.0"

__all__ = [
    "AttainingInterval",
    "DimensionMismatch",
    "GridSpec",
    "MaximizingSubspace",
    "NonFiniteObjective",
    "NotAccretive",
    "OptrigError",
    "OrthogonalityVerdict",
    "RealCenterResult",
    "RouteDisagreement",
    "SingularOperator",
    "SphereOptConfig",
    "SphereOptResult",
    "TotalCenterResult",
    "TotalTrigReport",
    "TrigReport",
    "WitnessNotFound",
    "ZeroImage",
    "ZeroOperator",
    "ZeroRelativeOperator",
    "adjoint",
    "apply",
    "as_operator",
    "as_operator_pair",
    "as_vector",
    "attain_pairing_target",
    "attaining_interval",
    "best_complex_scale",
    "best_real_scale",
    "center_uniqueness",
    "cos_t",
    "cos_via_center",
    "extract_witness",
    "grid_flat_interval",
    "grid_min_complex",
    "grid_min_real",
    "haar_unit_vector",
    "hermitian_min_eig",
    "hermitian_part",
    "inner",
    "is_real_orthogonal",
    "is_total_orthogonal",
    "maximize_on_sphere",
    "maximizing_subspace",
    "minimize_on_sphere",
    "minmax_check_complex",
    "minmax_check_real",
    "normalize",
    "operator_norm",
    "phase_normalize",
    "real_center_of_mass",
    "sigma_min",
    "sin_t",
    "sphere_refine_min",
    "sphere_sample_max",
    "sphere_sample_min",
    "total_center_of_mass",
    "total_cos_t",
    "total_cos_via_center",
    "total_pairing_min",
    "total_trig_report",
    "trig_report",
]
