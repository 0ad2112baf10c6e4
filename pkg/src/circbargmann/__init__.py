"""Circular Bargmann transforms from circle functions to weighted disk spaces.

Quadrature-backed evaluation of the lowest-level transform and its
Landau-level generalizations, the bases and coherent states they are
built from, and a harness that certifies the underlying identities.
"""

from .bases import (
    ModelParams,
    circular_jacobi,
    ket,
    ket_combination,
    ket_table,
    phi_bergman,
    phi_eigen,
)
from .coherent import (
    CoherentState,
    cs_closed,
    cs_closed_m,
    cs_norm_sq,
    cs_series,
    kernel_diag,
    kernel_partial_sum,
)
from .errors import ConfigError, ConvergenceError, DomainError, ParameterError
from .quadrature import (
    CircleRule,
    DiskRule,
    build_circle_rule,
    build_disk_rule,
    inner_product,
    norm_sq,
)
from .transforms import (
    DiskGrid,
    bargmann,
    bargmann_m,
    isometry_defect,
    polar_grid,
    transform,
    transform_grid,
)
from .verify import (
    SuiteConfig,
    VerificationReport,
    apply_operator_fd,
    eigen_defect,
    landau_level,
    run_suite,
)

__version__ = "0.1.0"
