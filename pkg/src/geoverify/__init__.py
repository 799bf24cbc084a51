"""Verification engine for the left-invariant geometry of F4 = R2 x H2.

The package computes the Levi-Civita connection, curvature, Ricci
soliton residuals and harmonic vector-field residuals of the model
space from second-order jets of the chart metric, and certifies the
published integer tables and closed-form families at machine precision
over sampled points.
"""

from .chart import (
    AnalyticVectorField,
    CoordVector,
    FrameVector,
    Point,
    as_point,
    constant_coordinate_field,
    constant_frame_field,
    coordinate_field,
    coframe_at,
    coframe_matrix,
    frame_at,
    frame_field,
    frame_matrix,
    inverse_metric_at,
    metric_at,
    to_coord,
    to_frame,
)
from .checks import Box, CheckReport, ConfigError, RunConfig, UnknownCheck, CHECK_NAMES, run_all, run_suite
from .curvature import (
    christoffel_at,
    coercivity_check,
    frame_connection,
    metric_compatibility_defect,
    ricci_frame,
    riemann_frame,
    riemann_frame_table,
    scalar_curvature,
)
from .harmonic import (
    CorollaryFamily,
    EXPONENT_MINUS,
    EXPONENT_PLUS,
    NotSTOnly,
    TensionValue,
    corollary_field,
    harmonic_map_residual,
    harmonic_section_equations,
    harmonic_section_residual,
    horizontal_tension,
    horizontal_tension_expanded,
    rough_laplacian,
)
from .jets import DomainError, Jet2, constant, point_jets, reciprocal, seed, sqrt
from .soliton import (
    COMPONENT_PAIRS,
    OneFormValue,
    SOLITON_LAMBDA,
    SolitonParams,
    beta_matrix,
    closedness_defect,
    dual_one_form,
    lie_derivative_metric,
    scalar_laplacian,
    soliton_field,
    soliton_frame_components,
    soliton_residual,
    soliton_system,
)

__version__ = "0.1.0"
